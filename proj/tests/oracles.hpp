#pragma once

// Slow, obviously-correct reference computations. None of these call into the
// library's solvers; they only read adjacency.

#include "gal/graph.hpp"
#include "gal/rational.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline std::vector<uint64_t> adjacency_masks(const gal::Graph& g)
{
    std::vector<uint64_t> m(g.size(), 0);
    for (int u = 0; u < g.size(); ++u)
        for (int v = 0; v < g.size(); ++v)
            if (g.adjacent(u, v))
                m[u] |= uint64_t{1} << v;
    return m;
}

/// Max weight over all independent sets by plain include/exclude recursion (n <= 64).
template <typename T> T max_weight_independent(const gal::Graph& g, const std::vector<T>& w)
{
    const auto adj = adjacency_masks(g);
    std::function<T(uint64_t)> best = [&](uint64_t cand) -> T {
        if (!cand)
            return T(0);
        int v = std::countr_zero(cand);
        uint64_t rest = cand & (cand - 1);
        T skip = best(rest);
        T take = w[v] + best(rest & ~adj[v]);
        return take > skip ? take : skip;
    };
    uint64_t all = g.size() == 64 ? ~uint64_t{0} : (uint64_t{1} << g.size()) - 1;
    return best(all);
}

inline int alpha(const gal::Graph& g)
{
    return max_weight_independent<int>(g, std::vector<int>(g.size(), 1));
}

/// Minimum number of colours by trying k = 1, 2, ... with naive backtracking in index order.
inline int chromatic(const gal::Graph& g)
{
    const int n = g.size();
    if (n == 0)
        return 0;
    std::vector<int> col(n, -1);
    std::function<bool(int, int)> place = [&](int v, int k) {
        if (v == n)
            return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = !(g.adjacent(u, v) && col[u] == c);
            if (ok) {
                col[v] = c;
                if (place(v + 1, k))
                    return true;
            }
        }
        col[v] = -1;
        return false;
    };
    for (int k = 1;; ++k)
        if (place(0, k))
            return k;
}

/// Minimum clique partition by subset DP (n <= 20).
inline int clique_cover(const gal::Graph& g)
{
    const int n = g.size();
    const uint32_t full = (uint32_t{1} << n) - 1;
    const auto adj = adjacency_masks(g);
    std::vector<char> clique(size_t{1} << n, 0);
    clique[0] = 1;
    for (uint32_t s = 1; s <= full; ++s) {
        int v = std::countr_zero(s);
        uint32_t rest = s & (s - 1);
        clique[s] = clique[rest] && (rest & ~adj[v]) == 0;
    }
    std::vector<int> f(size_t{1} << n, 1 << 20);
    f[0] = 0;
    for (uint32_t s = 1; s <= full; ++s) {
        int v = std::countr_zero(s);
        uint32_t rest = s & ~(uint32_t{1} << v);
        // v's clique: any clique subset of s containing v
        for (uint32_t sub = rest;; sub = (sub - 1) & rest) {
            uint32_t c = sub | (uint32_t{1} << v);
            if (clique[c])
                f[s] = std::min(f[s], f[s & ~c] + 1);
            if (sub == 0)
                break;
        }
    }
    return f[full];
}

/// Adjacency of the strong product straight from the definition.
inline bool strong_adjacent(const gal::Graph& g, const gal::Graph& h, int a, int b, int x, int y)
{
    if (a == x && b == y)
        return false;
    return (a == x || g.adjacent(a, x)) && (b == y || h.adjacent(b, y));
}

inline bool disjunctive_adjacent(const gal::Graph& g, const gal::Graph& h, int a, int b, int x, int y)
{
    return g.adjacent(a, x) || h.adjacent(b, y);
}

/// ϑ of the odd cycle C_n in closed form: n cos(π/n) / (1 + cos(π/n)).
inline double theta_odd_cycle(int n)
{
    double c = std::cos(std::numbers::pi / n);
    return n * c / (1 + c);
}

inline double min_eig(const Eigen::MatrixXd& m)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

} // namespace oracle
