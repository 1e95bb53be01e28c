#include "gal/parameters.hpp"

#include "gal/error.hpp"

#include <algorithm>
#include <numeric>

namespace gal {

namespace {

template <typename W> struct Slack
{
    static bool no_better(const W& bound, const W& best) { return bound <= best; }
};
template <> struct Slack<double>
{
    static bool no_better(double bound, double best) { return bound <= best + 1e-12; }
};

// Branch-and-bound over a relabelled graph whose vertex i is the i-th vertex of
// the search order, so bitset iteration follows that order.
template <typename W> class MaxWeightIndependentSet
{
  public:
    MaxWeightIndependentSet(const Graph& g, std::vector<W> w) : g_(g), w_(std::move(w)), n_(g.size())
    {
        best_set_ = Bitset(n_);
        current_ = Bitset(n_);
        best_ = W(0);
    }

    void run()
    {
        Bitset p(n_);
        for (int v = 0; v < n_; ++v)
            if (w_[v] > W(0))
                p.set(v);
        search(W(0), p);
    }

    const W& best() const { return best_; }
    const Bitset& best_set() const { return best_set_; }

  private:
    void search(const W& cw, Bitset p)
    {
        if (p.none()) {
            if (cw > best_) {
                best_ = cw;
                best_set_ = current_;
            }
            return;
        }
        // Greedy partition of P into cliques; an independent set meets each at most once.
        std::vector<int> order;
        std::vector<W> ub;
        order.reserve(static_cast<size_t>(p.count()));
        ub.reserve(order.capacity());
        Bitset remaining = p;
        W before(0);
        while (remaining.any()) {
            Bitset joinable = remaining;
            W class_max(0);
            for (int v = joinable.first(); v >= 0; v = joinable.next(v)) {
                remaining.reset(v);
                joinable &= g_.neighbors(v);
                if (w_[v] > class_max)
                    class_max = w_[v];
                order.push_back(v);
                ub.push_back(before + class_max);
            }
            before = before + class_max;
        }

        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (Slack<W>::no_better(cw + ub[i], best_))
                return;
            const int v = order[i];
            Bitset next = p;
            next.subtract(g_.neighbors(v));
            next.reset(v);
            current_.set(v);
            search(cw + w_[v], std::move(next));
            current_.reset(v);
            p.reset(v);
        }
    }

    const Graph& g_;
    std::vector<W> w_;
    int n_;
    W best_;
    Bitset best_set_;
    Bitset current_;
};

// Descending degree, index tiebreak.
std::vector<int> search_order(const Graph& g)
{
    std::vector<int> order(static_cast<size_t>(g.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

Graph relabel(const Graph& g, const std::vector<int>& order)
{
    std::vector<int> pos(order.size());
    for (size_t i = 0; i < order.size(); ++i)
        pos[order[i]] = static_cast<int>(i);
    Graph out(g.size());
    for (auto [u, v] : g.edges())
        out.add_edge(pos[u], pos[v]);
    return out;
}

template <typename W> Bitset solve(const Graph& g, const std::vector<W>& weights, W& value)
{
    auto order = search_order(g);
    Graph h = relabel(g, order);
    std::vector<W> w;
    w.reserve(order.size());
    for (int v : order)
        w.push_back(weights[v]);
    MaxWeightIndependentSet<W> bb(h, std::move(w));
    bb.run();
    Bitset witness(g.size());
    bb.best_set().for_each([&](int i) { witness.set(order[i]); });
    if (!is_independent(g, witness))
        throw SolverError("independent-set witness failed verification");
    value = bb.best();
    return witness;
}

} // namespace

AlphaResult alpha(const Graph& g, const Weights& p)
{
    if (p.size() != g.size())
        throw InvalidArgument("weight count does not match vertex count");
    AlphaResult out;
    if (p.is_exact() && p.is_integral()) {
        auto w = p.integer_values();
        int64_t value = 0;
        out.witness = solve<int64_t>(g, w, value);
        out.exact_value = Rational(static_cast<long>(value));
        out.value = static_cast<double>(value);
    } else if (p.is_exact()) {
        Rational value;
        out.witness = solve<Rational>(g, p.exact_values(), value);
        out.value = value.get_d();
        out.exact_value = std::move(value);
    } else {
        auto w = p.real_values();
        double value = 0.0;
        out.witness = solve<double>(g, w, value);
        double sum = 0.0;
        out.witness.for_each([&](int v) { sum += w[v]; });
        out.value = sum;
    }
    return out;
}

AlphaResult alpha(const Graph& g)
{
    return alpha(g, Weights::ones(g.size()));
}

int alpha_number(const Graph& g)
{
    std::vector<int64_t> ones(static_cast<size_t>(g.size()), 1);
    int64_t value = 0;
    solve<int64_t>(g, ones, value);
    return static_cast<int>(value);
}

} // namespace gal
