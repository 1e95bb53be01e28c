#include "gal/parameters.hpp"

#include "gal/error.hpp"

#include <algorithm>

namespace gal {

namespace {

// DSATUR branch-and-bound. Colours are tried in index order; a fresh colour is
// only opened when it could still beat the incumbent, which also removes
// colour-permutation symmetry.
class Dsatur
{
  public:
    explicit Dsatur(const Graph& g)
        : g_(g), n_(g.size()), color_(static_cast<size_t>(n_), -1),
          forbid_(static_cast<size_t>(n_), std::vector<int>(static_cast<size_t>(n_) + 1, 0)),
          saturation_(static_cast<size_t>(n_), 0)
    {
    }

    Coloring solve()
    {
        Coloring out;
        if (n_ == 0)
            return out;
        best_ = greedy();
        best_coloring_ = color_snapshot_;
        std::fill(color_.begin(), color_.end(), -1);

        // Pre-colour a maximum clique: it fixes |clique| colours without loss of generality.
        auto clique = max_clique();
        lower_ = static_cast<int>(clique.size());
        int used = 0;
        for (int v : clique)
            assign(v, used++);
        if (best_ > lower_)
            branch(static_cast<int>(clique.size()), used);

        out.colors = best_;
        out.color = best_coloring_;
        return out;
    }

  private:
    void assign(int v, int c)
    {
        color_[v] = c;
        g_.neighbors(v).for_each([&](int u) {
            if (forbid_[u][c]++ == 0)
                ++saturation_[u];
        });
    }
    void unassign(int v)
    {
        const int c = color_[v];
        g_.neighbors(v).for_each([&](int u) {
            if (--forbid_[u][c] == 0)
                --saturation_[u];
        });
        color_[v] = -1;
    }

    int pick() const
    {
        int best = -1;
        for (int v = 0; v < n_; ++v) {
            if (color_[v] >= 0)
                continue;
            if (best < 0 || saturation_[v] > saturation_[best] ||
                (saturation_[v] == saturation_[best] && uncolored_degree(v) > uncolored_degree(best)))
                best = v;
        }
        return best;
    }

    int uncolored_degree(int v) const
    {
        int d = 0;
        g_.neighbors(v).for_each([&](int u) { d += color_[u] < 0; });
        return d;
    }

    void branch(int colored, int used)
    {
        if (colored == n_) {
            if (used < best_) {
                best_ = used;
                best_coloring_ = color_;
            }
            return;
        }
        const int v = pick();
        for (int c = 0; c <= used && c < best_ - 1; ++c) {
            if (forbid_[v][c])
                continue;
            assign(v, c);
            branch(colored + 1, std::max(used, c + 1));
            unassign(v);
            if (best_ == lower_)
                return;
        }
    }

    int greedy()
    {
        int used = 0;
        for (int k = 0; k < n_; ++k) {
            int v = pick();
            int c = 0;
            while (forbid_[v][c])
                ++c;
            assign(v, c);
            used = std::max(used, c + 1);
        }
        color_snapshot_ = color_;
        for (int v = 0; v < n_; ++v)
            unassign(v);
        return used;
    }

    std::vector<int> max_clique() const
    {
        AlphaResult r = alpha(complement(g_));
        return r.witness.to_vector();
    }

    const Graph& g_;
    int n_;
    std::vector<int> color_;
    std::vector<std::vector<int>> forbid_;
    std::vector<int> saturation_;
    std::vector<int> color_snapshot_;
    std::vector<int> best_coloring_;
    int best_ = 0;
    int lower_ = 0;
};

} // namespace

bool is_proper_coloring(const Graph& g, const std::vector<int>& color, int colors)
{
    if (static_cast<int>(color.size()) != g.size())
        return false;
    for (int c : color)
        if (c < 0 || c >= colors)
            return false;
    for (auto [u, v] : g.edges())
        if (color[u] == color[v])
            return false;
    return true;
}

Coloring chi(const Graph& g)
{
    Coloring out = Dsatur(g).solve();
    if (!is_proper_coloring(g, out.color, out.colors))
        throw SolverError("colouring witness failed verification");
    return out;
}

CliqueCover sigma(const Graph& g)
{
    Coloring c = chi(complement(g));
    CliqueCover out;
    out.size = c.colors;
    out.cliques.assign(static_cast<size_t>(c.colors), Bitset(g.size()));
    for (int v = 0; v < g.size(); ++v)
        out.cliques[c.color[v]].set(v);
    for (const auto& cl : out.cliques)
        if (!is_clique(g, cl) || cl.none())
            throw SolverError("clique cover witness failed verification");
    return out;
}

} // namespace gal
