#include "gal/cliques.hpp"

#include <algorithm>

namespace gal {

namespace {

void expand(const Graph& g, Bitset& r, Bitset p, Bitset x, std::vector<Bitset>& out)
{
    if (p.none()) {
        if (x.none())
            out.push_back(r);
        return;
    }
    // Tomita pivot: the vertex of P ∪ X with the most neighbours in P.
    int pivot = -1, best = -1;
    auto consider = [&](int u) {
        int c = (p & g.neighbors(u)).count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    };
    p.for_each(consider);
    x.for_each(consider);

    Bitset candidates = p;
    candidates.subtract(g.neighbors(pivot));
    for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
        r.set(v);
        expand(g, r, p & g.neighbors(v), x & g.neighbors(v), out);
        r.reset(v);
        p.reset(v);
        x.set(v);
    }
}

} // namespace

CliqueSet maximal_cliques(const Graph& g)
{
    CliqueSet out;
    if (g.size() == 0)
        return out;
    Bitset r(g.size());
    expand(g, r, Bitset::full(g.size()), Bitset(g.size()), out.cliques);
    std::sort(out.cliques.begin(), out.cliques.end(),
              [](const Bitset& a, const Bitset& b) { return a.to_vector() < b.to_vector(); });
    return out;
}

std::vector<Bitset> all_cliques(const Graph& g)
{
    std::vector<Bitset> out;
    Bitset current(g.size());
    auto rec = [&](auto&& self, Bitset candidates) -> void {
        for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
            current.set(v);
            out.push_back(current);
            Bitset next = candidates & g.neighbors(v);
            // only extend with higher-index vertices to list each clique once
            for (int u = next.first(); u >= 0 && u <= v; u = next.next(u))
                next.reset(u);
            self(self, next);
            current.reset(v);
        }
    };
    rec(rec, Bitset::full(g.size()));
    return out;
}

bool is_clique(const Graph& g, const Bitset& s)
{
    for (int u = s.first(); u >= 0; u = s.next(u))
        for (int v = s.next(u); v >= 0; v = s.next(v))
            if (!g.adjacent(u, v))
                return false;
    return true;
}

bool is_independent(const Graph& g, const Bitset& s)
{
    for (int u = s.first(); u >= 0; u = s.next(u))
        if (g.neighbors(u).intersects(s))
            return false;
    return true;
}

} // namespace gal
