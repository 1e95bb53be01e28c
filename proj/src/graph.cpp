#include "gal/graph.hpp"

#include "gal/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace gal {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n), Bitset(n)), labels_(static_cast<size_t>(n))
{
    if (n < 0)
        throw InvalidArgument("negative vertex count");
    for (int v = 0; v < n; ++v)
        labels_[v] = std::to_string(v);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges)
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

Bitset Graph::closed_neighbors(int v) const
{
    Bitset b = adj_[v];
    b.set(v);
    return b;
}

void Graph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InvalidArgument("edge endpoint out of range");
    if (u == v)
        throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
}

int Graph::edge_count() const
{
    int twice = 0;
    for (const auto& a : adj_)
        twice += a.count();
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

// ---------------------------------------------------------------------------
// Weights

Weights Weights::ones(int n)
{
    return exact(std::vector<Rational>(static_cast<size_t>(n), Rational(1)));
}

Weights Weights::exact(std::vector<Rational> values)
{
    for (const auto& q : values)
        if (q < 0)
            throw InvalidArgument("negative weight " + to_string(q));
    Weights w;
    w.kind_ = Kind::Exact;
    w.exact_ = std::move(values);
    return w;
}

Weights Weights::real(std::vector<double> values)
{
    for (double x : values)
        if (!(x >= 0.0))
            throw InvalidArgument("negative or NaN weight");
    Weights w;
    w.kind_ = Kind::Real;
    w.real_ = std::move(values);
    return w;
}

int Weights::size() const
{
    return static_cast<int>(is_exact() ? exact_.size() : real_.size());
}

const std::vector<Rational>& Weights::exact_values() const
{
    if (!is_exact())
        throw InvalidArgument("exact rational weights required");
    return exact_;
}

double Weights::value(int v) const
{
    return is_exact() ? exact_[v].get_d() : real_[v];
}

std::vector<double> Weights::real_values() const
{
    if (!is_exact())
        return real_;
    std::vector<double> out;
    out.reserve(exact_.size());
    for (const auto& q : exact_)
        out.push_back(q.get_d());
    return out;
}

bool Weights::is_integral() const
{
    if (is_exact())
        return std::all_of(exact_.begin(), exact_.end(), [](const Rational& q) { return q.get_den() == 1; });
    return std::all_of(real_.begin(), real_.end(), [](double x) { return x == std::floor(x) && x < 9.0e15; });
}

bool Weights::is_all_ones() const
{
    if (is_exact())
        return std::all_of(exact_.begin(), exact_.end(), [](const Rational& q) { return q == 1; });
    return std::all_of(real_.begin(), real_.end(), [](double x) { return x == 1.0; });
}

std::vector<int64_t> Weights::integer_values() const
{
    if (!is_integral())
        throw InvalidArgument("integer weights required");
    std::vector<int64_t> out;
    out.reserve(static_cast<size_t>(size()));
    for (int v = 0; v < size(); ++v) {
        if (is_exact()) {
            if (!exact_[v].get_num().fits_slong_p())
                throw InvalidArgument("integer weight too large");
            out.push_back(exact_[v].get_num().get_si());
        } else {
            out.push_back(static_cast<int64_t>(real_[v]));
        }
    }
    return out;
}

bool operator==(const Weights& a, const Weights& b)
{
    return a.kind_ == b.kind_ && a.exact_ == b.exact_ && a.real_ == b.real_;
}

Weights product_weights(const Weights& a, const Weights& b)
{
    if (a.is_exact() && b.is_exact()) {
        std::vector<Rational> out;
        out.reserve(static_cast<size_t>(a.size()) * static_cast<size_t>(b.size()));
        for (const auto& x : a.exact_values())
            for (const auto& y : b.exact_values())
                out.push_back(x * y);
        return Weights::exact(std::move(out));
    }
    std::vector<double> out;
    out.reserve(static_cast<size_t>(a.size()) * static_cast<size_t>(b.size()));
    for (int v = 0; v < a.size(); ++v)
        for (int w = 0; w < b.size(); ++w)
            out.push_back(a.value(v) * b.value(w));
    return Weights::real(std::move(out));
}

// ---------------------------------------------------------------------------
// Products and derived graphs

namespace {

template <typename Rule> Graph product(const Graph& g, const Graph& h, Rule adjacent)
{
    const int n = g.size(), m = h.size();
    Graph out(n * m);
    for (int v = 0; v < n; ++v)
        for (int vp = 0; vp < m; ++vp)
            out.set_label(v * m + vp, "(" + g.label(v) + "," + h.label(vp) + ")");
    for (int a = 0; a < n * m; ++a)
        for (int b = a + 1; b < n * m; ++b)
            if (adjacent(a / m, a % m, b / m, b % m))
                out.add_edge(a, b);
    return out;
}

} // namespace

Graph strong_product(const Graph& g, const Graph& h)
{
    return product(g, h, [&](int v, int vp, int w, int wp) { return g.confusable(v, w) && h.confusable(vp, wp); });
}

Graph disjunctive_product(const Graph& g, const Graph& h)
{
    return product(g, h, [&](int v, int vp, int w, int wp) { return g.adjacent(v, w) || h.adjacent(vp, wp); });
}

Graph complement(const Graph& g)
{
    Graph out(g.size());
    for (int v = 0; v < g.size(); ++v)
        out.set_label(v, g.label(v));
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (!g.adjacent(u, v))
                out.add_edge(u, v);
    return out;
}

Graph blowup(const Graph& g, std::span<const int64_t> m)
{
    if (static_cast<int>(m.size()) != g.size())
        throw InvalidArgument("blow-up weight count does not match vertex count");
    std::vector<int> owner;
    for (int v = 0; v < g.size(); ++v) {
        if (m[v] < 0)
            throw InvalidArgument("negative blow-up weight");
        for (int64_t i = 0; i < m[v]; ++i)
            owner.push_back(v);
    }
    Graph out(static_cast<int>(owner.size()));
    for (size_t a = 0, run = 0; a < owner.size(); ++a) {
        run = (a > 0 && owner[a] == owner[a - 1]) ? run + 1 : 0;
        out.set_label(static_cast<int>(a), g.label(owner[a]) + "#" + std::to_string(run + 1));
    }
    for (size_t a = 0; a < owner.size(); ++a)
        for (size_t b = a + 1; b < owner.size(); ++b)
            if (g.adjacent(owner[a], owner[b]))
                out.add_edge(static_cast<int>(a), static_cast<int>(b));
    return out;
}

Graph blowup(const Graph& g, const Weights& m)
{
    if (m.size() != g.size())
        throw InvalidArgument("blow-up weight count does not match vertex count");
    if (!m.is_integral())
        throw InvalidArgument("blow-up requires integer weights");
    auto counts = m.integer_values();
    return blowup(g, counts);
}

Graph strong_power(const Graph& g, int power)
{
    if (power < 1)
        throw InvalidArgument("graph power must be >= 1");
    Graph out = g;
    for (int k = 1; k < power; ++k)
        out = strong_product(out, g);
    return out;
}

Graph disjunctive_power(const Graph& g, int power)
{
    if (power < 1)
        throw InvalidArgument("graph power must be >= 1");
    Graph out = g;
    for (int k = 1; k < power; ++k)
        out = disjunctive_product(out, g);
    return out;
}

bool is_isomorphism(const Graph& a, const Graph& b, std::span<const int> map)
{
    const int n = a.size();
    if (b.size() != n || static_cast<int>(map.size()) != n)
        return false;
    std::vector<char> hit(static_cast<size_t>(n), 0);
    for (int v : map) {
        if (v < 0 || v >= n || hit[v])
            return false;
        hit[v] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (a.adjacent(u, v) != b.adjacent(map[u], map[v]))
                return false;
    return true;
}

// ---------------------------------------------------------------------------
// Families

Graph cycle_graph(int n)
{
    if (n < 3)
        throw InvalidArgument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete_graph(int n)
{
    if (n < 1)
        throw InvalidArgument("complete graph needs n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n)
{
    if (n < 1)
        throw InvalidArgument("empty graph needs n >= 1");
    return Graph(n);
}

Graph petersen_graph()
{
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);         // outer cycle
        g.add_edge(i, i + 5);               // spokes
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return g;
}

Graph random_graph(int n, double p, uint64_t seed)
{
    if (n < 1)
        throw InvalidArgument("random graph needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidArgument("edge probability must lie in [0,1]");
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (draw < p)
                g.add_edge(u, v);
        }
    return g;
}

Graph generate(const std::string& family, int n, double p, uint64_t seed)
{
    if (family == "cycle")
        return cycle_graph(n);
    if (family == "complete")
        return complete_graph(n);
    if (family == "empty")
        return empty_graph(n);
    if (family == "petersen")
        return petersen_graph();
    if (family == "random")
        return random_graph(n, p, seed);
    throw InvalidArgument("unknown graph family '" + family + "'");
}

} // namespace gal
