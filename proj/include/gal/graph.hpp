#pragma once

#include "gal/bitset.hpp"
#include "gal/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gal {

/// Loopless undirected graph on vertices 0..n-1 with one adjacency bitset per vertex.
class Graph
{
  public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int size() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    /// u ~ v in the confusability sense: equal or adjacent.
    bool confusable(int u, int v) const { return u == v || adj_[u].test(v); }

    const Bitset& neighbors(int v) const { return adj_[v]; }
    Bitset closed_neighbors(int v) const;
    int degree(int v) const { return adj_[v].count(); }

    /// Throws InvalidArgument on a loop or an out-of-range endpoint.
    void add_edge(int u, int v);

    int edge_count() const;
    /// Edges (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    /// Vertex names; product vertices carry "(a,b)" and blow-up copies "a#i".
    const std::string& label(int v) const { return labels_[v]; }
    void set_label(int v, std::string name) { labels_[v] = std::move(name); }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

  private:
    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<std::string> labels_;
};

/// Nonnegative vertex weights, either exact rationals or doubles.
class Weights
{
  public:
    enum class Kind { Exact, Real };

    Weights() = default;
    static Weights ones(int n);
    static Weights exact(std::vector<Rational> values);
    static Weights real(std::vector<double> values);

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ == Kind::Exact; }
    int size() const;

    /// Throws InvalidArgument for real-valued weights.
    const std::vector<Rational>& exact_values() const;
    double value(int v) const;
    std::vector<double> real_values() const;

    bool is_integral() const;
    bool is_all_ones() const;
    /// Integer values; throws InvalidArgument if any weight is not an integer.
    std::vector<int64_t> integer_values() const;

    friend bool operator==(const Weights&, const Weights&);

  private:
    Kind kind_ = Kind::Exact;
    std::vector<Rational> exact_;
    std::vector<double> real_;
};

/// Pointwise product weights on a product vertex set, row-major in (v, v').
Weights product_weights(const Weights& a, const Weights& b);

Graph strong_product(const Graph& g, const Graph& h);
Graph disjunctive_product(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

/// Every vertex v becomes an independent set of m(v) copies adjacent to all copies
/// of v's neighbours; vertices with m(v) = 0 are dropped. Copies are listed
/// vertex-major. Throws InvalidArgument for non-integer or negative weights.
Graph blowup(const Graph& g, const Weights& m);
Graph blowup(const Graph& g, std::span<const int64_t> m);

/// n-fold strong (or disjunctive) power; power 1 is g itself.
Graph strong_power(const Graph& g, int power);
Graph disjunctive_power(const Graph& g, int power);

/// True iff map is a bijection V(a) -> V(b) preserving adjacency and non-adjacency.
bool is_isomorphism(const Graph& a, const Graph& b, std::span<const int> map);

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph petersen_graph();
/// Erdős–Rényi G(n, p); pairs (i < j) are visited lexicographically and each
/// consumes one draw of a 64-bit Mersenne Twister seeded with `seed`.
Graph random_graph(int n, double p, uint64_t seed);

/// Family lookup by name: "cycle", "complete", "empty", "petersen", "random".
/// Throws InvalidArgument for unknown families or bad parameters.
Graph generate(const std::string& family, int n, double p = 0.5, uint64_t seed = 1);

} // namespace gal
