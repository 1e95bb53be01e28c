#pragma once

#include "gal/bitset.hpp"
#include "gal/graph.hpp"

#include <vector>

namespace gal {

/// Maximal cliques of a graph, each as a vertex bitset.
struct CliqueSet
{
    std::vector<Bitset> cliques;

    size_t size() const { return cliques.size(); }
};

/// Enumerates all maximal cliques with Bron–Kerbosch and Tomita pivoting.
/// Output order is deterministic: cliques are sorted by their sorted vertex lists.
/// Isolated vertices appear as singleton cliques, so every vertex is covered.
CliqueSet maximal_cliques(const Graph& g);

/// All cliques (not only maximal ones), including singletons. Exponential; test helper.
std::vector<Bitset> all_cliques(const Graph& g);

bool is_clique(const Graph& g, const Bitset& s);
bool is_independent(const Graph& g, const Bitset& s);

} // namespace gal
