#pragma once

#include "gal/bitset.hpp"
#include "gal/cliques.hpp"
#include "gal/graph.hpp"
#include "gal/rational.hpp"

#include <optional>
#include <vector>

namespace gal {

/// Maximum-weight independent set. `exact` is set when the weights were exact,
/// in which case `exact_value` holds the optimum; `value` is always filled.
struct AlphaResult
{
    double value = 0.0;
    std::optional<Rational> exact_value;
    Bitset witness;
};

/// Exact (weighted) independence number by branch-and-bound with greedy clique
/// cover bounds. Vertices are processed in descending-degree order (index
/// tiebreak). Integral weights run on 64-bit integers, other exact weights on
/// rationals, real weights on doubles with a 1e-12 pruning slack; for real
/// weights the reported value is the float sum of the witness.
AlphaResult alpha(const Graph& g, const Weights& p);
AlphaResult alpha(const Graph& g);

/// Independence number as an integer (unit weights).
int alpha_number(const Graph& g);

struct Coloring
{
    int colors = 0;
    std::vector<int> color; ///< colour index per vertex, 0-based
};

/// Exact chromatic number by DSATUR branch-and-bound seeded with a maximum clique.
Coloring chi(const Graph& g);

struct CliqueCover
{
    int size = 0;
    std::vector<Bitset> cliques; ///< disjoint cliques covering V
};

/// Exact clique cover number, computed as χ of the complement.
CliqueCover sigma(const Graph& g);

/// True iff `color` is a proper colouring of g using colours 0..colors-1.
bool is_proper_coloring(const Graph& g, const std::vector<int>& color, int colors);

/// Finite-power table of α(G^⊠k)^{1/k}, σ(G^⊠k)^{1/k}, σ(G^∗k)^{1/k} for k = 1..n_max.
struct PowerRow
{
    int power = 0;
    int vertices = 0;
    int alpha = 0;
    int sigma_strong = 0;
    int sigma_disjunctive = 0;
    double alpha_root = 0.0;
    double sigma_strong_root = 0.0;
    double sigma_disjunctive_root = 0.0;
};

struct AsymptoticTable
{
    std::vector<PowerRow> rows;
    double theta = 0.0;
    Rational alpha_star;
};

/// Refuses (GuardError) when G^{n_max} would exceed `max_vertices`.
AsymptoticTable asymptotic_bounds(const Graph& g, int n_max, int max_vertices = 40);

} // namespace gal
