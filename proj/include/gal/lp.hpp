#pragma once

#include "gal/bitset.hpp"
#include "gal/graph.hpp"
#include "gal/rational.hpp"

#include <vector>

namespace gal {

/// maximize objective·t  subject to  rows·t <= rhs,  t >= 0, all data exact.
struct LpProblem
{
    std::vector<Rational> objective;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;

    size_t variables() const { return objective.size(); }
    size_t constraints() const { return rows.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus s);

struct LpSolution
{
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> primal; ///< t, one per variable
    std::vector<Rational> dual;   ///< y >= 0, one per constraint, with rows^T y >= objective
    Rational objective;
    int pivots = 0;
};

/// Two-phase dense tableau simplex over GMP rationals with Bland's rule, so it
/// terminates on degenerate problems. On Optimal the returned primal/dual pair
/// is checked for exact feasibility and equal objectives before returning.
/// Throws InvalidArgument on inconsistent dimensions.
LpSolution solve_lp(const LpProblem& problem);

/// Builds max Σ p(v) t_v s.t. Σ_{v∈C} t_v <= 1 for every clique in `cliques`.
LpProblem packing_problem(const Graph& g, const std::vector<Rational>& p, const std::vector<Bitset>& cliques);

struct FractionalPacking
{
    Rational value;
    std::vector<Rational> packing;  ///< t_v per vertex
    std::vector<Bitset> cliques;    ///< the maximal cliques used as constraints
    std::vector<Rational> cover;    ///< s_C per clique, Σ_{C∋v} s_C >= p(v)
};

/// Weighted fractional packing number α*(G, p) and its dual fractional clique
/// cover, over maximal cliques. Throws InvalidArgument for real-valued weights.
FractionalPacking fractional_packing(const Graph& g, const Weights& p);
FractionalPacking fractional_packing(const Graph& g);

} // namespace gal
