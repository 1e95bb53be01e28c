#include "gal/lp.hpp"

#include "gal/cliques.hpp"
#include "gal/error.hpp"

#include <string>

namespace gal {

const char* to_string(LpStatus s)
{
    switch (s) {
    case LpStatus::Optimal:
        return "optimal";
    case LpStatus::Infeasible:
        return "infeasible";
    case LpStatus::Unbounded:
        return "unbounded";
    }
    return "?";
}

namespace {

// Dense tableau: constraint rows hold B^{-1}[A | b]; the last row holds the
// reduced costs d_j = c_B B^{-1} a_j - c_j and the current objective in its
// right-hand-side slot. Maximization, so a basis is optimal when d >= 0.
class Tableau
{
  public:
    Tableau(size_t m, size_t cols) : cols_(cols), t_(m + 1, std::vector<Rational>(cols + 1)), basis_(m, 0) {}

    size_t rows() const { return basis_.size(); }
    Rational& at(size_t i, size_t j) { return t_[i][j]; }
    Rational& rhs(size_t i) { return t_[i][cols_]; }
    Rational& cost(size_t j) { return t_.back()[j]; }
    Rational& objective() { return t_.back()[cols_]; }
    size_t& basic(size_t i) { return basis_[i]; }
    int pivots() const { return pivots_; }

    void pivot(size_t r, size_t c)
    {
        auto& prow = t_[r];
        const Rational inv = 1 / prow[c];
        for (auto& x : prow)
            if (x != 0)
                x *= inv;
        for (size_t i = 0; i < t_.size(); ++i) {
            if (i == r || t_[i][c] == 0)
                continue;
            const Rational f = t_[i][c];
            auto& row = t_[i];
            for (size_t j = 0; j <= cols_; ++j)
                if (prow[j] != 0)
                    row[j] -= f * prow[j];
        }
        basis_[r] = c;
        ++pivots_;
    }

    enum class Step { Optimal, Pivoted, Unbounded };

    // Bland's rule: lowest-index improving column; among min-ratio rows the one
    // whose basic variable has the lowest index.
    Step step(const std::vector<char>& allowed)
    {
        size_t enter = cols_;
        for (size_t j = 0; j < cols_; ++j)
            if (allowed[j] && cost(j) < 0) {
                enter = j;
                break;
            }
        if (enter == cols_)
            return Step::Optimal;
        size_t leave = rows();
        Rational best;
        for (size_t i = 0; i < rows(); ++i) {
            if (t_[i][enter] <= 0)
                continue;
            Rational ratio = t_[i][cols_] / t_[i][enter];
            if (leave == rows() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                leave = i;
                best = std::move(ratio);
            }
        }
        if (leave == rows())
            return Step::Unbounded;
        pivot(leave, enter);
        return Step::Pivoted;
    }

    Step run(const std::vector<char>& allowed)
    {
        while (true) {
            Step s = step(allowed);
            if (s != Step::Pivoted)
                return s;
        }
    }

    void drop_row(size_t i)
    {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
    }

    /// Rebuilds the reduced-cost row for objective c (indexed by column).
    void set_objective(const std::vector<Rational>& c)
    {
        auto& d = t_.back();
        for (size_t j = 0; j < cols_; ++j)
            d[j] = -c[j];
        d[cols_] = 0;
        for (size_t i = 0; i < rows(); ++i) {
            const Rational& cb = c[basis_[i]];
            if (cb == 0)
                continue;
            for (size_t j = 0; j <= cols_; ++j)
                if (t_[i][j] != 0)
                    d[j] += cb * t_[i][j];
        }
    }

  private:
    size_t cols_;
    std::vector<std::vector<Rational>> t_;
    std::vector<size_t> basis_;
    int pivots_ = 0;
};

void verify_optimal(const LpProblem& p, const LpSolution& s)
{
    const size_t m = p.constraints(), n = p.variables();
    Rational primal_obj = 0, dual_obj = 0;
    for (size_t j = 0; j < n; ++j) {
        if (s.primal[j] < 0)
            throw SolverError("simplex produced a negative primal value");
        primal_obj += p.objective[j] * s.primal[j];
    }
    for (size_t i = 0; i < m; ++i) {
        if (s.dual[i] < 0)
            throw SolverError("simplex produced a negative dual value");
        Rational lhs = 0;
        for (size_t j = 0; j < n; ++j)
            lhs += p.rows[i][j] * s.primal[j];
        if (lhs > p.rhs[i])
            throw SolverError("simplex primal violates row " + std::to_string(i));
        dual_obj += p.rhs[i] * s.dual[i];
    }
    for (size_t j = 0; j < n; ++j) {
        Rational lhs = 0;
        for (size_t i = 0; i < m; ++i)
            lhs += p.rows[i][j] * s.dual[i];
        if (lhs < p.objective[j])
            throw SolverError("simplex dual violates column " + std::to_string(j));
    }
    if (primal_obj != dual_obj || primal_obj != s.objective)
        throw SolverError("simplex primal and dual objectives differ");
}

} // namespace

LpSolution solve_lp(const LpProblem& p)
{
    const size_t m = p.constraints(), n = p.variables();
    if (p.rhs.size() != m)
        throw InvalidArgument("LP has " + std::to_string(m) + " rows but " + std::to_string(p.rhs.size()) +
                              " right-hand sides");
    for (const auto& row : p.rows)
        if (row.size() != n)
            throw InvalidArgument("LP row length does not match the number of variables");

    std::vector<size_t> art_of_row(m, SIZE_MAX);
    size_t artificials = 0;
    for (size_t i = 0; i < m; ++i)
        if (p.rhs[i] < 0)
            art_of_row[i] = artificials++;

    const size_t slack0 = n, art0 = n + m, cols = n + m + artificials;
    Tableau t(m, cols);
    for (size_t i = 0; i < m; ++i) {
        const bool flip = p.rhs[i] < 0;
        for (size_t j = 0; j < n; ++j)
            t.at(i, j) = flip ? Rational(-p.rows[i][j]) : p.rows[i][j];
        t.at(i, slack0 + i) = flip ? -1 : 1;
        t.rhs(i) = flip ? Rational(-p.rhs[i]) : p.rhs[i];
        if (flip) {
            t.at(i, art0 + art_of_row[i]) = 1;
            t.basic(i) = art0 + art_of_row[i];
        } else {
            t.basic(i) = slack0 + i;
        }
    }

    std::vector<char> allowed(cols, 1);
    LpSolution sol;
    if (artificials > 0) {
        std::vector<Rational> phase1(cols, 0);
        for (size_t k = 0; k < artificials; ++k)
            phase1[art0 + k] = -1;
        t.set_objective(phase1);
        t.run(allowed);
        if (t.objective() < 0) {
            sol.status = LpStatus::Infeasible;
            sol.pivots = t.pivots();
            return sol;
        }
        // Artificials still basic sit at level zero; pivot them out or drop redundant rows.
        for (size_t i = 0; i < t.rows();) {
            if (t.basic(i) < art0) {
                ++i;
                continue;
            }
            size_t j = 0;
            while (j < art0 && t.at(i, j) == 0)
                ++j;
            if (j < art0) {
                t.pivot(i, j);
                ++i;
            } else {
                t.drop_row(i);
            }
        }
        for (size_t k = 0; k < artificials; ++k)
            allowed[art0 + k] = 0;
    }

    std::vector<Rational> c(cols, 0);
    for (size_t j = 0; j < n; ++j)
        c[j] = p.objective[j];
    t.set_objective(c);
    if (t.run(allowed) == Tableau::Step::Unbounded) {
        sol.status = LpStatus::Unbounded;
        sol.pivots = t.pivots();
        return sol;
    }

    sol.status = LpStatus::Optimal;
    sol.primal.assign(n, 0);
    for (size_t i = 0; i < t.rows(); ++i)
        if (t.basic(i) < n)
            sol.primal[t.basic(i)] = t.rhs(i);
    // The dual multiplier of row i is the reduced cost of its slack column; this
    // holds for flipped rows too since both the row and its slack changed sign.
    sol.dual.resize(m);
    for (size_t i = 0; i < m; ++i)
        sol.dual[i] = t.cost(slack0 + i);
    sol.objective = t.objective();
    sol.pivots = t.pivots();
    verify_optimal(p, sol);
    return sol;
}

LpProblem packing_problem(const Graph& g, const std::vector<Rational>& p, const std::vector<Bitset>& cliques)
{
    if (static_cast<int>(p.size()) != g.size())
        throw InvalidArgument("weight count does not match vertex count");
    LpProblem lp;
    lp.objective = p;
    for (const auto& c : cliques) {
        std::vector<Rational> row(static_cast<size_t>(g.size()), 0);
        c.for_each([&](int v) { row[v] = 1; });
        lp.rows.push_back(std::move(row));
        lp.rhs.emplace_back(1);
    }
    return lp;
}

FractionalPacking fractional_packing(const Graph& g, const Weights& p)
{
    const auto& w = p.exact_values();
    if (static_cast<int>(w.size()) != g.size())
        throw InvalidArgument("weight count does not match vertex count");
    FractionalPacking out;
    out.cliques = maximal_cliques(g).cliques;
    LpSolution sol = solve_lp(packing_problem(g, w, out.cliques));
    if (sol.status != LpStatus::Optimal)
        throw SolverError(std::string("fractional packing LP reported ") + to_string(sol.status));
    out.value = sol.objective;
    out.packing = std::move(sol.primal);
    out.cover = std::move(sol.dual);
    return out;
}

FractionalPacking fractional_packing(const Graph& g)
{
    return fractional_packing(g, Weights::ones(g.size()));
}

} // namespace gal
