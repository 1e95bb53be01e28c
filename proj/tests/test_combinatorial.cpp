#include "oracles.hpp"

#include "gal/cliques.hpp"
#include "gal/error.hpp"
#include "gal/lp.hpp"
#include "gal/parameters.hpp"

#include <doctest.h>

#include <algorithm>

using namespace gal;

namespace {

Rational q(long a, long b = 1)
{
    return Rational(a) / Rational(b);
}

std::vector<Graph> small_graphs()
{
    std::vector<Graph> gs{cycle_graph(5), cycle_graph(6), cycle_graph(7), complete_graph(4), empty_graph(3),
                          petersen_graph()};
    for (uint64_t s = 1; s <= 12; ++s)
        gs.push_back(random_graph(4 + static_cast<int>(s % 6), 0.5, s));
    return gs;
}

} // namespace

TEST_CASE("simplex on a textbook problem")
{
    // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18  ->  36 at (2, 6)
    LpProblem p{{3, 5}, {{1, 0}, {0, 2}, {3, 2}}, {4, 12, 18}};
    LpSolution s = solve_lp(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == 36);
    CHECK(s.primal == std::vector<Rational>{2, 6});
    // dual: y = (0, 3/2, 1)
    CHECK(s.dual == std::vector<Rational>{0, q(3, 2), 1});
}

TEST_CASE("simplex status detection")
{
    LpProblem unbounded{{1, 1}, {{1, -1}}, {1}};
    CHECK(solve_lp(unbounded).status == LpStatus::Unbounded);
    LpProblem infeasible{{1}, {{1}, {-1}}, {1, -2}};
    CHECK(solve_lp(infeasible).status == LpStatus::Infeasible);
    LpProblem bad{{1, 1}, {{1}}, {1}};
    CHECK_THROWS_AS(solve_lp(bad), InvalidArgument);
}

TEST_CASE("simplex survives degenerate cycling examples")
{
    // Beale's example cycles under the textbook rule without an anti-cycling guard.
    LpProblem beale{{q(3, 4), -150, q(1, 50), -6},
                    {{q(1, 4), -60, q(-1, 25), 9}, {q(1, 2), -90, q(-1, 50), 3}, {0, 0, 1, 0}},
                    {0, 0, 1}};
    LpSolution s = solve_lp(beale);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == q(1, 20));
}

TEST_CASE("maximal cliques against the full clique list")
{
    for (const auto& g : small_graphs()) {
        auto all = all_cliques(g);
        auto maximal = maximal_cliques(g).cliques;
        std::vector<Bitset> expect;
        for (const auto& c : all) {
            bool is_max = true;
            for (int v = 0; v < g.size() && is_max; ++v)
                if (!c.test(v)) {
                    Bitset bigger = c;
                    bigger.set(v);
                    is_max = !is_clique(g, bigger);
                }
            if (is_max)
                expect.push_back(c);
        }
        CHECK(maximal.size() == expect.size());
        for (const auto& c : maximal) {
            CHECK(is_clique(g, c));
            CHECK(std::find(expect.begin(), expect.end(), c) != expect.end());
        }
    }
    CHECK(maximal_cliques(empty_graph(3)).size() == 3);
    CHECK(maximal_cliques(complete_graph(5)).size() == 1);
}

TEST_CASE("alpha matches exhaustive search")
{
    for (const auto& g : small_graphs()) {
        AlphaResult a = alpha(g);
        CHECK(a.value == oracle::alpha(g));
        CHECK(is_independent(g, a.witness));
        CHECK(a.witness.count() == a.value);
    }
    CHECK(alpha_number(cycle_graph(5)) == 2);
    CHECK(alpha_number(strong_product(cycle_graph(5), cycle_graph(5))) == 5);
    CHECK(alpha_number(strong_product(cycle_graph(7), cycle_graph(7))) == 10);
}

TEST_CASE("weighted alpha with exact, integral and real weights")
{
    Graph g = random_graph(9, 0.4, 21);
    std::vector<Rational> wq;
    std::vector<long> wi;
    std::vector<double> wd;
    for (int v = 0; v < 9; ++v) {
        wq.push_back(q(v % 4 + 1, v % 3 + 2));
        wi.push_back(v * 7 % 5 + 1);
        wd.push_back(0.1 + 0.37 * v - 0.03 * v * v);
    }
    AlphaResult a = alpha(g, Weights::exact(wq));
    REQUIRE(a.exact_value);
    CHECK(*a.exact_value == oracle::max_weight_independent<Rational>(g, wq));

    std::vector<Rational> wiq(wi.begin(), wi.end());
    AlphaResult b = alpha(g, Weights::exact(wiq));
    CHECK(*b.exact_value == oracle::max_weight_independent<long>(g, wi));

    AlphaResult c = alpha(g, Weights::real(wd));
    CHECK_FALSE(c.exact_value);
    CHECK(c.value == doctest::Approx(oracle::max_weight_independent<double>(g, wd)).epsilon(1e-12));
    CHECK(is_independent(g, c.witness));

    // zero weights are allowed
    AlphaResult z = alpha(cycle_graph(4), Weights::exact({0, 0, 0, 0}));
    CHECK(*z.exact_value == 0);
}

TEST_CASE("chromatic number and clique cover match exhaustive search")
{
    for (const auto& g : small_graphs()) {
        Coloring c = chi(g);
        CHECK(c.colors == oracle::chromatic(g));
        CHECK(is_proper_coloring(g, c.color, c.colors));
        CliqueCover s = sigma(g);
        CHECK(s.size == oracle::clique_cover(g));
        Bitset seen(g.size());
        for (const auto& k : s.cliques) {
            CHECK(is_clique(g, k));
            CHECK_FALSE(seen.intersects(k));
            seen |= k;
        }
        CHECK(seen.count() == g.size());
    }
    CHECK(chi(petersen_graph()).colors == 3);
    CHECK(sigma(strong_product(cycle_graph(5), cycle_graph(5))).size == 8);
    CHECK(sigma(disjunctive_product(cycle_graph(5), cycle_graph(5))).size == 5);
}

TEST_CASE("fractional packing certificates are exact")
{
    for (const auto& g : small_graphs()) {
        FractionalPacking fp = fractional_packing(g);
        // primal: packing feasible on every clique, value = sum
        Rational sum = 0;
        for (const auto& t : fp.packing) {
            CHECK(t >= 0);
            sum += t;
        }
        CHECK(sum == fp.value);
        for (const auto& c : all_cliques(g)) {
            Rational load = 0;
            c.for_each([&](int v) { load += fp.packing[v]; });
            CHECK(load <= 1);
        }
        // dual: cover every vertex, same value
        Rational cover_sum = 0;
        std::vector<Rational> covered(g.size(), 0);
        for (size_t k = 0; k < fp.cliques.size(); ++k) {
            CHECK(fp.cover[k] >= 0);
            CHECK(is_clique(g, fp.cliques[k]));
            cover_sum += fp.cover[k];
            fp.cliques[k].for_each([&](int v) { covered[v] += fp.cover[k]; });
        }
        CHECK(cover_sum == fp.value);
        for (const auto& c : covered)
            CHECK(c >= 1);
        CHECK(fp.value >= oracle::alpha(g));
        CHECK(fp.value <= oracle::clique_cover(g));
    }
    CHECK(fractional_packing(cycle_graph(5)).value == q(5, 2));
    CHECK(fractional_packing(cycle_graph(7)).value == q(7, 2));
    CHECK(fractional_packing(petersen_graph()).value == 5);
    CHECK(fractional_packing(cycle_graph(6)).value == 3);
}

TEST_CASE("weighted fractional packing puts the weights in the objective")
{
    Graph c5 = cycle_graph(5);
    Weights w = Weights::exact({2, 1, 1, 1, 1});
    FractionalPacking fp = fractional_packing(c5, w);
    // edges 01, 40, 23 cover every vertex to its weight, so 3 is optimal
    Rational obj = 0;
    for (int v = 0; v < 5; ++v)
        obj += w.exact_values()[v] * fp.packing[v];
    CHECK(obj == fp.value);
    CHECK(fp.value == 3);
    CHECK_THROWS_AS(fractional_packing(c5, Weights::real({1, 1, 1, 1, 1})), InvalidArgument);
}

TEST_CASE("finite power table")
{
    AsymptoticTable t = asymptotic_bounds(cycle_graph(5), 2, 40);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].alpha == 2);
    CHECK(t.rows[1].alpha == 5);
    CHECK(t.rows[1].sigma_strong == 8);
    CHECK(t.rows[1].sigma_disjunctive == 5);
    CHECK(t.rows[1].alpha_root == doctest::Approx(std::sqrt(5.0)));
    CHECK(t.alpha_star == q(5, 2));
    CHECK(t.theta == doctest::Approx(std::sqrt(5.0)).epsilon(1e-6));
    CHECK_THROWS_AS(asymptotic_bounds(cycle_graph(5), 3, 40), GuardError);
}
