// Runs the twelve acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is the number of failed criteria (0 when all pass).

#include "gal/activation.hpp"
#include "gal/error.hpp"
#include "gal/lp.hpp"
#include "gal/parameters.hpp"
#include "gal/representations.hpp"
#include "gal/sdp.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace gal;

namespace {

struct Outcome
{
    bool pass = true;
    std::string detail;
};

struct Criterion
{
    int id;
    const char* title;
    std::function<Outcome()> run;
};

// Collects failures while keeping a short summary line.
class Tally
{
  public:
    void require(bool ok, const std::string& what)
    {
        ++checked_;
        if (!ok) {
            pass_ = false;
            if (failures_.size() < 3)
                failures_.push_back(what);
        }
    }
    void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }

    Outcome outcome() const
    {
        std::ostringstream d;
        d << notes_;
        if (!notes_.empty())
            d << "; ";
        d << checked_ << " checks";
        for (const auto& f : failures_)
            d << "; failed: " << f;
        return {pass_, d.str()};
    }

  private:
    bool pass_ = true;
    int checked_ = 0;
    std::string notes_;
    std::vector<std::string> failures_;
};

std::string num(double x, int digits = 9)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

const auto kVariants = {ThetaVariant::SchrijverMinus, ThetaVariant::Lovasz, ThetaVariant::SzegedyPlus};

bool all_pass(const std::vector<Check>& cs, std::string& why)
{
    for (const auto& c : cs)
        if (!c.pass) {
            why = c.name + " (lhs " + num(c.lhs) + ", rhs " + num(c.rhs) + ")";
            return false;
        }
    return true;
}

Outcome theta_c5()
{
    Tally t;
    CertifiedValue c = solve_theta(ThetaProgram(cycle_graph(5), ThetaVariant::Lovasz));
    t.note("theta " + num(c.value, 11) + ", gap " + num(c.gap, 2));
    t.require(std::abs(c.value - 2.23606798) <= 1e-5, "value");
    t.require(c.gap <= 1e-7, "gap");
    auto audit = audit_certificate(ThetaProgram(cycle_graph(5), ThetaVariant::Lovasz), c);
    t.require(audit.primal_residual() <= 1e-8 && audit.dual_residual() <= 1e-8, "certificate audit");
    return t.outcome();
}

Outcome alpha_c5()
{
    Tally t;
    auto start = std::chrono::steady_clock::now();
    int a1 = alpha_number(cycle_graph(5));
    int a2 = alpha_number(strong_product(cycle_graph(5), cycle_graph(5)));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.note("alpha(C5) " + std::to_string(a1) + ", alpha(C5 x C5) " + std::to_string(a2) + ", " + num(secs, 2) + " s");
    t.require(a1 == 2, "alpha(C5)");
    t.require(a2 == 5, "alpha(C5 x C5)");
    t.require(secs < 1.0, "runtime");
    return t.outcome();
}

Outcome alpha_star_c5()
{
    Tally t;
    Graph g = cycle_graph(5);
    FractionalPacking fp = fractional_packing(g);
    t.note("alpha* " + to_string(fp.value));
    t.require(fp.value == Rational(5) / Rational(2), "value");
    Rational primal = 0, dual = 0;
    for (const auto& x : fp.packing)
        primal += x;
    for (const auto& s : fp.cover)
        dual += s;
    t.require(primal == fp.value && dual == fp.value, "primal and dual objectives");
    for (const auto& c : fp.cliques) {
        Rational load = 0;
        c.for_each([&](int v) { load += fp.packing[v]; });
        t.require(load <= 1, "packing feasibility");
    }
    for (int v = 0; v < g.size(); ++v) {
        Rational cover = 0;
        for (size_t k = 0; k < fp.cliques.size(); ++k)
            if (fp.cliques[k].test(v))
                cover += fp.cover[k];
        t.require(cover >= 1, "cover feasibility");
    }
    return t.outcome();
}

Outcome sandwich()
{
    Tally t;
    double worst = 1e9;
    for (int k = 0; k < 50; ++k) {
        const int n = 3 + k % 6;
        const uint64_t seed = 1000 + k;
        Graph g = random_graph(n, 0.5, seed);
        std::vector<double> chain{static_cast<double>(alpha_number(g))};
        for (auto v : kVariants)
            chain.push_back(solve_theta(ThetaProgram(g, v)).value);
        chain.push_back(to_double(fractional_packing(g).value));
        chain.push_back(sigma(g).size);
        for (size_t i = 0; i + 1 < chain.size(); ++i) {
            double slack = chain[i + 1] - chain[i];
            worst = std::min(worst, slack);
            t.require(slack >= -1e-5, "G(" + std::to_string(n) + ",1/2) seed " + std::to_string(seed) + " link " +
                                          std::to_string(i));
        }
    }
    t.note("50 graphs, n <= 8, worst slack " + num(worst, 3));
    return t.outcome();
}

Outcome multiplicativity()
{
    Tally t;
    double worst = 0;
    for (int k = 0; k < 10; ++k) {
        Graph g = random_graph(3 + k % 4, 0.5, 2000 + 2 * k);
        Graph h = random_graph(6 - k % 3, 0.5, 2001 + 2 * k);
        Graph gh = strong_product(g, h);
        double tg = theta_value(g), th = theta_value(h), tgh = theta_value(gh);
        double rel = std::abs(tgh - tg * th) / (tg * th);
        worst = std::max(worst, rel);
        t.require(rel <= 1e-4, "theta pair " + std::to_string(k));
        Rational ag = fractional_packing(g).value, ah = fractional_packing(h).value;
        t.require(fractional_packing(gh).value == ag * ah, "alpha* pair " + std::to_string(k));
    }
    t.note("10 pairs, worst relative theta error " + num(worst, 2));
    return t.outcome();
}

Outcome weighted_equality()
{
    Tally t;
    std::vector<std::pair<std::string, Graph>> gs{{"C5", cycle_graph(5)}, {"C7", cycle_graph(7)}};
    for (uint64_t s = 1; s <= 3; ++s)
        gs.push_back({"G(7,1/2)#" + std::to_string(s), random_graph(7, 0.5, s)});
    double worst_alpha = 0, worst_partner = 0;
    for (const auto& [id, g] : gs) {
        WeightedEquality eq = check_weighted_equality(g, ActivationVariant::Theta);
        double ra = std::abs(eq.alpha_product - eq.graph_value), rp = std::abs(eq.partner_value - 1);
        worst_alpha = std::max(worst_alpha, ra);
        worst_partner = std::max(worst_partner, rp);
        t.require(ra <= 1e-4, id + " alpha equality");
        t.require(rp <= 1e-5, id + " partner value");
    }
    t.note("worst |alpha - theta| " + num(worst_alpha, 2) + ", worst |theta(co-G,p) - 1| " + num(worst_partner, 2));
    return t.outcome();
}

Outcome series()
{
    Tally t;
    ActivationReport c5 = activation_series(cycle_graph(5), {1, 2, 4, 8}, ActivationVariant::Theta);
    for (const auto& l : c5.levels)
        t.require(std::abs(l.ratio - 1) <= 1e-4, "C5 level " + std::to_string(l.level));
    for (uint64_t s = 1; s <= 2; ++s) {
        Graph g = random_graph(6, 0.5, s);
        ActivationReport r = activation_series(g, {1, 2, 4, 8}, ActivationVariant::Theta);
        for (const auto& l : r.levels) {
            const std::string where = "G(6,1/2)#" + std::to_string(s) + " level " + std::to_string(l.level);
            t.require(l.ratio <= 1 + 1e-4, where + " upper");
            const double bound = 1 - 36.0 / (r.graph_value * l.partner_value);
            t.require(l.ratio >= bound - 1e-4, where + " lower");
        }
    }
    t.note("C5 ratios " + num(c5.levels.front().ratio, 8) + " .. " + num(c5.levels.back().ratio, 8));
    return t.outcome();
}

Outcome rosenfeld()
{
    Tally t;
    std::vector<std::pair<std::string, Graph>> gs{{"C5", cycle_graph(5)}, {"K4", complete_graph(4)}};
    for (uint64_t s = 1; s <= 5; ++s) {
        const int n = 4 + static_cast<int>(s % 3);
        gs.push_back({"G(" + std::to_string(n) + ",1/2)#" + std::to_string(s), random_graph(n, 0.5, s)});
    }
    for (const auto& [id, g] : gs) {
        RosenfeldWitness w = rosenfeld_construct(g, 400, id);
        Rational lhs(static_cast<long>(w.alpha_product));
        Rational rhs = w.alpha_star * Rational(static_cast<long>(w.alpha_blowup));
        t.require(lhs == rhs, id + ": " + to_string(lhs) + " vs " + to_string(rhs));
    }
    t.note("7 graphs, exact rational equality");
    return t.outcome();
}

Outcome pm_duality()
{
    Tally t;
    std::vector<std::pair<std::string, Graph>> gs{{"C5", cycle_graph(5)}};
    for (uint64_t s = 1; s <= 2; ++s)
        gs.push_back({"G(6,1/2)#" + std::to_string(s), random_graph(6, 0.5, s)});
    double worst = 0;
    for (const auto& [id, g] : gs)
        for (auto v : {ActivationVariant::ThetaPmFirst, ActivationVariant::ThetaPmSecond}) {
            WeightedEquality eq = check_weighted_equality(g, v);
            double r = std::abs(eq.alpha_product - eq.graph_value * eq.partner_value);
            worst = std::max(worst, r);
            t.require(r < 1e-4, id + " " + to_string(v));
        }
    t.note("worst residual " + num(worst, 2));
    return t.outcome();
}

Outcome gram_equivalence()
{
    Tally t;
    double worst = 0, worst_row = 0;
    for (int k = 0; k < 10; ++k) {
        Graph g = random_graph(5 + k % 4, 0.5, 3000 + k);
        ThetaProgram prog(g, ThetaVariant::SzegedyPlus);
        CertifiedValue c = solve_theta(prog);
        OrthoRep rep = extract_rep(prog, c);
        double forward = std::abs(rep.weight_sum() - c.value);
        Eigen::MatrixXd b = reconstruct_primal(rep);
        double converse = std::abs(b.sum() - c.value);
        double feasible = primal_violation(prog, b);
        double row = min_nonzero_row_sum(c.primal, 1e-8);
        worst = std::max({worst, forward, converse});
        worst_row = std::min(worst_row, row);
        const std::string id = "graph " + std::to_string(k);
        t.require(forward <= 1e-5, id + " forward");
        t.require(converse <= 1e-5 && feasible <= 1e-5, id + " converse");
        t.require(validate_rep(rep, g).worst(rep.kind) <= 1e-5, id + " obtuse representation");
        t.require(row >= -1e-8, id + " negative row sum " + num(row, 3));
    }
    t.note("worst value mismatch " + num(worst, 2) + ", most negative row sum " + num(worst_row, 2));
    return t.outcome();
}

Outcome hales()
{
    Tally t;
    int s = sigma(strong_product(cycle_graph(5), cycle_graph(5))).size;
    Rational bound = fractional_packing(cycle_graph(5)).value * Rational(sigma(cycle_graph(5)).size);
    t.note("sigma(C5 x C5) " + std::to_string(s) + " >= ceil(" + to_string(bound) + ")");
    t.require(s == 8, "sigma(C5 x C5) = 8");
    t.require(Rational(s) >= bound, "bound");
    for (int k = 0; k < 5; ++k) {
        Graph g = random_graph(4 + k % 3, 0.5, 4000 + 2 * k), h = random_graph(5 - k % 2, 0.5, 4001 + 2 * k);
        HalesReport r = hales_check(g, h);
        std::string why;
        t.require(all_pass(r.checks, why), "pair " + std::to_string(k) + ": " + why);
        t.require(r.sigma_disjunctive >= r.theta_g * r.theta_h - 1e-5, "pair " + std::to_string(k) + " theta");
        t.require(r.sigma_disjunctive >= r.theta_plus_g * r.theta_minus_h - 1e-5,
                  "pair " + std::to_string(k) + " theta+ theta-");
    }
    return t.outcome();
}

Outcome vertex_transitive()
{
    Tally t;
    Graph c5 = cycle_graph(5), co = complement(c5);
    int a = alpha_number(strong_product(c5, co));
    double prod = theta_value(c5) * theta_value(co);
    t.note("alpha " + std::to_string(a) + ", theta product " + num(prod, 10));
    t.require(a == 5, "alpha(C5 x co-C5)");
    t.require(std::abs(prod - 5) <= 1e-4, "theta product");
    return t.outcome();
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "theta(C5) = sqrt 5 with certified gap", theta_c5},
        {2, "alpha(C5) = 2 and alpha(C5 x C5) = 5", alpha_c5},
        {3, "alpha*(C5) = 5/2 with exact LP duality", alpha_star_c5},
        {4, "sandwich chain on 50 random graphs", sandwich},
        {5, "theta and alpha* multiplicativity", multiplicativity},
        {6, "weighted theta activation equality", weighted_equality},
        {7, "blow-up series ratios", series},
        {8, "Rosenfeld-Hales exact equality", rosenfeld},
        {9, "theta-/theta+ activation duality", pm_duality},
        {10, "theta+ Gram equivalence and row sums", gram_equivalence},
        {11, "Hales clique cover inequalities", hales},
        {12, "vertex-transitive exactness on C5", vertex_transitive},
    };
    int failed = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("criterion %2d %s  %s: %s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, o.detail.c_str());
        std::fflush(stdout);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d of %zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
                secs);
    return failed;
}
