#include "gal/battery.hpp"

#include "gal/error.hpp"
#include "gal/parameters.hpp"

#include <atomic>
#include <cmath>
#include <optional>
#include <thread>

namespace gal {

std::vector<NamedGraph> default_suite(uint64_t seed)
{
    std::vector<NamedGraph> gs = {
        {"C5", cycle_graph(5), true},       {"C7", cycle_graph(7), true}, {"Petersen", petersen_graph(), true},
        {"K5", complete_graph(5), true},    {"coK5", empty_graph(5), true},
    };
    for (int n = 5; n <= 8; ++n) {
        const uint64_t s = seed + static_cast<uint64_t>(n - 5);
        gs.push_back({"G(" + std::to_string(n) + ",1/2)#" + std::to_string(s), random_graph(n, 0.5, s), false});
    }
    return gs;
}

std::vector<NamedGraph> random_suite(int count, int max_n, uint64_t seed)
{
    if (max_n < 5)
        throw InvalidArgument("random suite needs max_n >= 5");
    std::vector<NamedGraph> gs;
    for (int i = 0; i < count; ++i) {
        const int n = 5 + i % (max_n - 4);
        const uint64_t s = seed + static_cast<uint64_t>(i);
        gs.push_back({"G(" + std::to_string(n) + ",1/2)#" + std::to_string(s), random_graph(n, 0.5, s), false});
    }
    return gs;
}

std::vector<std::pair<int, int>> small_pairs(const std::vector<NamedGraph>& gs, int max_product)
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < static_cast<int>(gs.size()); ++i)
        for (int j = i; j < static_cast<int>(gs.size()); ++j)
            if (gs[i].graph.size() * gs[j].graph.size() <= max_product)
                out.emplace_back(i, j);
    return out;
}

int BatteryReport::failures() const
{
    int f = 0;
    for (const auto& c : checks)
        f += !c.pass;
    return f;
}

namespace {

template <typename F> void parallel_for(int count, int jobs, F f)
{
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i)
            f(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    for (int t = 0; t < std::min(jobs, count); ++t)
        workers.emplace_back([&] {
            for (int i; (i = next++) < count;)
                f(i);
        });
    for (auto& w : workers)
        w.join();
}

Check failure(const std::string& name, const std::string& what)
{
    Check c;
    c.name = name;
    c.ref = "error: " + what;
    c.pass = false;
    return c;
}

struct GraphItem
{
    GraphSummary summary;
    std::vector<Check> checks, observations;
    std::optional<ActivationReport> series;
    std::optional<RosenfeldWitness> witness;
    bool ok = false;
};

void append(std::vector<Check>& to, const std::vector<Check>& from, const std::string& prefix)
{
    for (Check c : from) {
        c.name = prefix + c.name;
        to.push_back(std::move(c));
    }
}

GraphItem run_graph(const NamedGraph& ng, const BatteryOptions& opt)
{
    GraphItem item;
    const Graph& g = ng.graph;
    const std::string pre = ng.id + ": ";
    auto& s = item.summary;
    s.id = ng.id;
    s.vertices = g.size();
    s.edges = g.edge_count();
    try {
        s.alpha = alpha_number(g);
        CertifiedValue minus = solve_theta(ThetaProgram(g, ThetaVariant::SchrijverMinus), opt.sdp);
        CertifiedValue lov = solve_theta(ThetaProgram(g, ThetaVariant::Lovasz), opt.sdp);
        CertifiedValue plus = solve_theta(ThetaProgram(g, ThetaVariant::SzegedyPlus), opt.sdp);
        s.theta_minus = minus.value;
        s.theta = lov.value;
        s.theta_plus = plus.value;
        s.gap_minus = minus.gap;
        s.gap = lov.gap;
        s.gap_plus = plus.gap;
        s.alpha_star = fractional_packing(g).value;
        s.sigma = sigma(g).size;
        s.chi = chi(g).colors;
        item.ok = true;

        const std::string ref = "sandwich chain";
        const double tol = 1e-5;
        item.checks.push_back(le_check(pre + "alpha <= theta-", ref, s.alpha, s.theta_minus, tol));
        item.checks.push_back(le_check(pre + "theta- <= theta", ref, s.theta_minus, s.theta, tol));
        item.checks.push_back(le_check(pre + "theta <= theta+", ref, s.theta, s.theta_plus, tol));
        item.checks.push_back(le_check(pre + "theta+ <= alpha*", ref, s.theta_plus, s.alpha_star.get_d(), tol));
        item.checks.push_back(exact_le_check(pre + "alpha <= alpha*", ref, Rational(s.alpha), s.alpha_star));
        item.checks.push_back(exact_le_check(pre + "alpha* <= sigma", ref, s.alpha_star, Rational(s.sigma)));
        item.checks.push_back(exact_equal_check(pre + "chi(co-G) = sigma(G)", "clique cover as colouring",
                                                Rational(chi(complement(g)).colors), Rational(s.sigma)));

        const int64_t square = static_cast<int64_t>(g.size()) * g.size();
        if (ng.vertex_transitive && square <= opt.max_vertices) {
            const Graph gc = complement(g);
            const int a = alpha_number(strong_product(g, gc));
            const double tc = theta_value(gc, ThetaVariant::Lovasz, opt.sdp);
            const double tpc = theta_value(gc, ThetaVariant::SzegedyPlus, opt.sdp);
            const std::string vt = "vertex-transitive equality";
            item.checks.push_back(
                exact_equal_check(pre + "alpha(G x co-G) = |V|", vt, Rational(a), Rational(g.size())));
            item.checks.push_back(equal_check(pre + "theta(G) theta(co-G) = |V|", vt, s.theta * tc, g.size(), 1e-4));
            item.checks.push_back(
                equal_check(pre + "theta-(G) theta+(co-G) = |V|", vt, s.theta_minus * tpc, g.size(), 1e-4));
        }
        if (square <= opt.max_vertices) {
            ActivationOptions ao;
            ao.sdp = opt.sdp;
            ao.max_vertices = opt.max_vertices;
            append(item.checks, check_weighted_equality(g, ActivationVariant::Theta, ao).checks, pre);
            if (!opt.levels.empty()) {
                item.series = activation_series(g, opt.levels, ActivationVariant::Theta, ao, ng.id);
                append(item.checks, item.series->checks, pre);
            }
            item.witness = rosenfeld_construct(g, opt.max_vertices, ng.id);
            append(item.checks, item.witness->checks, pre);
        }
    } catch (const std::exception& e) {
        item.checks.push_back(failure(pre + "graph checks", e.what()));
    }
    return item;
}

std::vector<Check> run_pair(const NamedGraph& a, const GraphSummary& sa, const NamedGraph& b, const GraphSummary& sb,
                            const BatteryOptions& opt, std::vector<Check>& observations)
{
    std::vector<Check> out;
    const std::string pre = a.id + " . " + b.id + ": ";
    try {
        const int64_t size = static_cast<int64_t>(a.graph.size()) * b.graph.size();
        if (size > opt.max_vertices)
            throw GuardError("product has " + std::to_string(size) + " vertices, above the limit of " +
                             std::to_string(opt.max_vertices));
        const Graph strong = strong_product(a.graph, b.graph);
        const Graph disj = disjunctive_product(a.graph, b.graph);
        const double t_strong = theta_value(strong, ThetaVariant::Lovasz, opt.sdp);
        const double t_disj = theta_value(disj, ThetaVariant::Lovasz, opt.sdp);
        const double tm_strong = theta_value(strong, ThetaVariant::SchrijverMinus, opt.sdp);
        const double tp_strong = theta_value(strong, ThetaVariant::SzegedyPlus, opt.sdp);
        const double tp_disj = theta_value(disj, ThetaVariant::SzegedyPlus, opt.sdp);
        const int a_strong = alpha_number(strong);
        const int a_disj = alpha_number(disj);
        const Rational as_strong = fractional_packing(strong).value;

        const double tt = sa.theta * sb.theta;
        const std::string mult = "product multiplicativity";
        out.push_back(equal_check(pre + "theta(G x H) = theta(G) theta(H)", mult, t_strong, tt, 1e-4 * tt));
        out.push_back(equal_check(pre + "theta(G * H) = theta(G) theta(H)", mult, t_disj, tt, 1e-4 * tt));
        out.push_back(exact_equal_check(pre + "alpha*(G x H) = alpha*(G) alpha*(H)", mult, as_strong,
                                        sa.alpha_star * sb.alpha_star));
        out.push_back(exact_equal_check(pre + "alpha(G * H) = alpha(G) alpha(H)", mult, Rational(a_disj),
                                        Rational(sa.alpha * sb.alpha)));

        const std::string one = "one-sided theta-/theta+ product bounds";
        const double tmm = sa.theta_minus * sb.theta_minus;
        const double tpp = sa.theta_plus * sb.theta_plus;
        out.push_back(le_check(pre + "theta-(G) theta-(H) <= theta-(G x H)", one, tmm, tm_strong, 1e-5 * (1 + tmm)));
        out.push_back(le_check(pre + "theta+(G * H) <= theta+(G) theta+(H)", one, tp_disj, tpp, 1e-5 * (1 + tpp)));

        const std::string chain = "alpha <= theta- <= theta- theta+ <= theta+ chain";
        const double tmp = sa.theta_minus * sb.theta_plus;
        out.push_back(le_check(pre + "alpha(G x H) <= theta-(G x H)", chain, a_strong, tm_strong, 1e-5 * (1 + tm_strong)));
        out.push_back(le_check(pre + "theta-(G x H) <= theta-(G) theta+(H)", chain, tm_strong, tmp, 1e-5 * (1 + tmp)));
        out.push_back(le_check(pre + "theta-(G) theta+(H) <= theta+(G * H)", chain, tmp, tp_disj, 1e-5 * (1 + tp_disj)));

        // Multiplicativity of theta+ under the strong product is open in general: record only.
        Check obs = equal_check(pre + "theta+(G x H) vs theta+(G) theta+(H)", "theta+ strong multiplicativity (open)",
                                tp_strong, tpp, 1e-4 * tpp);
        observations.push_back(std::move(obs));
    } catch (const std::exception& e) {
        out.push_back(failure(pre + "pair checks", e.what()));
    }
    return out;
}

} // namespace

BatteryReport duality_battery(const std::vector<NamedGraph>& gs, const std::vector<std::pair<int, int>>& pairs,
                              const BatteryOptions& opt)
{
    for (auto [i, j] : pairs)
        if (i < 0 || j < 0 || i >= static_cast<int>(gs.size()) || j >= static_cast<int>(gs.size()))
            throw InvalidArgument("pair index out of range");

    std::vector<GraphItem> items(gs.size());
    parallel_for(static_cast<int>(gs.size()), opt.jobs, [&](int i) { items[i] = run_graph(gs[i], opt); });

    std::vector<std::vector<Check>> pair_checks(pairs.size()), pair_obs(pairs.size());
    parallel_for(static_cast<int>(pairs.size()), opt.jobs, [&](int k) {
        auto [i, j] = pairs[k];
        if (!items[i].ok || !items[j].ok) {
            pair_checks[k].push_back(failure(gs[i].id + " . " + gs[j].id + ": pair checks", "factor checks failed"));
            return;
        }
        pair_checks[k] = run_pair(gs[i], items[i].summary, gs[j], items[j].summary, opt, pair_obs[k]);
    });

    BatteryReport report;
    report.options = opt;
    for (auto& item : items) {
        report.graphs.push_back(item.summary);
        report.checks.insert(report.checks.end(), item.checks.begin(), item.checks.end());
        report.observations.insert(report.observations.end(), item.observations.begin(), item.observations.end());
        if (item.series)
            report.series.push_back(std::move(*item.series));
        if (item.witness)
            report.witnesses.push_back(std::move(*item.witness));
    }
    for (size_t k = 0; k < pairs.size(); ++k) {
        report.checks.insert(report.checks.end(), pair_checks[k].begin(), pair_checks[k].end());
        report.observations.insert(report.observations.end(), pair_obs[k].begin(), pair_obs[k].end());
    }
    return report;
}

} // namespace gal
