#include "gal/cli.hpp"

#include "gal/activation.hpp"
#include "gal/battery.hpp"
#include "gal/error.hpp"
#include "gal/graph_io.hpp"
#include "gal/lp.hpp"
#include "gal/parameters.hpp"
#include "gal/report.hpp"
#include "gal/sdp.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace gal::cli {

namespace {

struct Options
{
    // shared
    double tol_gap = 1e-7;
    uint64_t seed = 1;
    std::string json_path;
    int max_vertices = 0; ///< 0 picks the command default
    std::string output;

    // gen
    std::string family;
    int n = 5;
    double p = 0.5;

    // inputs
    std::string input, second;

    // param
    bool theta = false, theta_minus = false, theta_plus = false, alpha = false, alpha_star = false, sigma = false,
         chi = false;
    int powers = 0;

    // product / blowup
    std::string kind = "strong";
    std::vector<int64_t> multiplicities;

    // activate
    std::string variant = "theta";
    std::vector<int> levels = {1, 2, 4, 8};

    // verify
    std::string suite = "default";
    int count = 50;
    int max_n = 8;
    int jobs = 1;

    // `--json -` sends the document here and drops the text summary.
    std::ostream* stdout_json = nullptr;
};

WeightedGraph load(const std::string& path)
{
    if (path == "-") {
        std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        return parse_graph(text);
    }
    return read_graph_file(path);
}

void emit_graph(const Options& o, const Graph& g, const Weights& w, std::ostream& out)
{
    if (o.output.empty() || o.output == "-")
        out << write_graph(g, w);
    else
        write_graph_file(o.output, g, w);
}

void emit_json(const Options& o, const nlohmann::json& doc)
{
    if (o.json_path.empty())
        return;
    if (o.json_path == "-") {
        *o.stdout_json << report::dump(doc);
        return;
    }
    std::ofstream f(o.json_path);
    if (!f)
        throw InvalidArgument("cannot write '" + o.json_path + "'");
    f << report::dump(doc);
}

std::string fixed(double x, int digits = 7)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

// 3e-9 rather than 3e-09.
std::string gap_text(double g)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0e", g);
    std::string s = buf;
    auto e = s.find('e');
    if (e != std::string::npos) {
        size_t digits = e + 2;
        while (digits + 1 < s.size() && s[digits] == '0')
            s.erase(digits, 1);
    }
    return s;
}

std::string set_text(const Bitset& s)
{
    std::string out = "{";
    bool first = true;
    s.for_each([&](int v) {
        out += (first ? "" : ",") + std::to_string(v);
        first = false;
    });
    return out + "}";
}

void print_failures(const std::vector<Check>& checks, std::ostream& out)
{
    for (const auto& c : checks)
        if (!c.pass)
            out << "FAIL " << c.name << ": lhs " << c.lhs << ", rhs " << c.rhs << ", residual " << c.residual
                << (c.ref.rfind("error: ", 0) == 0 ? " (" + c.ref + ")" : "") << "\n";
}

int guard(const Options& o, int fallback)
{
    return o.max_vertices > 0 ? o.max_vertices : fallback;
}

SdpOptions sdp_options(const Options& o)
{
    SdpOptions s;
    s.tol_gap = o.tol_gap;
    return s;
}

int cmd_gen(const Options& o, std::ostream& out)
{
    Graph g = generate(o.family, o.n, o.p, o.seed);
    emit_graph(o, g, Weights::ones(g.size()), out);
    return Ok;
}

int cmd_param(const Options& o, std::ostream& out)
{
    WeightedGraph wg = load(o.input);
    const Graph& g = wg.graph;
    const Weights& w = wg.weights;
    const bool any = o.theta || o.theta_minus || o.theta_plus || o.alpha || o.alpha_star || o.sigma || o.chi;
    const SdpOptions sdp = sdp_options(o);

    nlohmann::json entry{{"id", o.input}, {"vertices", g.size()}, {"edges", g.edge_count()}};
    if (!w.is_all_ones()) {
        nlohmann::json ws = nlohmann::json::array();
        for (const auto& q : w.exact_values())
            ws.push_back(report::rational(q));
        entry["weights"] = std::move(ws);
    }

    if (!any || o.alpha) {
        AlphaResult a = alpha(g, w);
        out << "alpha = " << to_string(*a.exact_value) << " (witness " << set_text(a.witness) << ")\n";
        entry["alpha"] = report::rational(*a.exact_value);
        entry["alpha_witness"] = a.witness.to_vector();
    }
    auto theta_line = [&](ThetaVariant v, bool requested, const char* label) {
        if (any && !requested)
            return;
        CertifiedValue c = solve_theta(ThetaProgram(g, v, w), sdp);
        out << label << " = " << fixed(c.value) << " (gap " << gap_text(c.gap) << ")\n";
        entry[label] = {{"value", report::real(c.value)},
                        {"lambda", report::real(c.lambda)},
                        {"gap", report::real(c.gap)},
                        {"primal_residual", report::real(c.primal_residual)},
                        {"dual_residual", report::real(c.dual_residual)},
                        {"iterations", c.iterations}};
    };
    theta_line(ThetaVariant::SchrijverMinus, o.theta_minus, "theta_minus");
    theta_line(ThetaVariant::Lovasz, o.theta, "theta");
    theta_line(ThetaVariant::SzegedyPlus, o.theta_plus, "theta_plus");
    if (!any || o.alpha_star) {
        FractionalPacking fp = fractional_packing(g, w);
        out << "alpha_star = " << to_string(fp.value) << " (" << fp.cliques.size()
            << " maximal cliques, primal = dual)\n";
        nlohmann::json packing = nlohmann::json::array();
        for (const auto& t : fp.packing)
            packing.push_back(report::rational(t));
        entry["alpha_star"] = {{"value", report::rational(fp.value)}, {"packing", std::move(packing)}};
    }
    if (!any || o.sigma) {
        CliqueCover c = sigma(g);
        out << "sigma = " << c.size << "\n";
        entry["sigma"] = c.size;
    }
    if (!any || o.chi) {
        Coloring c = chi(g);
        out << "chi = " << c.colors << "\n";
        entry["chi"] = c.colors;
    }
    if (o.powers > 0) {
        AsymptoticTable t = asymptotic_bounds(g, o.powers, guard(o, 40));
        out << "power  vertices  alpha^(1/k)  sigma_strong^(1/k)  sigma_disj^(1/k)\n";
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : t.rows) {
            char line[160];
            std::snprintf(line, sizeof line, "%5d  %8d  %11.7f  %18.7f  %16.7f\n", r.power, r.vertices, r.alpha_root,
                          r.sigma_strong_root, r.sigma_disjunctive_root);
            out << line;
            rows.push_back({{"power", r.power},
                            {"vertices", r.vertices},
                            {"alpha", r.alpha},
                            {"sigma_strong", r.sigma_strong},
                            {"sigma_disjunctive", r.sigma_disjunctive}});
        }
        out << "theta = " << fixed(t.theta) << ", alpha_star = " << to_string(t.alpha_star) << "\n";
        entry["powers"] = std::move(rows);
    }

    nlohmann::json doc = report::document(sdp, o.seed);
    doc["graphs"].push_back(std::move(entry));
    emit_json(o, doc);
    return Ok;
}

int cmd_product(const Options& o, std::ostream& out)
{
    WeightedGraph a = load(o.input), b = load(o.second);
    Graph g;
    if (o.kind == "strong")
        g = strong_product(a.graph, b.graph);
    else if (o.kind == "disjunctive")
        g = disjunctive_product(a.graph, b.graph);
    else
        throw InvalidArgument("unknown product kind '" + o.kind + "'");
    emit_graph(o, g, product_weights(a.weights, b.weights), out);
    return Ok;
}

int cmd_complement(const Options& o, std::ostream& out)
{
    WeightedGraph a = load(o.input);
    emit_graph(o, complement(a.graph), a.weights, out);
    return Ok;
}

int cmd_blowup(const Options& o, std::ostream& out)
{
    WeightedGraph a = load(o.input);
    Graph g;
    if (!o.multiplicities.empty()) {
        if (static_cast<int>(o.multiplicities.size()) != a.graph.size())
            throw InvalidArgument("need one multiplicity per vertex");
        g = blowup(a.graph, o.multiplicities);
    } else {
        g = blowup(a.graph, a.weights);
    }
    emit_graph(o, g, Weights::ones(g.size()), out);
    return Ok;
}

int cmd_activate(const Options& o, std::ostream& out)
{
    WeightedGraph a = load(o.input);
    ActivationOptions ao;
    ao.sdp = sdp_options(o);
    ao.max_vertices = guard(o, 64);
    const ActivationVariant variant = parse_activation(o.variant);

    WeightedEquality eq = check_weighted_equality(a.graph, variant, ao);
    ActivationWeights aw = activation_weights(a.graph, variant, ao);
    ActivationReport r = activation_series(a.graph, aw, o.levels, ao, o.input);

    out << "variant " << to_string(variant) << ": " << to_string(source_variant(variant)) << "(G) = "
        << fixed(r.graph_value) << " (gap " << gap_text(r.graph_gap) << ")\n";
    out << "weights p =";
    for (double x : r.p)
        out << " " << fixed(x);
    out << "\n";
    out << "alpha(G x (co-G, p)) = " << fixed(eq.alpha_product) << ", " << to_string(partner_variant(variant))
        << "(co-G, p) = " << fixed(eq.partner_value) << "\n";
    out << "level  |H|  alpha  partner(H)  ratio      bound\n";
    for (const auto& l : r.levels) {
        char line[160];
        std::snprintf(line, sizeof line, "%5d  %3lld  %5lld  %10.6f  %.7f  %.4f\n", l.level,
                      static_cast<long long>(l.blowup_vertices), static_cast<long long>(l.alpha), l.partner_value,
                      l.ratio, l.lower_bound);
        out << line;
    }
    std::vector<Check> all = eq.checks;
    all.insert(all.end(), r.checks.begin(), r.checks.end());
    print_failures(all, out);

    nlohmann::json doc = report::document(ao.sdp, o.seed);
    doc["graphs"].push_back({{"id", o.input}, {"vertices", a.graph.size()}, {"edges", a.graph.edge_count()}});
    for (const auto& c : all)
        doc["checks"].push_back(report::to_json(c));
    doc["series"].push_back(report::to_json(r));
    emit_json(o, doc);
    return eq.pass() && r.pass() ? Ok : ChecksFailed;
}

int cmd_rosenfeld(const Options& o, std::ostream& out)
{
    WeightedGraph a = load(o.input);
    RosenfeldWitness w = rosenfeld_construct(a.graph, guard(o, 64), o.input);
    out << "packing n/N = (";
    for (size_t v = 0; v < w.numerators.size(); ++v)
        out << (v ? "," : "") << w.numerators[v];
    out << ")/" << w.denominator << "\n";
    out << "alpha*(G) = " << to_string(w.alpha_star) << "\n";
    out << "H' = Blup(co-G, n): " << w.blowup.size() << " vertices\n";
    out << "alpha(G x H') = " << w.alpha_product << ", alpha(H') = " << w.alpha_blowup << "\n";
    out << "equality residual " << to_string(w.residual) << "\n";
    print_failures(w.checks, out);

    nlohmann::json doc = report::document(sdp_options(o), o.seed);
    doc["graphs"].push_back({{"id", o.input}, {"vertices", a.graph.size()}, {"edges", a.graph.edge_count()}});
    for (const auto& c : w.checks)
        doc["checks"].push_back(report::to_json(c));
    doc["witnesses"].push_back(report::to_json(w));
    emit_json(o, doc);
    return w.pass() ? Ok : ChecksFailed;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    std::vector<NamedGraph> gs;
    std::vector<std::pair<int, int>> pairs;
    if (o.suite == "default") {
        gs = default_suite(o.seed);
        pairs = small_pairs(gs, 36);
    } else if (o.suite == "random") {
        gs = random_suite(o.count, o.max_n, o.seed);
        for (int i = 0; i + 1 < static_cast<int>(gs.size()); i += 2)
            if (gs[i].graph.size() * gs[i + 1].graph.size() <= 36)
                pairs.emplace_back(i, i + 1);
    } else {
        throw InvalidArgument("unknown suite '" + o.suite + "'");
    }
    BatteryOptions bo;
    bo.sdp = sdp_options(o);
    bo.seed = o.seed;
    bo.max_vertices = guard(o, 100);
    bo.jobs = o.jobs;
    BatteryReport r = duality_battery(gs, pairs, bo);
    print_failures(r.checks, out);
    out << gs.size() << " graphs, " << pairs.size() << " pairs, " << r.checks.size() << " checks, " << r.failures()
        << " failures\n";
    emit_json(o, report::to_json(r));
    return r.failures() == 0 ? Ok : ChecksFailed;
}

int cmd_zeta(const Options& o, std::ostream& out)
{
    WeightedGraph a = load(o.input), b = load(o.second);
    const SdpOptions sdp = sdp_options(o);
    ZetaProbe z = zeta_probe(a.graph, b.graph, sdp, guard(o, 64));
    HalesReport h = hales_check(a.graph, b.graph, sdp, guard(o, 64));
    out << "sigma(G * H) / sigma(H) = " << z.sigma_product << "/" << z.sigma_h << " = " << to_string(z.ratio)
        << "\n";
    out << "upper bound sigma(G) = " << z.sigma_g << ", theta bound " << fixed(z.theta_bound) << "\n";
    out << "sigma(G x H) = " << h.sigma_strong << " >= alpha*(G) sigma(H) = "
        << to_string(h.alpha_star_g * Rational(h.sigma_h)) << "\n";
    std::vector<Check> all = z.checks;
    all.insert(all.end(), h.checks.begin(), h.checks.end());
    print_failures(all, out);

    nlohmann::json doc = report::document(sdp, o.seed);
    for (const auto& c : all)
        doc["checks"].push_back(report::to_json(c));
    doc["witnesses"].push_back(report::to_json(z));
    doc["witnesses"].push_back(report::to_json(h));
    emit_json(o, doc);
    bool ok = true;
    for (const auto& c : all)
        ok = ok && c.pass;
    return ok ? Ok : ChecksFailed;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Graph parameter laboratory: independence, clique cover, fractional packing and theta numbers"};
    app.name("gal");
    app.require_subcommand(1, 1);

    auto add_tol = [&](CLI::App* c) {
        c->add_option("--tol-gap", o.tol_gap, "SDP duality gap tolerance (relative)")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };
    auto add_json = [&](CLI::App* c) { c->add_option("--json", o.json_path, "write a JSON report to PATH ('-' for stdout)"); };
    auto add_guard = [&](CLI::App* c, int fallback) {
        c->add_option("--max-vertices", o.max_vertices,
                      "largest graph handed to an exact solver (default " + std::to_string(fallback) + ")")
            ->check(CLI::PositiveNumber);
    };
    auto add_out = [&](CLI::App* c) { c->add_option("-o,--output", o.output, "output file (default stdout)"); };

    auto* gen = app.add_subcommand("gen", "generate a named graph family");
    gen->add_option("family", o.family, "cycle, complete, empty, petersen or random")->required();
    gen->add_option("-n", o.n, "vertex count")->capture_default_str();
    gen->add_option("-p", o.p, "edge probability for random graphs")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    gen->add_option("--seed", o.seed, "random seed")->capture_default_str();
    add_out(gen);

    auto* param = app.add_subcommand("param", "compute graph parameters (all of them when no flag is given)");
    param->add_option("graph", o.input, "graph file ('-' for stdin)")->required();
    param->add_flag("--theta", o.theta, "Lovasz number");
    param->add_flag("--theta-minus", o.theta_minus, "Schrijver number");
    param->add_flag("--theta-plus", o.theta_plus, "Szegedy number");
    param->add_flag("--alpha", o.alpha, "independence number");
    param->add_flag("--alpha-star", o.alpha_star, "fractional packing number");
    param->add_flag("--sigma", o.sigma, "clique cover number");
    param->add_flag("--chi", o.chi, "chromatic number");
    param->add_option("--powers", o.powers, "finite power table up to this exponent")->check(CLI::NonNegativeNumber);
    add_tol(param);
    add_json(param);
    add_guard(param, 40);

    auto* product = app.add_subcommand("product", "strong or disjunctive product of two graphs");
    product->add_option("first", o.input, "first factor")->required();
    product->add_option("second", o.second, "second factor")->required();
    product->add_option("--kind", o.kind, "strong or disjunctive")
        ->check(CLI::IsMember({"strong", "disjunctive"}))
        ->capture_default_str();
    add_out(product);

    auto* comp = app.add_subcommand("complement", "complement graph");
    comp->add_option("graph", o.input, "graph file")->required();
    add_out(comp);

    auto* blow = app.add_subcommand("blowup", "blow every vertex up to an independent set");
    blow->add_option("graph", o.input, "graph file; integer vertex weights give the multiplicities")->required();
    blow->add_option("--weights", o.multiplicities, "comma-separated multiplicities overriding the file weights")
        ->delimiter(',')
        ->check(CLI::NonNegativeNumber);
    add_out(blow);

    auto* act = app.add_subcommand("activate", "activating weights and the blow-up series");
    act->add_option("graph", o.input, "graph file")->required();
    act->add_option("--variant", o.variant, "theta, theta_pm_first or theta_pm_second")
        ->check(CLI::IsMember({"theta", "theta_pm_first", "theta_pm_second"}))
        ->capture_default_str();
    act->add_option("--levels", o.levels, "comma-separated blow-up levels")
        ->delimiter(',')
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_tol(act);
    add_json(act);
    add_guard(act, 64);

    auto* ros = app.add_subcommand("rosenfeld", "exact Rosenfeld-Hales witness");
    ros->add_option("graph", o.input, "graph file")->required();
    add_json(ros);
    add_guard(ros, 64);

    auto* ver = app.add_subcommand("verify", "run the duality battery");
    ver->add_option("--suite", o.suite, "default or random")
        ->check(CLI::IsMember({"default", "random"}))
        ->capture_default_str();
    ver->add_option("--count", o.count, "graphs in the random suite")->check(CLI::PositiveNumber)->capture_default_str();
    ver->add_option("--max-n", o.max_n, "largest vertex count in the random suite")
        ->check(CLI::Range(5, 12))
        ->capture_default_str();
    ver->add_option("--seed", o.seed, "random seed")->capture_default_str();
    ver->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    add_tol(ver);
    add_json(ver);
    add_guard(ver, 100);

    auto* zeta = app.add_subcommand("zeta", "finite probe sigma(G * H)/sigma(H) with the Hales inequalities");
    zeta->add_option("G", o.input, "graph G")->required();
    zeta->add_option("H", o.second, "graph H")->required();
    add_tol(zeta);
    add_json(zeta);
    add_guard(zeta, 64);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    o.stdout_json = &out;
    std::ostringstream discarded;
    std::ostream& text = o.json_path == "-" ? discarded : out;

    try {
        if (*gen)
            return cmd_gen(o, out);
        if (*param)
            return cmd_param(o, text);
        if (*product)
            return cmd_product(o, out);
        if (*comp)
            return cmd_complement(o, out);
        if (*blow)
            return cmd_blowup(o, out);
        if (*act)
            return cmd_activate(o, text);
        if (*ros)
            return cmd_rosenfeld(o, text);
        if (*ver)
            return cmd_verify(o, text);
        if (*zeta)
            return cmd_zeta(o, text);
    } catch (const GuardError& e) {
        err << "gal: " << e.what() << "\n";
        return Guard;
    } catch (const SolverError& e) {
        err << "gal: " << e.what() << "\n";
        return Solver;
    } catch (const Error& e) {
        err << "gal: " << e.what() << "\n";
        return Usage;
    }
    return Usage;
}

} // namespace gal::cli
