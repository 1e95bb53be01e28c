#include "gal/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace gal::report {

using nlohmann::json;

json rational(const Rational& q)
{
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

json real(double x)
{
    if (!std::isfinite(x))
        return nullptr;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return std::strtod(buf, nullptr);
}

namespace {

json reals(const std::vector<double>& xs)
{
    json a = json::array();
    for (double x : xs)
        a.push_back(real(x));
    return a;
}

json checks(const std::vector<Check>& cs)
{
    json a = json::array();
    for (const auto& c : cs)
        a.push_back(to_json(c));
    return a;
}

} // namespace

json meta(const SdpOptions& sdp, uint64_t seed)
{
    return json{{"version", kVersion},
                {"tolerances",
                 {{"sdp_gap", real(sdp.tol_gap)},
                  {"sdp_feasibility", real(sdp.tol_feasibility)},
                  {"sdp_max_iterations", sdp.max_iterations},
                  {"value_match", real(1e-5)},
                  {"activation_alpha", real(1e-4)},
                  {"sandwich_slack", real(1e-5)},
                  {"ceiling_snap", real(1e-9)}}},
                {"seed", seed}};
}

json document(const SdpOptions& sdp, uint64_t seed)
{
    return json{{"meta", meta(sdp, seed)},
                {"graphs", json::array()},
                {"checks", json::array()},
                {"series", json::array()},
                {"witnesses", json::array()}};
}

json to_json(const Check& c)
{
    json j{{"name", c.name},
           {"paper_ref", c.ref},
           {"lhs", c.exact_lhs ? rational(*c.exact_lhs) : real(c.lhs)},
           {"rhs", c.exact_rhs ? rational(*c.exact_rhs) : real(c.rhs)},
           {"residual", real(c.residual)},
           {"pass", c.pass}};
    if (!c.exact_lhs)
        j["tolerance"] = real(c.tolerance);
    return j;
}

json to_json(const GraphSummary& s)
{
    return json{{"id", s.id},
                {"vertices", s.vertices},
                {"edges", s.edges},
                {"alpha", s.alpha},
                {"theta_minus", real(s.theta_minus)},
                {"theta", real(s.theta)},
                {"theta_plus", real(s.theta_plus)},
                {"gaps", {{"theta_minus", real(s.gap_minus)}, {"theta", real(s.gap)}, {"theta_plus", real(s.gap_plus)}}},
                {"alpha_star", rational(s.alpha_star)},
                {"sigma", s.sigma},
                {"chi", s.chi}};
}

json to_json(const ActivationReport& r)
{
    json levels = json::array();
    for (const auto& l : r.levels) {
        json j{{"level", l.level},
               {"blowup", l.blowup},
               {"blowup_vertices", l.blowup_vertices},
               {"alpha", l.alpha},
               {"partner_value", real(l.partner_value)},
               {"partner_gap", real(l.partner_gap)},
               {"ratio", real(l.ratio)},
               {"lower_bound", real(l.lower_bound)}};
        if (l.alpha_direct)
            j["alpha_direct"] = *l.alpha_direct;
        levels.push_back(std::move(j));
    }
    return json{{"graph", r.graph_id},
                {"variant", to_string(r.variant)},
                {"source", to_string(source_variant(r.variant))},
                {"partner", to_string(partner_variant(r.variant))},
                {"graph_value", real(r.graph_value)},
                {"graph_gap", real(r.graph_gap)},
                {"weights", reals(r.p)},
                {"levels", std::move(levels)},
                {"checks", checks(r.checks)},
                {"pass", r.pass()}};
}

json to_json(const RosenfeldWitness& w)
{
    json packing = json::array();
    for (const auto& t : w.packing.packing)
        packing.push_back(rational(t));
    json cover = json::array();
    for (size_t k = 0; k < w.packing.cliques.size(); ++k)
        if (sgn(w.packing.cover[k]) != 0)
            cover.push_back(json{{"clique", w.packing.cliques[k].to_vector()}, {"weight", rational(w.packing.cover[k])}});
    json j{{"kind", "rosenfeld"},
           {"graph", w.graph_id},
           {"packing", std::move(packing)},
           {"cover", std::move(cover)},
           {"numerators", w.numerators},
           {"denominator", w.denominator},
           {"blowup_vertices", w.blowup.size()},
           {"alpha_product", w.alpha_product},
           {"alpha_blowup", w.alpha_blowup},
           {"alpha_star", rational(w.alpha_star)},
           {"residual", rational(w.residual)},
           {"checks", checks(w.checks)},
           {"pass", w.pass()}};
    if (w.alpha_product_direct)
        j["alpha_product_direct"] = *w.alpha_product_direct;
    return j;
}

json to_json(const HalesReport& h)
{
    return json{{"kind", "hales"},
                {"sigma_strong", h.sigma_strong},
                {"sigma_disjunctive", h.sigma_disjunctive},
                {"sigma_h", h.sigma_h},
                {"alpha_star_g", rational(h.alpha_star_g)},
                {"theta_g", real(h.theta_g)},
                {"theta_h", real(h.theta_h)},
                {"theta_plus_g", real(h.theta_plus_g)},
                {"theta_minus_h", real(h.theta_minus_h)},
                {"checks", checks(h.checks)},
                {"pass", h.pass()}};
}

json to_json(const ZetaProbe& z)
{
    return json{{"kind", "zeta"},
                {"sigma_product", z.sigma_product},
                {"sigma_h", z.sigma_h},
                {"ratio", rational(z.ratio)},
                {"sigma_g", z.sigma_g},
                {"theta_bound", real(z.theta_bound)},
                {"checks", checks(z.checks)}};
}

json to_json(const BatteryReport& r)
{
    json doc = document(r.options.sdp, r.options.seed);
    for (const auto& g : r.graphs)
        doc["graphs"].push_back(to_json(g));
    doc["checks"] = checks(r.checks);
    for (const auto& s : r.series)
        doc["series"].push_back(to_json(s));
    for (const auto& w : r.witnesses)
        doc["witnesses"].push_back(to_json(w));
    doc["observations"] = checks(r.observations);
    doc["summary"] = {{"checks", r.checks.size()}, {"failures", r.failures()}};
    return doc;
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

} // namespace gal::report
