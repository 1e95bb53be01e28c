#include "gal/activation.hpp"

#include "gal/error.hpp"
#include "gal/parameters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gal {

const char* to_string(ActivationVariant v)
{
    switch (v) {
    case ActivationVariant::Theta:
        return "theta";
    case ActivationVariant::ThetaPmFirst:
        return "theta_pm_first";
    case ActivationVariant::ThetaPmSecond:
        return "theta_pm_second";
    }
    return "?";
}

ActivationVariant parse_activation(const std::string& name)
{
    if (name == "theta")
        return ActivationVariant::Theta;
    if (name == "theta_pm_first")
        return ActivationVariant::ThetaPmFirst;
    if (name == "theta_pm_second")
        return ActivationVariant::ThetaPmSecond;
    throw InvalidArgument("unknown activation variant '" + name + "'");
}

ThetaVariant source_variant(ActivationVariant v)
{
    switch (v) {
    case ActivationVariant::Theta:
        return ThetaVariant::Lovasz;
    case ActivationVariant::ThetaPmFirst:
        return ThetaVariant::SchrijverMinus;
    case ActivationVariant::ThetaPmSecond:
        return ThetaVariant::SzegedyPlus;
    }
    return ThetaVariant::Lovasz;
}

ThetaVariant partner_variant(ActivationVariant v)
{
    switch (v) {
    case ActivationVariant::Theta:
        return ThetaVariant::Lovasz;
    case ActivationVariant::ThetaPmFirst:
        return ThetaVariant::SzegedyPlus;
    case ActivationVariant::ThetaPmSecond:
        return ThetaVariant::SchrijverMinus;
    }
    return ThetaVariant::Lovasz;
}

Check equal_check(std::string name, std::string ref, double lhs, double rhs, double tol)
{
    Check c{std::move(name), std::move(ref), lhs, rhs, std::abs(lhs - rhs), tol, false, {}, {}};
    c.pass = c.residual <= tol;
    return c;
}

Check le_check(std::string name, std::string ref, double lhs, double rhs, double tol)
{
    Check c{std::move(name), std::move(ref), lhs, rhs, rhs - lhs, tol, false, {}, {}};
    c.pass = c.residual >= -tol;
    return c;
}

Check exact_le_check(std::string name, std::string ref, const Rational& lhs, const Rational& rhs)
{
    Rational diff = rhs - lhs;
    Check c{std::move(name), std::move(ref), lhs.get_d(), rhs.get_d(), diff.get_d(), 0.0, sgn(diff) >= 0, lhs, rhs};
    return c;
}

Check exact_equal_check(std::string name, std::string ref, const Rational& lhs, const Rational& rhs)
{
    Rational diff = lhs - rhs;
    Check c{std::move(name), std::move(ref), lhs.get_d(), rhs.get_d(), Rational(abs(diff)).get_d(), 0.0, sgn(diff) == 0, lhs, rhs};
    return c;
}

namespace {

bool all_pass(const std::vector<Check>& checks)
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void guard(int64_t vertices, int limit, const std::string& what)
{
    if (vertices > limit)
        throw GuardError(what + " has " + std::to_string(vertices) + " vertices, above the limit of " +
                         std::to_string(limit));
}

Weights integer_weights(const std::vector<int64_t>& m)
{
    std::vector<Rational> q;
    q.reserve(m.size());
    for (int64_t x : m)
        q.emplace_back(static_cast<long>(x));
    return Weights::exact(std::move(q));
}

int64_t exact_int(const AlphaResult& r)
{
    return r.exact_value->get_num().get_si();
}

} // namespace

bool WeightedEquality::pass() const
{
    return all_pass(checks);
}

bool ActivationReport::pass() const
{
    return all_pass(checks);
}

bool RosenfeldWitness::pass() const
{
    return all_pass(checks);
}

bool HalesReport::pass() const
{
    return all_pass(checks);
}

ActivationWeights activation_weights(const Graph& g, ActivationVariant variant, const ActivationOptions& opt)
{
    ActivationWeights out;
    out.variant = variant;
    ThetaProgram program(g, source_variant(variant));
    out.certificate = solve_theta(program, opt.sdp);
    out.rep = extract_rep(program, out.certificate, opt.rep, opt.sdp);
    const double sum = out.rep.weight_sum();
    if (std::abs(sum - out.certificate.value) > opt.rep.value)
        throw SolverError("extracted weights sum to " + std::to_string(sum) + ", certified value is " +
                          std::to_string(out.certificate.value));
    out.p = Weights::real(out.rep.weights);
    return out;
}

WeightedEquality check_weighted_equality(const Graph& g, ActivationVariant variant, const ActivationOptions& opt)
{
    const int n = g.size();
    guard(static_cast<int64_t>(n) * n, opt.max_vertices, "G strong-times its complement");
    ActivationWeights aw = activation_weights(g, variant, opt);
    const Graph gc = complement(g);

    WeightedEquality out;
    out.variant = variant;
    out.p = aw.p;
    out.graph_value = aw.certificate.value;
    out.alpha_product = alpha(strong_product(g, gc), product_weights(Weights::ones(n), aw.p)).value;
    CertifiedValue partner = solve_theta(ThetaProgram(gc, partner_variant(variant), aw.p), opt.sdp);
    out.partner_value = partner.value;
    out.partner_gap = partner.gap;

    const std::string ref = variant == ActivationVariant::Theta ? "weighted theta activation"
                                                                : "weighted theta-minus/theta-plus activation";
    out.checks.push_back(equal_check("weight sum equals value(G)", ref, aw.rep.weight_sum(), out.graph_value,
                                     opt.rep.value));
    out.checks.push_back(equal_check("alpha(G x (co-G, p)) equals value(G)", ref, out.alpha_product,
                                     out.graph_value, 1e-4));
    out.checks.push_back(
        equal_check(std::string(to_string(partner_variant(variant))) + "(co-G, p) equals 1", ref,
                    out.partner_value, 1.0, 1e-5));
    return out;
}

std::vector<int64_t> ceil_weights(const std::vector<double>& p, int level)
{
    std::vector<int64_t> m;
    m.reserve(p.size());
    for (double x : p) {
        const double y = level * x;
        const double r = std::round(y);
        m.push_back(static_cast<int64_t>(std::abs(y - r) <= 1e-9 ? r : std::ceil(y)));
    }
    return m;
}

ActivationReport activation_series(const Graph& g, const std::vector<int>& levels, ActivationVariant variant,
                                   const ActivationOptions& opt, const std::string& graph_id)
{
    for (int l : levels)
        if (l < 1)
            throw InvalidArgument("levels must be at least 1");
    guard(static_cast<int64_t>(g.size()) * g.size(), opt.max_vertices, "G strong-times its complement");
    return activation_series(g, activation_weights(g, variant, opt), levels, opt, graph_id);
}

ActivationReport activation_series(const Graph& g, const ActivationWeights& aw, const std::vector<int>& levels,
                                   const ActivationOptions& opt, const std::string& graph_id)
{
    const int n = g.size();
    for (int l : levels)
        if (l < 1)
            throw InvalidArgument("levels must be at least 1");
    if (aw.rep.size() != n)
        throw InvalidArgument("activation weights do not match the graph");
    guard(static_cast<int64_t>(n) * n, opt.max_vertices, "G strong-times its complement");

    const Graph gc = complement(g);
    const Graph product = strong_product(g, gc);
    const auto p = aw.p.real_values();

    ActivationReport report;
    report.graph_id = graph_id;
    report.variant = aw.variant;
    report.graph_value = aw.certificate.value;
    report.graph_gap = aw.certificate.gap;
    report.p = p;
    const std::string ref = aw.variant == ActivationVariant::Theta ? "blow-up activation series"
                                                                   : "theta-minus/theta-plus blow-up series";

    for (int l : levels) {
        SeriesLevel s;
        s.level = l;
        s.blowup = ceil_weights(p, l);
        s.blowup_vertices = std::accumulate(s.blowup.begin(), s.blowup.end(), int64_t{0});
        if (s.blowup_vertices == 0)
            throw InvalidArgument("level " + std::to_string(l) + " gives an empty blow-up");

        const Weights m = integer_weights(s.blowup);
        s.alpha = exact_int(alpha(product, product_weights(Weights::ones(n), m)));
        CertifiedValue partner = solve_theta(ThetaProgram(gc, partner_variant(aw.variant), m), opt.sdp);
        s.partner_value = partner.value;
        s.partner_gap = partner.gap;
        const double bound = report.graph_value * s.partner_value;
        s.ratio = s.alpha / bound;
        s.lower_bound = 1.0 - static_cast<double>(n) * n / bound;
        if (n * s.blowup_vertices <= opt.max_vertices)
            s.alpha_direct = alpha_number(strong_product(g, blowup(gc, s.blowup)));

        const std::string tag = "level " + std::to_string(l) + ": ";
        report.checks.push_back(le_check(tag + "ratio at most 1", ref, s.ratio, 1.0, 1e-4));
        report.checks.push_back(le_check(tag + "ratio above the n^2 bound", ref, s.lower_bound, s.ratio, 1e-4));
        if (s.alpha_direct)
            report.checks.push_back(exact_equal_check(tag + "weighted alpha equals explicit blow-up alpha",
                                                      "blow-up transfer", Rational(static_cast<long>(s.alpha)),
                                                      Rational(static_cast<long>(*s.alpha_direct))));

        // Weight monotonicity squeeze: lp <= ceil(lp) <= lp + 1 entrywise.
        std::vector<double> lo(p.size()), hi(p.size());
        for (size_t v = 0; v < p.size(); ++v) {
            lo[v] = l * p[v];
            hi[v] = l * p[v] + 1.0;
        }
        const Weights ones = Weights::ones(n);
        const double a_lo = alpha(product, product_weights(ones, Weights::real(lo))).value;
        const double a_hi = alpha(product, product_weights(ones, Weights::real(hi))).value;
        report.checks.push_back(le_check(tag + "alpha(lp) <= alpha(ceil lp)", "weight monotonicity", a_lo,
                                         static_cast<double>(s.alpha), 1e-9));
        report.checks.push_back(le_check(tag + "alpha(ceil lp) <= alpha(lp + 1)", "weight monotonicity",
                                         static_cast<double>(s.alpha), a_hi, 1e-9));
        report.levels.push_back(std::move(s));
    }
    return report;
}

RosenfeldWitness rosenfeld_construct(const Graph& g, int max_vertices, const std::string& graph_id)
{
    const int n = g.size();
    guard(static_cast<int64_t>(n) * n, max_vertices, "G strong-times its complement");
    RosenfeldWitness w;
    w.graph_id = graph_id;
    w.packing = fractional_packing(g);
    w.alpha_star = w.packing.value;

    mpz_class big_n = 1;
    for (const auto& t : w.packing.packing)
        mpz_lcm(big_n.get_mpz_t(), big_n.get_mpz_t(), t.get_den_mpz_t());
    if (!big_n.fits_slong_p())
        throw GuardError("packing denominator does not fit in 64 bits");
    w.denominator = big_n.get_si();
    for (const auto& t : w.packing.packing) {
        Rational scaled = t * Rational(big_n);
        w.numerators.push_back(scaled.get_num().get_si());
    }

    const Graph gc = complement(g);
    const Weights m = integer_weights(w.numerators);
    w.blowup = blowup(gc, w.numerators);
    w.alpha_blowup = exact_int(alpha(gc, m));
    w.alpha_product = exact_int(alpha(strong_product(g, gc), product_weights(Weights::ones(n), m)));
    if (static_cast<int64_t>(n) * w.blowup.size() <= max_vertices)
        w.alpha_product_direct = alpha_number(strong_product(g, w.blowup));

    const Rational lhs(static_cast<long>(w.alpha_product));
    const Rational rhs = w.alpha_star * Rational(static_cast<long>(w.alpha_blowup));
    w.residual = lhs - rhs;
    const std::string ref = "Rosenfeld-Hales construction";
    w.checks.push_back(exact_equal_check("alpha(G x H') equals alpha*(G) alpha(H')", ref, lhs, rhs));
    w.checks.push_back(exact_le_check("alpha(H') <= N", ref, Rational(static_cast<long>(w.alpha_blowup)),
                                      Rational(static_cast<long>(w.denominator))));
    if (w.blowup.size() <= max_vertices)
        w.checks.push_back(exact_equal_check("weighted alpha(H') equals explicit alpha(H')", "blow-up transfer",
                                             Rational(static_cast<long>(w.alpha_blowup)),
                                             Rational(static_cast<long>(alpha_number(w.blowup)))));
    if (w.alpha_product_direct)
        w.checks.push_back(exact_equal_check("weighted alpha(G x H') equals explicit alpha", "blow-up transfer", lhs,
                                             Rational(static_cast<long>(*w.alpha_product_direct))));
    return w;
}

HalesReport hales_check(const Graph& g, const Graph& h, const SdpOptions& sdp, int max_vertices)
{
    guard(static_cast<int64_t>(g.size()) * h.size(), max_vertices, "product");
    HalesReport r;
    r.sigma_strong = sigma(strong_product(g, h)).size;
    r.sigma_disjunctive = sigma(disjunctive_product(g, h)).size;
    r.sigma_h = sigma(h).size;
    r.alpha_star_g = fractional_packing(g).value;
    r.theta_g = theta_value(g, ThetaVariant::Lovasz, sdp);
    r.theta_h = theta_value(h, ThetaVariant::Lovasz, sdp);
    r.theta_plus_g = theta_value(g, ThetaVariant::SzegedyPlus, sdp);
    r.theta_minus_h = theta_value(h, ThetaVariant::SchrijverMinus, sdp);

    const double tol = 1e-5;
    r.checks.push_back(exact_le_check("alpha*(G) sigma(H) <= sigma(G x H)", "Hales bound",
                                      r.alpha_star_g * Rational(r.sigma_h), Rational(r.sigma_strong)));
    r.checks.push_back(le_check("theta(G) theta(H) <= sigma(G * H)", "disjunctive theta bound",
                                r.theta_g * r.theta_h, r.sigma_disjunctive, tol));
    r.checks.push_back(le_check("theta+(G) theta-(H) <= sigma(G * H)", "disjunctive theta bound",
                                r.theta_plus_g * r.theta_minus_h, r.sigma_disjunctive, tol));
    return r;
}

ZetaProbe zeta_probe(const Graph& g, const Graph& h, const SdpOptions& sdp, int max_vertices)
{
    guard(static_cast<int64_t>(g.size()) * h.size(), max_vertices, "product");
    ZetaProbe z;
    z.sigma_product = sigma(disjunctive_product(g, h)).size;
    z.sigma_h = sigma(h).size;
    z.sigma_g = sigma(g).size;
    z.ratio = Rational(z.sigma_product) / Rational(z.sigma_h);
    z.theta_g = theta_value(g, ThetaVariant::Lovasz, sdp);
    z.theta_bound = z.theta_g * theta_value(h, ThetaVariant::Lovasz, sdp) / z.sigma_h;
    z.checks.push_back(exact_le_check("sigma(G * H)/sigma(H) <= sigma(G)", "trivial upper bound", z.ratio,
                                      Rational(z.sigma_g)));
    z.checks.push_back(le_check("theta(G) theta(H)/sigma(H) <= sigma(G * H)/sigma(H)", "disjunctive theta bound",
                                z.theta_bound, z.ratio.get_d(), 1e-5));
    return z;
}

} // namespace gal
