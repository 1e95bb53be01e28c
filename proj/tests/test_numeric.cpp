#include "oracles.hpp"

#include "gal/error.hpp"
#include "gal/kernels.hpp"
#include "gal/representations.hpp"
#include "gal/sdp.hpp"

#include <doctest.h>

#include <cstring>
#include <random>

using namespace gal;

namespace {

struct KernelData
{
    std::vector<double> a, b, w, xa, xb, za, zb;
    std::vector<int32_t> ia, ib;
    size_t n = 0, m = 0;
};

KernelData kernel_data(size_t n, size_t m, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int32_t> idx(0, static_cast<int32_t>(n) - 1);
    KernelData d;
    d.n = n;
    d.m = m;
    auto fill = [&](std::vector<double>& v, size_t k) {
        v.resize(k);
        for (auto& x : v)
            x = u(rng) * std::exp(4 * u(rng));
    };
    fill(d.a, n);
    fill(d.b, n);
    fill(d.w, n * n);
    fill(d.xa, n);
    fill(d.xb, n);
    fill(d.za, n);
    fill(d.zb, n);
    for (size_t j = 0; j < m; ++j) {
        d.ia.push_back(idx(rng));
        d.ib.push_back(idx(rng));
    }
    return d;
}

struct KernelOut
{
    double dot;
    std::vector<double> gather, schur;
};

KernelOut run(const kernels::KernelTable& t, const KernelData& d)
{
    KernelOut o;
    o.dot = t.dot(d.a.data(), d.b.data(), d.n);
    o.gather.resize(d.m);
    o.schur.resize(d.m);
    t.sym_gather(d.w.data(), d.n, d.ia.data(), d.ib.data(), o.gather.data(), d.m);
    t.schur_row(d.xa.data(), d.xb.data(), d.za.data(), d.zb.data(), d.ia.data(), d.ib.data(), o.schur.data(), d.m);
    return o;
}

bool same_bits(double x, double y)
{
    return std::memcmp(&x, &y, sizeof x) == 0;
}

Eigen::MatrixXd pi_matrix(const Weights& w)
{
    const int n = w.size();
    Eigen::VectorXd s(n);
    for (int v = 0; v < n; ++v)
        s(v) = std::sqrt(w.value(v));
    return s * s.transpose();
}

} // namespace

TEST_CASE("scalar kernels agree with naive loops")
{
    for (size_t n : {1u, 3u, 4u, 7u, 16u, 33u}) {
        KernelData d = kernel_data(n, 2 * n + 1, n);
        KernelOut o = run(kernels::scalar_table(), d);
        double dot = 0, scale = 0;
        for (size_t i = 0; i < n; ++i) {
            dot += d.a[i] * d.b[i];
            scale += std::abs(d.a[i] * d.b[i]);
        }
        CHECK(std::abs(o.dot - dot) <= 1e-13 * scale);
        for (size_t j = 0; j < d.m; ++j) {
            size_t p = d.ia[j], q = d.ib[j];
            CHECK(o.gather[j] == doctest::Approx((d.w[p * n + q] + d.w[q * n + p]) / 2));
            double s = (d.xa[p] * d.zb[q] + d.xa[q] * d.zb[p] + d.xb[p] * d.za[q] + d.xb[q] * d.za[p]) / 4;
            CHECK(o.schur[j] == doctest::Approx(s));
        }
    }
}

TEST_CASE("AVX2 kernels are bit-identical to the scalar reference")
{
    const kernels::KernelTable* avx = kernels::avx2_table();
    if (!avx || !kernels::cpu_supports(kernels::Isa::Avx2)) {
        MESSAGE("AVX2 kernels unavailable on this machine; skipped");
        return;
    }
    for (size_t n : {1u, 2u, 3u, 4u, 5u, 8u, 9u, 15u, 64u, 101u}) {
        KernelData d = kernel_data(n, 3 * n + 2, 100 + n);
        KernelOut s = run(kernels::scalar_table(), d), v = run(*avx, d);
        CHECK(same_bits(s.dot, v.dot));
        for (size_t j = 0; j < d.m; ++j) {
            CHECK(same_bits(s.gather[j], v.gather[j]));
            CHECK(same_bits(s.schur[j], v.schur[j]));
        }
    }
}

TEST_CASE("the SDP result does not depend on the kernel ISA")
{
    if (!kernels::cpu_supports(kernels::Isa::Avx2)) {
        MESSAGE("AVX2 unavailable; skipped");
        return;
    }
    const kernels::Isa before = kernels::active().isa;
    ThetaProgram prog(random_graph(8, 0.5, 3), ThetaVariant::SchrijverMinus);
    kernels::force(kernels::Isa::Scalar);
    CertifiedValue a = solve_theta(prog);
    kernels::force(kernels::Isa::Avx2);
    CertifiedValue b = solve_theta(prog);
    kernels::force(before);
    CHECK(same_bits(a.value, b.value));
    CHECK(same_bits(a.lambda, b.lambda));
    CHECK(a.iterations == b.iterations);
    CHECK(kernels::name(kernels::Isa::Scalar) == "scalar");
}

TEST_CASE("theta of odd cycles matches the closed form")
{
    for (int n : {5, 7, 9, 11}) {
        CertifiedValue c = solve_theta(ThetaProgram(cycle_graph(n), ThetaVariant::Lovasz));
        CHECK(c.value == doctest::Approx(oracle::theta_odd_cycle(n)).epsilon(1e-7));
        CHECK(c.gap <= 1e-7 * (1 + c.value));
    }
    CHECK(theta_value(cycle_graph(5)) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-8));
}

TEST_CASE("theta of complete, empty and Petersen graphs")
{
    for (auto v : {ThetaVariant::Lovasz, ThetaVariant::SchrijverMinus, ThetaVariant::SzegedyPlus}) {
        CHECK(theta_value(complete_graph(5), v) == doctest::Approx(1.0).epsilon(1e-7));
        CHECK(theta_value(empty_graph(5), v) == doctest::Approx(5.0).epsilon(1e-7));
        CHECK(theta_value(complete_graph(1), v) == doctest::Approx(1.0).epsilon(1e-7));
    }
    CHECK(theta_value(petersen_graph()) == doctest::Approx(4.0).epsilon(1e-7));
    // Petersen has alpha = 4, so the tighter variant is pinned too
    CHECK(theta_value(petersen_graph(), ThetaVariant::SchrijverMinus) == doctest::Approx(4.0).epsilon(1e-7));
}

TEST_CASE("weighted theta on trivial graphs")
{
    Weights w = Weights::exact({1, Rational(9) / Rational(4), Rational(1) / Rational(2), 3});
    CHECK(solve_theta(ThetaProgram(empty_graph(4), ThetaVariant::Lovasz, w)).value ==
          doctest::Approx(1 + 2.25 + 0.5 + 3).epsilon(1e-7));
    CHECK(solve_theta(ThetaProgram(complete_graph(4), ThetaVariant::Lovasz, w)).value ==
          doctest::Approx(3.0).epsilon(1e-7));
    // zero weight vertices contribute nothing
    Weights z = Weights::exact({0, 1, 1, 1, 1});
    CHECK(solve_theta(ThetaProgram(cycle_graph(5), ThetaVariant::Lovasz, z)).value ==
          doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("certificates verify independently")
{
    for (uint64_t s = 1; s <= 6; ++s) {
        Graph g = random_graph(5 + static_cast<int>(s % 4), 0.5, s);
        Weights w = Weights::ones(g.size());
        for (auto v : {ThetaVariant::Lovasz, ThetaVariant::SchrijverMinus, ThetaVariant::SzegedyPlus}) {
            CAPTURE(s);
            CAPTURE(to_string(v));
            ThetaProgram prog(g, v, w);
            CertifiedValue c = solve_theta(prog);
            const Eigen::MatrixXd& b = c.primal;
            const Eigen::MatrixXd& z = c.dual;
            Eigen::MatrixXd pi = pi_matrix(w);
            CHECK(std::abs(b.trace() - 1) <= 1e-8);
            CHECK(oracle::min_eig(b) >= -1e-8);
            CHECK(oracle::min_eig(z - pi) >= -1e-8);
            CHECK((b.cwiseProduct(pi)).sum() == doctest::Approx(c.value).epsilon(1e-10));
            CHECK(c.lambda - c.value <= 1e-7 * (1 + c.value));
            CHECK(c.lambda - c.value >= -1e-9);
            for (int a = 0; a < g.size(); ++a) {
                CHECK(std::abs(z(a, a) - c.lambda) <= 1e-8);
                for (int d = a + 1; d < g.size(); ++d) {
                    bool e = g.adjacent(a, d);
                    switch (v) {
                    case ThetaVariant::Lovasz:
                        if (e)
                            CHECK(std::abs(b(a, d)) <= 1e-8);
                        else
                            CHECK(std::abs(z(a, d)) <= 1e-12);
                        break;
                    case ThetaVariant::SchrijverMinus:
                        if (e)
                            CHECK(std::abs(b(a, d)) <= 1e-8);
                        else
                            CHECK(b(a, d) >= -1e-8);
                        break;
                    case ThetaVariant::SzegedyPlus:
                        if (e)
                            CHECK(b(a, d) <= 1e-8);
                        else
                            CHECK(std::abs(z(a, d)) <= 1e-12);
                        break;
                    }
                }
            }
            auto audit = audit_certificate(prog, c);
            CHECK(audit.primal_residual() <= 1e-8);
            CHECK(audit.dual_residual() <= 1e-8);
        }
    }
}

TEST_CASE("variants are ordered and bracket alpha")
{
    for (uint64_t s = 1; s <= 8; ++s) {
        Graph g = random_graph(7, 0.5, 40 + s);
        double lo = theta_value(g, ThetaVariant::SchrijverMinus);
        double mid = theta_value(g, ThetaVariant::Lovasz);
        double hi = theta_value(g, ThetaVariant::SzegedyPlus);
        CHECK(oracle::alpha(g) <= lo + 1e-6);
        CHECK(lo <= mid + 1e-6);
        CHECK(mid <= hi + 1e-6);
        CHECK(hi <= oracle::clique_cover(g) + 1e-6);
        // theta(G) theta(co-G) >= n
        CHECK(mid * theta_value(complement(g)) >= g.size() - 1e-5);
    }
}

TEST_CASE("solver input validation")
{
    CHECK_THROWS_AS(solve_theta(ThetaProgram(Graph(0), ThetaVariant::Lovasz)), InvalidArgument);
    SdpOptions bad;
    bad.tol_gap = 0;
    CHECK_THROWS_AS(solve_theta(ThetaProgram(cycle_graph(5), ThetaVariant::Lovasz), bad), InvalidArgument);
    SdpOptions tight;
    tight.max_iterations = 2;
    CHECK_THROWS_AS(solve_theta(ThetaProgram(cycle_graph(7), ThetaVariant::Lovasz), tight), SolverError);
    CHECK(parse_variant("theta-plus") == ThetaVariant::SzegedyPlus);
    CHECK(parse_variant("schrijver_minus") == ThetaVariant::SchrijverMinus);
    CHECK_THROWS_AS(parse_variant("theta-star"), InvalidArgument);
}

TEST_CASE("representations carry the certified value")
{
    std::vector<Graph> gs{cycle_graph(5), petersen_graph(), complete_graph(3), empty_graph(3)};
    for (uint64_t s = 1; s <= 6; ++s)
        gs.push_back(random_graph(6 + static_cast<int>(s % 3), 0.5, 70 + s));
    for (const auto& g : gs)
        for (auto v : {ThetaVariant::Lovasz, ThetaVariant::SchrijverMinus, ThetaVariant::SzegedyPlus}) {
            ThetaProgram prog(g, v);
            CertifiedValue c = solve_theta(prog);
            OrthoRep rep = extract_rep(prog, c);
            const int n = g.size();
            REQUIRE(rep.size() == n);
            CHECK(rep.vectors.rows() <= n);
            Eigen::MatrixXd gram = rep.vectors.transpose() * rep.vectors;
            Eigen::VectorXd overlap = rep.vectors.transpose() * rep.handle;
            CHECK(std::abs(rep.handle.norm() - 1) <= 1e-8);
            double sum = 0;
            for (int a = 0; a < n; ++a) {
                CHECK(std::abs(gram(a, a) - 1) <= 1e-8);
                CHECK(overlap(a) >= -1e-9);
                CHECK(std::abs(rep.weights[a] - overlap(a) * overlap(a)) <= 1e-9);
                sum += overlap(a) * overlap(a);
                for (int d = a + 1; d < n; ++d) {
                    if (v != ThetaVariant::SzegedyPlus && g.adjacent(a, d))
                        CHECK(std::abs(gram(a, d)) <= 1e-7);
                    if (v == ThetaVariant::SzegedyPlus && g.adjacent(a, d))
                        CHECK(gram(a, d) <= 1e-7);
                    if (v == ThetaVariant::SchrijverMinus)
                        CHECK(gram(a, d) >= -1e-7);
                }
            }
            CHECK(sum == doctest::Approx(c.value).epsilon(1e-6));
            CHECK(validate_rep(rep, g).worst(rep.kind) <= 1e-7);

            Eigen::MatrixXd b = reconstruct_primal(rep);
            CHECK(b.sum() == doctest::Approx(c.value).epsilon(1e-6));
            CHECK(primal_violation(prog, b) <= 1e-7);
            CHECK(min_nonzero_row_sum(c.primal) >= -1e-8);
        }
}

TEST_CASE("representation kinds follow the variants")
{
    CHECK(rep_kind_for(ThetaVariant::Lovasz) == RepKind::OrOfComplement);
    CHECK(rep_kind_for(ThetaVariant::SchrijverMinus) == RepKind::NonnegOr);
    CHECK(rep_kind_for(ThetaVariant::SzegedyPlus) == RepKind::Obtuse);
    for (auto k : {RepKind::OrOfComplement, RepKind::NonnegOr, RepKind::Obtuse})
        CHECK(rep_kind_for(variant_for(k)) == k);
}

TEST_CASE("a corrupted certificate is refused")
{
    ThetaProgram prog(cycle_graph(5), ThetaVariant::Lovasz);
    CertifiedValue c = solve_theta(prog);
    c.primal(0, 1) = c.primal(1, 0) = 0.2; // 0-1 is an edge
    CHECK_THROWS_AS(extract_rep(prog, c), InvalidArgument);
}
