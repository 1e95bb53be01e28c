#include "gal/sdp.hpp"

#include "gal/error.hpp"
#include "gal/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gal {

const char* to_string(ThetaVariant v)
{
    switch (v) {
    case ThetaVariant::Lovasz:
        return "lovasz";
    case ThetaVariant::SchrijverMinus:
        return "schrijver_minus";
    case ThetaVariant::SzegedyPlus:
        return "szegedy_plus";
    }
    return "?";
}

ThetaVariant parse_variant(const std::string& name)
{
    if (name == "theta" || name == "lovasz")
        return ThetaVariant::Lovasz;
    if (name == "theta-minus" || name == "schrijver_minus")
        return ThetaVariant::SchrijverMinus;
    if (name == "theta-plus" || name == "szegedy_plus")
        return ThetaVariant::SzegedyPlus;
    throw InvalidArgument("unknown theta variant '" + name + "'");
}

ThetaProgram::ThetaProgram(Graph g, ThetaVariant v) : graph(std::move(g)), variant(v), weights(Weights::ones(graph.size()))
{
}

ThetaProgram::ThetaProgram(Graph g, ThetaVariant v, Weights w) : graph(std::move(g)), variant(v), weights(std::move(w))
{
    if (weights.size() != graph.size())
        throw InvalidArgument("weight count does not match vertex count");
}

Eigen::MatrixXd ThetaProgram::objective() const
{
    const int n = graph.size();
    Eigen::VectorXd root(n);
    for (int v = 0; v < n; ++v)
        root(v) = std::sqrt(weights.value(v));
    return root * root.transpose();
}

double min_eigenvalue(const Eigen::MatrixXd& m)
{
    if (m.rows() == 0)
        return 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Standard form: max <Π, X>  s.t.  tr X = 1,  X_ab + sign·s_slack = 0 per constrained pair,
// X ⪰ 0, s >= 0. sign 0 is an equality pair (no slack); sign -1 encodes X_ab = s >= 0
// and sign +1 encodes X_ab = -s <= 0.
struct Layout
{
    int n = 0;
    std::vector<int32_t> ia, ib;
    std::vector<int> sign;
    std::vector<int> slack; // pair -> slack index or -1
    int slacks = 0;

    int pairs() const { return static_cast<int>(ia.size()); }
    int m() const { return 1 + pairs(); }
};

Layout make_layout(const Graph& g, ThetaVariant variant)
{
    Layout L;
    L.n = g.size();
    for (int a = 0; a < L.n; ++a)
        for (int b = a + 1; b < L.n; ++b) {
            int sign;
            const bool edge = g.adjacent(a, b);
            if (variant == ThetaVariant::Lovasz) {
                if (!edge)
                    continue;
                sign = 0;
            } else if (variant == ThetaVariant::SchrijverMinus) {
                sign = edge ? 0 : -1;
            } else {
                if (!edge)
                    continue;
                sign = +1;
            }
            L.ia.push_back(a);
            L.ib.push_back(b);
            L.sign.push_back(sign);
            L.slack.push_back(sign == 0 ? -1 : L.slacks++);
        }
    return L;
}

// A(W) for the matrix part: (tr W, sym(W)_{ab} per pair).
VectorXd apply_a(const Layout& L, const MatrixXd& w)
{
    const auto& k = kernels::active();
    VectorXd out(L.m());
    out(0) = w.trace();
    if (L.pairs() > 0)
        k.sym_gather(w.data(), static_cast<size_t>(w.rows()), L.ia.data(), L.ib.data(), out.data() + 1,
                     static_cast<size_t>(L.pairs()));
    return out;
}

// Slack contribution to each constraint row: sign_j * s_{slack(j)}.
VectorXd apply_a_lp(const Layout& L, const VectorXd& s)
{
    VectorXd out = VectorXd::Zero(L.m());
    for (int j = 0; j < L.pairs(); ++j)
        if (L.slack[j] >= 0)
            out(1 + j) = L.sign[j] * s(L.slack[j]);
    return out;
}

MatrixXd apply_at(const Layout& L, const VectorXd& y)
{
    MatrixXd out = MatrixXd::Zero(L.n, L.n);
    out.diagonal().setConstant(y(0));
    for (int j = 0; j < L.pairs(); ++j) {
        out(L.ia[j], L.ib[j]) += 0.5 * y(1 + j);
        out(L.ib[j], L.ia[j]) += 0.5 * y(1 + j);
    }
    return out;
}

VectorXd apply_at_lp(const Layout& L, const VectorXd& y)
{
    VectorXd out(L.slacks);
    for (int j = 0; j < L.pairs(); ++j)
        if (L.slack[j] >= 0)
            out(L.slack[j]) = L.sign[j] * y(1 + j);
    return out;
}

double frobenius(const MatrixXd& a, const MatrixXd& b)
{
    return kernels::active().dot(a.data(), b.data(), static_cast<size_t>(a.size()));
}

// Largest t with M + t·D still positive semidefinite (infinite if D is PSD).
double max_psd_step(const MatrixXd& m, const MatrixXd& d)
{
    Eigen::LLT<MatrixXd> llt(m);
    if (llt.info() != Eigen::Success)
        return 0.0;
    MatrixXd t = llt.matrixL().solve(d);
    t = llt.matrixL().solve(t.transpose()).transpose();
    t = 0.5 * (t + t.transpose());
    double lmin = min_eigenvalue(t);
    return lmin >= 0.0 ? std::numeric_limits<double>::infinity() : -1.0 / lmin;
}

double max_lp_step(const VectorXd& s, const VectorXd& ds)
{
    double step = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (ds(i) < 0)
            step = std::min(step, -s(i) / ds(i));
    return step;
}

// HKM Schur complement M_ij = <A_i, X A_j Z^{-1}> + slack block.
MatrixXd schur_complement(const Layout& L, const MatrixXd& x, const MatrixXd& zi, const VectorXd& s,
                          const VectorXd& zinv)
{
    const auto& k = kernels::active();
    const int m = L.m(), q = L.pairs();
    MatrixXd M(m, m);
    M(0, 0) = frobenius(x, zi);
    if (q > 0) {
        MatrixXd xz = x * zi;
        VectorXd row(q);
        k.sym_gather(xz.data(), static_cast<size_t>(L.n), L.ia.data(), L.ib.data(), row.data(), static_cast<size_t>(q));
        M.block(0, 1, 1, q) = row.transpose();
        M.block(1, 0, q, 1) = row;
        std::vector<double> out(static_cast<size_t>(q));
        for (int i = 0; i < q; ++i) {
            const int a = L.ia[i], b = L.ib[i];
            const size_t rest = static_cast<size_t>(q - i);
            k.schur_row(x.col(a).data(), x.col(b).data(), zi.col(a).data(), zi.col(b).data(), L.ia.data() + i,
                        L.ib.data() + i, out.data(), rest);
            for (size_t j = 0; j < rest; ++j) {
                M(1 + i, 1 + i + static_cast<int>(j)) = out[j];
                M(1 + i + static_cast<int>(j), 1 + i) = out[j];
            }
            if (L.slack[i] >= 0)
                M(1 + i, 1 + i) += s(L.slack[i]) * zinv(L.slack[i]);
        }
    }
    return M;
}

struct Direction
{
    MatrixXd dx, dz;
    VectorXd dy, ds, dzl;
};

struct Iterate
{
    MatrixXd x, z;
    VectorXd y, s, zl;
};

class SchurSolver
{
  public:
    explicit SchurSolver(const MatrixXd& m) : llt_(m)
    {
        // Near the optimum M loses definiteness to rounding. A tiny diagonal
        // shift keeps the blocked Cholesky; pivoted LDLT is much slower.
        const double scale = std::max(1.0, m.diagonal().cwiseAbs().maxCoeff());
        for (double delta = 1e-14; llt_.info() != Eigen::Success && delta <= 1e-8; delta *= 100) {
            MatrixXd shifted = m;
            shifted.diagonal().array() += delta * scale;
            llt_.compute(shifted);
        }
        use_ldlt_ = llt_.info() != Eigen::Success;
        if (use_ldlt_)
            ldlt_.compute(m);
    }
    VectorXd solve(const VectorXd& rhs) const { return use_ldlt_ ? VectorXd(ldlt_.solve(rhs)) : VectorXd(llt_.solve(rhs)); }

  private:
    Eigen::LLT<MatrixXd> llt_;
    Eigen::LDLT<MatrixXd> ldlt_;
    bool use_ldlt_ = false;
};

Direction solve_direction(const Layout& L, const Iterate& it, const MatrixXd& zi, const VectorXd& zinv,
                          const MatrixXd& rd, const VectorXd& rd_lp, const SchurSolver& schur, double tau,
                          const MatrixXd* corr, const VectorXd* corr_lp)
{
    MatrixXd g = tau * zi - it.x * rd * zi;
    if (corr)
        g -= (*corr) * zi;
    VectorXd rhs = apply_a(L, g);
    VectorXd lp_term(L.slacks);
    for (int l = 0; l < L.slacks; ++l) {
        double c = corr_lp ? (*corr_lp)(l) : 0.0;
        lp_term(l) = (tau - c) * zinv(l) - it.s(l) * zinv(l) * rd_lp(l);
    }
    rhs += apply_a_lp(L, lp_term);
    rhs(0) -= 1.0; // b = e_0

    Direction d;
    d.dy = schur.solve(rhs);
    d.dz = apply_at(L, d.dy) + rd;
    d.dzl = apply_at_lp(L, d.dy) + rd_lp;
    MatrixXd dx = tau * zi - it.x - it.x * d.dz * zi;
    if (corr)
        dx -= (*corr) * zi;
    d.dx = 0.5 * (dx + dx.transpose());
    d.ds.resize(L.slacks);
    for (int l = 0; l < L.slacks; ++l) {
        double c = corr_lp ? (*corr_lp)(l) : 0.0;
        d.ds(l) = (tau - c) * zinv(l) - it.s(l) - it.s(l) * zinv(l) * d.dzl(l);
    }
    return d;
}

// Turns an (approximately optimal) iterate into exactly structured certificates:
// the primal gets its pattern imposed, is shifted onto the PSD cone and
// renormalized; the dual gets its sign pattern imposed and λ raised until Z - Π ⪰ 0.
CertifiedValue build_certificate(const ThetaProgram& prog, const Layout& L, const MatrixXd& pi, const Iterate& it)
{
    CertifiedValue c;
    c.variant = prog.variant;

    MatrixXd b = 0.5 * (it.x + it.x.transpose());
    for (int j = 0; j < L.pairs(); ++j) {
        double& lo = b(L.ia[j], L.ib[j]);
        if (L.sign[j] == 0)
            lo = 0.0;
        else if (L.sign[j] < 0)
            lo = std::max(lo, 0.0);
        else
            lo = std::min(lo, 0.0);
        b(L.ib[j], L.ia[j]) = lo;
    }
    double shift = -min_eigenvalue(b);
    if (shift > 0)
        b.diagonal().array() += shift;
    b /= b.trace();

    VectorXd y = it.y;
    for (int j = 0; j < L.pairs(); ++j) {
        if (L.sign[j] < 0)
            y(1 + j) = std::min(y(1 + j), 0.0);
        else if (L.sign[j] > 0)
            y(1 + j) = std::max(y(1 + j), 0.0);
    }
    MatrixXd z = apply_at(L, y);
    double lift = -min_eigenvalue(z - pi);
    if (lift > 0)
        z.diagonal().array() += lift;

    c.primal = std::move(b);
    c.dual = std::move(z);
    c.lambda = c.dual(0, 0);
    c.value = frobenius(c.primal, pi);
    c.gap = c.lambda - c.value;
    CertificateAudit audit = audit_certificate(prog, c);
    c.primal_residual = audit.primal_residual();
    c.dual_residual = audit.dual_residual();
    return c;
}

bool acceptable(const CertifiedValue& c, const SdpOptions& opt)
{
    return c.primal_residual <= opt.tol_feasibility && c.dual_residual <= opt.tol_feasibility &&
           c.gap <= opt.tol_gap * (1.0 + std::abs(c.value));
}

} // namespace

double CertificateAudit::primal_residual() const
{
    return std::max({trace_error, primal_pattern, primal_psd});
}

double CertificateAudit::dual_residual() const
{
    return std::max({dual_diagonal, dual_pattern, dual_psd});
}

CertificateAudit audit_certificate(const ThetaProgram& prog, const CertifiedValue& cert)
{
    const Graph& g = prog.graph;
    const int n = g.size();
    if (cert.primal.rows() != n || cert.dual.rows() != n)
        throw InvalidArgument("certificate dimensions do not match the program");
    const MatrixXd pi = prog.objective();
    const MatrixXd& b = cert.primal;
    const MatrixXd& z = cert.dual;
    CertificateAudit a;
    a.trace_error = std::abs(b.trace() - 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const bool edge = g.adjacent(u, v);
            const double buv = b(u, v), zuv = z(u, v);
            double pv = std::abs(buv - b(v, u));
            double dv = std::abs(zuv - z(v, u));
            switch (prog.variant) {
            case ThetaVariant::Lovasz:
                if (edge)
                    pv = std::max(pv, std::abs(buv));
                else
                    dv = std::max(dv, std::abs(zuv));
                break;
            case ThetaVariant::SchrijverMinus:
                pv = std::max(pv, edge ? std::abs(buv) : std::max(0.0, -buv));
                if (!edge)
                    dv = std::max(dv, std::max(0.0, zuv));
                break;
            case ThetaVariant::SzegedyPlus:
                if (edge) {
                    pv = std::max(pv, std::max(0.0, buv));
                    dv = std::max(dv, std::max(0.0, -zuv));
                } else {
                    dv = std::max(dv, std::abs(zuv));
                }
                break;
            }
            a.primal_pattern = std::max(a.primal_pattern, pv);
            a.dual_pattern = std::max(a.dual_pattern, dv);
        }
    for (int v = 0; v < n; ++v)
        a.dual_diagonal = std::max(a.dual_diagonal, std::abs(z(v, v) - cert.lambda));
    a.primal_psd = std::max(0.0, -min_eigenvalue(0.5 * (b + b.transpose())));
    MatrixXd zp = z - pi;
    a.dual_psd = std::max(0.0, -min_eigenvalue(0.5 * (zp + zp.transpose())));
    double obj = (b.array() * pi.array()).sum();
    a.objective_error = std::abs(obj - cert.value);
    a.gap = cert.lambda - obj;
    return a;
}

double primal_violation(const ThetaProgram& prog, const Eigen::MatrixXd& b)
{
    CertifiedValue c;
    c.variant = prog.variant;
    c.primal = b;
    c.dual = MatrixXd::Zero(b.rows(), b.cols());
    return audit_certificate(prog, c).primal_residual();
}

CertifiedValue solve_theta(const ThetaProgram& prog, const SdpOptions& opt)
{
    const int n = prog.graph.size();
    if (n == 0)
        throw InvalidArgument("theta of a graph with no vertices");
    if (!(opt.tol_gap > 0.0) || !(opt.tol_feasibility > 0.0))
        throw InvalidArgument("tolerances must be positive");

    const Layout L = make_layout(prog.graph, prog.variant);
    const MatrixXd pi = prog.objective();
    const double nu = n + L.slacks;
    const double zeta = std::max(1.0, pi.trace());

    Iterate it;
    it.x = MatrixXd::Identity(n, n) / n;
    it.z = MatrixXd::Identity(n, n) * zeta;
    it.y = VectorXd::Zero(L.m());
    it.s = VectorXd::Constant(L.slacks, 1.0 / n);
    it.zl = VectorXd::Constant(L.slacks, zeta);

    CertifiedValue best;
    bool have_best = false;
    int stalled = 0;
    int idle = 0;

    for (int iter = 1; iter <= opt.max_iterations; ++iter) {
        // Residuals of the current iterate.
        VectorXd rp = -apply_a(L, it.x) - apply_a_lp(L, it.s);
        rp(0) += 1.0;
        MatrixXd rd = apply_at(L, it.y) - pi - it.z;
        VectorXd rd_lp = apply_at_lp(L, it.y) - it.zl;
        const double pobj = frobenius(pi, it.x);
        const double dobj = it.y(0);
        const double mu = (frobenius(it.x, it.z) + it.s.dot(it.zl)) / nu;
        const double rel_gap = std::abs(dobj - pobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
        const double infeas = std::max({rp.lpNorm<Eigen::Infinity>(), rd.lpNorm<Eigen::Infinity>(),
                                        L.slacks ? rd_lp.lpNorm<Eigen::Infinity>() : 0.0});

        if (rel_gap < opt.tol_gap && infeas < 1e-6) {
            CertifiedValue c = build_certificate(prog, L, pi, it);
            c.iterations = iter - 1;
            const bool was_ok = have_best && acceptable(best, opt);
            const double old_gap = have_best ? best.gap : 0.0;
            if (!have_best || (acceptable(c, opt) && (!was_ok || c.gap < best.gap)) ||
                (!was_ok && c.gap < best.gap)) {
                best = std::move(c);
                have_best = true;
            }
            if (acceptable(best, opt)) {
                if (best.gap <= 1e-3 * opt.tol_gap * (1.0 + std::abs(best.value)))
                    break;
                // Accepted already; stop polishing once the gap stops halving.
                idle = was_ok && best.gap > 0.5 * old_gap ? idle + 1 : 0;
                if (idle >= 3)
                    break;
            }
        }
        if (mu < 1e-15 * std::max(1.0, zeta) || stalled >= 5)
            break;

        Eigen::LLT<MatrixXd> zchol(it.z);
        if (zchol.info() != Eigen::Success)
            break;
        MatrixXd zi = zchol.solve(MatrixXd::Identity(n, n));
        zi = 0.5 * (zi + zi.transpose());
        VectorXd zinv = it.zl.cwiseInverse();
        SchurSolver schur(schur_complement(L, it.x, zi, it.s, zinv));

        // Predictor.
        Direction aff = solve_direction(L, it, zi, zinv, rd, rd_lp, schur, 0.0, nullptr, nullptr);
        double ap = std::min({1.0, max_psd_step(it.x, aff.dx), max_lp_step(it.s, aff.ds)});
        double ad = std::min({1.0, max_psd_step(it.z, aff.dz), max_lp_step(it.zl, aff.dzl)});
        const double mu_aff = (frobenius(it.x + ap * aff.dx, it.z + ad * aff.dz) +
                               (it.s + ap * aff.ds).dot(it.zl + ad * aff.dzl)) /
                              nu;
        const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);

        // Corrector.
        MatrixXd corr = aff.dx * aff.dz;
        VectorXd corr_lp = aff.ds.cwiseProduct(aff.dzl);
        Direction d = solve_direction(L, it, zi, zinv, rd, rd_lp, schur, sigma * mu, &corr, &corr_lp);

        const double gamma = 0.98;
        ap = std::min(1.0, gamma * std::min(max_psd_step(it.x, d.dx), max_lp_step(it.s, d.ds)));
        ad = std::min(1.0, gamma * std::min(max_psd_step(it.z, d.dz), max_lp_step(it.zl, d.dzl)));
        stalled = (ap < 1e-8 && ad < 1e-8) ? stalled + 1 : 0;

        it.x += ap * d.dx;
        it.s += ap * d.ds;
        it.y += ad * d.dy;
        it.z += ad * d.dz;
        it.zl += ad * d.dzl;
        it.x = 0.5 * (it.x + it.x.transpose());
        it.z = 0.5 * (it.z + it.z.transpose());
        best.iterations = have_best ? best.iterations : iter;
    }

    if (!have_best) {
        best = build_certificate(prog, L, pi, it);
        best.iterations = opt.max_iterations;
    }
    best.tol_gap = opt.tol_gap;
    if (!acceptable(best, opt))
        throw SolverError(std::string("theta SDP (") + to_string(prog.variant) +
                          ") did not converge: gap " + std::to_string(best.gap) + ", primal residual " +
                          std::to_string(best.primal_residual) + ", dual residual " +
                          std::to_string(best.dual_residual));
    return best;
}

double theta_value(const Graph& g, ThetaVariant v, const SdpOptions& options)
{
    return solve_theta(ThetaProgram(g, v), options).value;
}

} // namespace gal
