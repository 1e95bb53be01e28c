#include "gal/representations.hpp"

#include "gal/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace gal {

const char* to_string(RepKind k)
{
    switch (k) {
    case RepKind::OrOfComplement:
        return "or_of_complement";
    case RepKind::NonnegOr:
        return "nonneg_or";
    case RepKind::Obtuse:
        return "obtuse";
    }
    return "?";
}

RepKind rep_kind_for(ThetaVariant v)
{
    switch (v) {
    case ThetaVariant::Lovasz:
        return RepKind::OrOfComplement;
    case ThetaVariant::SchrijverMinus:
        return RepKind::NonnegOr;
    case ThetaVariant::SzegedyPlus:
        return RepKind::Obtuse;
    }
    return RepKind::OrOfComplement;
}

ThetaVariant variant_for(RepKind k)
{
    switch (k) {
    case RepKind::OrOfComplement:
        return ThetaVariant::Lovasz;
    case RepKind::NonnegOr:
        return ThetaVariant::SchrijverMinus;
    case RepKind::Obtuse:
        return ThetaVariant::SzegedyPlus;
    }
    return ThetaVariant::Lovasz;
}

double OrthoRep::weight_sum() const
{
    double s = 0.0;
    for (double p : weights)
        s += p;
    return s;
}

OrthoRep extract_rep(const ThetaProgram& program, const CertifiedValue& cert, const RepTolerances& tol,
                     const SdpOptions& accept)
{
    if (cert.variant != program.variant)
        throw InvalidArgument("certificate variant does not match the program");
    const int n = program.graph.size();
    CertificateAudit audit = audit_certificate(program, cert);
    const double tol_gap = cert.tol_gap > 0 ? cert.tol_gap : accept.tol_gap;
    if (audit.primal_residual() > accept.tol_feasibility || audit.dual_residual() > accept.tol_feasibility ||
        audit.gap > tol_gap * (1.0 + std::abs(cert.value)))
        throw InvalidArgument("certificate rejected: residuals or gap above tolerance");

    const Eigen::MatrixXd b = 0.5 * (cert.primal + cert.primal.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
    std::vector<int> kept;
    for (int i = n - 1; i >= 0; --i)
        if (es.eigenvalues()(i) >= tol.eigen_floor)
            kept.push_back(i);
    const int rank = static_cast<int>(kept.size());

    // psi.col(v) is ψ_v in the rank-dimensional eigenbasis.
    Eigen::MatrixXd psi(rank, n);
    for (int r = 0; r < rank; ++r)
        psi.row(r) = std::sqrt(es.eigenvalues()(kept[r])) * es.eigenvectors().col(kept[r]).transpose();

    std::vector<int> zero_rows;
    for (int v = 0; v < n; ++v)
        if (b(v, v) <= tol.zero_row) {
            zero_rows.push_back(v);
            psi.col(v).setZero();
        }

    const int dim = std::max(1, rank + static_cast<int>(zero_rows.size()));
    OrthoRep rep;
    rep.kind = rep_kind_for(program.variant);
    rep.vectors = Eigen::MatrixXd::Zero(dim, n);
    rep.handle = Eigen::VectorXd::Zero(dim);

    Eigen::VectorXd big_psi = Eigen::VectorXd::Zero(rank);
    for (int v = 0; v < n; ++v)
        big_psi += std::sqrt(program.weights.value(v)) * psi.col(v);
    const double norm = big_psi.norm();
    if (norm > 0)
        rep.handle.head(rank) = big_psi / norm;
    else
        rep.handle(0) = 1.0;

    int fresh = rank;
    for (int v = 0; v < n; ++v) {
        if (std::find(zero_rows.begin(), zero_rows.end(), v) != zero_rows.end()) {
            rep.vectors(fresh++, v) = 1.0;
        } else {
            rep.vectors.col(v).head(rank) = psi.col(v) / psi.col(v).norm();
        }
    }
    rep.weights.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        double o = rep.handle.dot(rep.vectors.col(v));
        rep.weights[v] = o * o;
    }
    return rep;
}

double RepViolations::worst(RepKind kind) const
{
    double w = std::max({norm, forbidden, sign, weight_mismatch});
    if (kind != RepKind::OrOfComplement)
        w = std::max(w, handle_consistency);
    return w;
}

RepViolations validate_rep(const OrthoRep& rep, const Graph& g)
{
    const int n = g.size();
    if (rep.size() != n || static_cast<int>(rep.weights.size()) != n || rep.handle.size() != rep.vectors.rows())
        throw InvalidArgument("representation dimensions do not match the graph");
    RepViolations out;
    const Eigen::MatrixXd gram = rep.vectors.transpose() * rep.vectors;
    out.norm = std::abs(rep.handle.norm() - 1.0);
    out.min_handle_overlap = n ? std::numeric_limits<double>::infinity() : 0.0;
    for (int v = 0; v < n; ++v) {
        out.norm = std::max(out.norm, std::abs(rep.vectors.col(v).norm() - 1.0));
        const double o = rep.handle.dot(rep.vectors.col(v));
        out.min_handle_overlap = std::min(out.min_handle_overlap, o);
        out.weight_mismatch = std::max(out.weight_mismatch, std::abs(rep.weights[v] - o * o));
        for (int w = v + 1; w < n; ++w) {
            const double x = gram(v, w);
            const bool edge = g.adjacent(v, w);
            switch (rep.kind) {
            case RepKind::OrOfComplement:
                if (edge)
                    out.forbidden = std::max(out.forbidden, std::abs(x));
                break;
            case RepKind::NonnegOr:
                if (edge)
                    out.forbidden = std::max(out.forbidden, std::abs(x));
                out.sign = std::max(out.sign, -x);
                break;
            case RepKind::Obtuse:
                if (edge)
                    out.sign = std::max(out.sign, x);
                break;
            }
        }
    }
    out.handle_consistency = std::max(0.0, -out.min_handle_overlap);
    return out;
}

Eigen::MatrixXd reconstruct_primal(const OrthoRep& rep)
{
    const int n = rep.size();
    Eigen::VectorXd overlap(n);
    for (int v = 0; v < n; ++v)
        overlap(v) = rep.handle.dot(rep.vectors.col(v));
    const double theta = overlap.squaredNorm();
    if (!(theta > 0))
        throw InvalidArgument("handle is orthogonal to every vector");
    const Eigen::MatrixXd gram = rep.vectors.transpose() * rep.vectors;
    return (overlap.asDiagonal() * gram * overlap.asDiagonal()) / theta;
}

double min_nonzero_row_sum(const Eigen::MatrixXd& b, double zero_row)
{
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index v = 0; v < b.rows(); ++v)
        if (b(v, v) > zero_row)
            best = std::min(best, b.row(v).sum());
    return best;
}

std::string rep_to_json(const OrthoRep& rep, const RepTolerances& tol)
{
    nlohmann::json j;
    j["kind"] = to_string(rep.kind);
    j["dimension"] = rep.vectors.rows();
    nlohmann::json vecs = nlohmann::json::array();
    for (int v = 0; v < rep.size(); ++v)
        vecs.push_back(std::vector<double>(rep.vectors.col(v).data(), rep.vectors.col(v).data() + rep.vectors.rows()));
    j["vectors"] = std::move(vecs);
    j["handle"] = std::vector<double>(rep.handle.data(), rep.handle.data() + rep.handle.size());
    j["weights"] = rep.weights;
    j["tolerances"] = {{"norm", tol.norm},
                       {"pattern", tol.pattern},
                       {"value", tol.value},
                       {"zero_row", tol.zero_row},
                       {"eigen_floor", tol.eigen_floor}};
    return j.dump(2);
}

} // namespace gal
