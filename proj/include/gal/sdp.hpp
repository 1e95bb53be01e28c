#pragma once

#include "gal/graph.hpp"

#include <Eigen/Dense>

#include <string>

namespace gal {

/// Which member of the theta family to compute.
///  - Lovasz:          B ⪰ 0, tr B = 1, B_vw = 0 on edges
///  - SchrijverMinus:  additionally B_vw >= 0 for every pair
///  - SzegedyPlus:     B_vw <= 0 on edges instead of = 0
enum class ThetaVariant { Lovasz, SchrijverMinus, SzegedyPlus };

const char* to_string(ThetaVariant v);
/// Accepts "theta"/"lovasz", "theta-minus"/"schrijver_minus", "theta-plus"/"szegedy_plus".
ThetaVariant parse_variant(const std::string& name);

/// max tr(BΠ) over the variant's feasible set, with Π_vw = sqrt(p(v) p(w)).
struct ThetaProgram
{
    Graph graph;
    ThetaVariant variant = ThetaVariant::Lovasz;
    Weights weights;

    ThetaProgram(Graph g, ThetaVariant v);
    ThetaProgram(Graph g, ThetaVariant v, Weights w);

    Eigen::MatrixXd objective() const;
};

struct SdpOptions
{
    double tol_gap = 1e-7;
    double tol_feasibility = 1e-8;
    int max_iterations = 500;
};

/// Primal matrix B and dual pair (λ, Z) bracketing the optimum.
///
/// Z = λI + (entries on the variant's free/sign pairs) satisfies Z - Π ⪰ 0,
/// so λ is an upper bound; B is feasible, so tr(BΠ) is a lower bound.
struct CertifiedValue
{
    ThetaVariant variant = ThetaVariant::Lovasz;
    double value = 0.0; ///< tr(BΠ)
    double lambda = 0.0;
    double gap = 0.0;   ///< λ - tr(BΠ)
    Eigen::MatrixXd primal;
    Eigen::MatrixXd dual;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    int iterations = 0;
    double tol_gap = 0.0;
};

/// Solves the program with a primal-dual interior-point method and returns
/// repaired, independently checkable certificates. Throws SolverError when no
/// certificate meets the tolerances within the iteration budget, and
/// InvalidArgument for empty graphs or a nonpositive tolerance.
CertifiedValue solve_theta(const ThetaProgram& program, const SdpOptions& options = {});

/// Convenience: unweighted value of the variant.
double theta_value(const Graph& g, ThetaVariant v = ThetaVariant::Lovasz, const SdpOptions& options = {});

struct CertificateAudit
{
    double trace_error = 0.0;       ///< |tr B - 1|
    double primal_pattern = 0.0;    ///< worst violation of the zero/sign pattern on B
    double primal_psd = 0.0;        ///< max(0, -λ_min(B))
    double dual_diagonal = 0.0;     ///< max |Z_vv - λ|
    double dual_pattern = 0.0;      ///< worst violation of the zero/sign pattern on Z
    double dual_psd = 0.0;          ///< max(0, -λ_min(Z - Π))
    double objective_error = 0.0;   ///< |tr(BΠ) - value|
    double gap = 0.0;               ///< λ - tr(BΠ)

    double primal_residual() const;
    double dual_residual() const;
};

/// Recomputes every certificate condition from scratch against the program.
CertificateAudit audit_certificate(const ThetaProgram& program, const CertifiedValue& cert);

/// Worst violation of the primal constraints (trace, pattern, PSD) for a candidate B.
double primal_violation(const ThetaProgram& program, const Eigen::MatrixXd& b);

/// Smallest eigenvalue of a symmetric matrix.
double min_eigenvalue(const Eigen::MatrixXd& m);

} // namespace gal
