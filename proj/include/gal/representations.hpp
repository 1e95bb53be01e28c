#pragma once

#include "gal/graph.hpp"
#include "gal/sdp.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace gal {

/// Sign pattern carried by a representation's Gram matrix, for a graph G:
///  - OrOfComplement: <φ_v|φ_w> = 0 on every edge vw of G
///  - NonnegOr:       additionally <φ_v|φ_w> >= 0 for all pairs
///  - Obtuse:         <φ_v|φ_w> <= 0 on every edge vw of G
enum class RepKind { OrOfComplement, NonnegOr, Obtuse };

const char* to_string(RepKind k);
RepKind rep_kind_for(ThetaVariant v);
ThetaVariant variant_for(RepKind k);

/// Unit vectors (columns of `vectors`) with a handle h and weights p(v) = <h|φ_v>^2.
struct OrthoRep
{
    RepKind kind = RepKind::OrOfComplement;
    Eigen::MatrixXd vectors; ///< dimension x n
    Eigen::VectorXd handle;
    std::vector<double> weights;

    int size() const { return static_cast<int>(vectors.cols()); }
    double weight_sum() const;
};

struct RepTolerances
{
    double norm = 1e-8;
    double pattern = 1e-7;
    double value = 1e-5;
    /// Rows of B with B_vv at or below this are treated as zero rows.
    double zero_row = 1e-8;
    /// Eigenvalues of B below this are clamped to zero before factoring.
    double eigen_floor = 1e-10;
};

/// Gram factorization of an accepted primal certificate.
///
/// B = ΨᵀΨ with ψ_v = columns of √Λ Uᵀ; φ_v = ψ_v/|ψ_v| and h = Ψ/|Ψ| with
/// Ψ = Σ_v √p(v) ψ_v for the program weights p. Zero rows get a fresh unit vector
/// in an extra dimension (orthogonal to everything, weight 0).
/// Throws InvalidArgument when the certificate fails its own audit.
OrthoRep extract_rep(const ThetaProgram& program, const CertifiedValue& cert, const RepTolerances& tol = {},
                     const SdpOptions& accept = {});

struct RepViolations
{
    double norm = 0.0;               ///< max |‖φ_v‖ - 1|, also covers the handle
    double forbidden = 0.0;          ///< max |<φ_v|φ_w>| over pairs that must be orthogonal
    double sign = 0.0;               ///< worst violation over sign-constrained pairs
    double handle_consistency = 0.0; ///< max(0, -min_v <h|φ_v>)
    double min_handle_overlap = 0.0; ///< min_v <h|φ_v>, reported for every kind
    double weight_mismatch = 0.0;    ///< max |p(v) - <h|φ_v>^2|

    /// Largest violation among the classes that constrain this kind.
    double worst(RepKind kind) const;
};

RepViolations validate_rep(const OrthoRep& rep, const Graph& g);

/// Converse construction: B_vw = <h|φ_v><φ_v|φ_w><φ_w|h> / θ with θ = Σ_v <h|φ_v>^2.
Eigen::MatrixXd reconstruct_primal(const OrthoRep& rep);

/// Row sums of B; the most negative one among rows with B_vv above `zero_row`.
double min_nonzero_row_sum(const Eigen::MatrixXd& b, double zero_row = 1e-8);

std::string rep_to_json(const OrthoRep& rep, const RepTolerances& tol = {});

} // namespace gal
