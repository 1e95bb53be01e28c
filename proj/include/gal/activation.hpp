#pragma once

#include "gal/graph.hpp"
#include "gal/lp.hpp"
#include "gal/rational.hpp"
#include "gal/representations.hpp"
#include "gal/sdp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gal {

/// Which duality the activating weights come from:
///  - Theta:          p from ϑ(G), partner program ϑ on (Ḡ, p)
///  - ThetaPmFirst:   p from ϑ⁻(G), partner program ϑ⁺ on (Ḡ, p)
///  - ThetaPmSecond:  q from ϑ⁺(G), partner program ϑ⁻ on (Ḡ, q)
enum class ActivationVariant { Theta, ThetaPmFirst, ThetaPmSecond };

const char* to_string(ActivationVariant v);
/// Accepts "theta", "theta_pm_first", "theta_pm_second".
ActivationVariant parse_activation(const std::string& name);
ThetaVariant source_variant(ActivationVariant v);
ThetaVariant partner_variant(ActivationVariant v);

/// One asserted relation: lhs compared with rhs, residual and verdict.
struct Check
{
    std::string name;
    std::string ref;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    /// Present when both sides were compared as exact rationals.
    std::optional<Rational> exact_lhs, exact_rhs;
};

/// |lhs - rhs| <= tol.
Check equal_check(std::string name, std::string ref, double lhs, double rhs, double tol);
/// lhs <= rhs + tol; residual is rhs - lhs (negative means violated).
Check le_check(std::string name, std::string ref, double lhs, double rhs, double tol);
Check exact_le_check(std::string name, std::string ref, const Rational& lhs, const Rational& rhs);
Check exact_equal_check(std::string name, std::string ref, const Rational& lhs, const Rational& rhs);

struct ActivationOptions
{
    SdpOptions sdp;
    RepTolerances rep;
    /// Largest product graph handed to the exact α solver.
    int max_vertices = 64;
};

struct ActivationWeights
{
    ActivationVariant variant = ActivationVariant::Theta;
    CertifiedValue certificate; ///< the source program on G
    OrthoRep rep;
    Weights p; ///< real weights <h|φ_v>^2 on the vertices of Ḡ
};

ActivationWeights activation_weights(const Graph& g, ActivationVariant variant, const ActivationOptions& opt = {});

struct WeightedEquality
{
    ActivationVariant variant = ActivationVariant::Theta;
    double graph_value = 0.0;    ///< source program value on G
    double alpha_product = 0.0;  ///< α(G ⊠ (Ḡ, p)) with product weights 1·p
    double partner_value = 0.0;  ///< partner program on (Ḡ, p)
    double partner_gap = 0.0;
    Weights p;
    std::vector<Check> checks;

    bool pass() const;
};

/// α(G⊠(Ḡ,p)) = value(G) within 1e-4 and partner(Ḡ,p) = 1 within 1e-5.
WeightedEquality check_weighted_equality(const Graph& g, ActivationVariant variant,
                                         const ActivationOptions& opt = {});

struct SeriesLevel
{
    int level = 0;
    std::vector<int64_t> blowup; ///< ⌈ℓ p⌉
    int64_t blowup_vertices = 0;
    int64_t alpha = 0;           ///< α(G ⊠ H_ℓ), exact
    double partner_value = 0.0;  ///< partner program of H_ℓ via the weighted program on Ḡ
    double partner_gap = 0.0;
    double ratio = 0.0;          ///< α / (value(G) · partner)
    double lower_bound = 0.0;    ///< 1 - n^2 / (value(G) · partner)
    std::optional<int64_t> alpha_direct; ///< α of the explicit product when it is small enough
};

struct ActivationReport
{
    std::string graph_id;
    ActivationVariant variant = ActivationVariant::Theta;
    double graph_value = 0.0;
    double graph_gap = 0.0;
    std::vector<double> p;
    std::vector<SeriesLevel> levels;
    std::vector<Check> checks;

    bool pass() const;
};

/// Integer blow-up sizes ⌈ℓ p(v)⌉, snapping values within 1e-9 of an integer first.
std::vector<int64_t> ceil_weights(const std::vector<double>& p, int level);

/// H_ℓ = Blup(Ḡ, ⌈ℓp⌉) for each level; α and the partner value go through weighted
/// programs on factor-sized graphs. Throws InvalidArgument for levels < 1 or an
/// empty blow-up, GuardError when G⊠Ḡ exceeds the vertex limit.
ActivationReport activation_series(const Graph& g, const std::vector<int>& levels, ActivationVariant variant,
                                   const ActivationOptions& opt = {}, const std::string& graph_id = "G");
ActivationReport activation_series(const Graph& g, const ActivationWeights& weights, const std::vector<int>& levels,
                                   const ActivationOptions& opt = {}, const std::string& graph_id = "G");

struct RosenfeldWitness
{
    std::string graph_id = "G";
    FractionalPacking packing;
    std::vector<int64_t> numerators; ///< n(v), packing = n(v)/N
    int64_t denominator = 1;         ///< N
    Graph blowup;                    ///< H' = Blup(Ḡ, n)
    int64_t alpha_product = 0;       ///< α(G ⊠ H')
    int64_t alpha_blowup = 0;        ///< α(H')
    Rational alpha_star;
    Rational residual;               ///< α(G⊠H') - α*(G)·α(H'), must be 0
    std::optional<int64_t> alpha_product_direct;
    std::vector<Check> checks;

    bool pass() const;
};

RosenfeldWitness rosenfeld_construct(const Graph& g, int max_vertices = 64, const std::string& graph_id = "G");

struct HalesReport
{
    int sigma_strong = 0;       ///< σ(G ⊠ H)
    int sigma_disjunctive = 0;  ///< σ(G ∗ H)
    int sigma_h = 0;
    Rational alpha_star_g;
    double theta_g = 0.0, theta_h = 0.0, theta_plus_g = 0.0, theta_minus_h = 0.0;
    std::vector<Check> checks;

    bool pass() const;
};

/// σ(G⊠H) >= α*(G)σ(H), σ(G∗H) >= ϑ(G)ϑ(H), σ(G∗H) >= ϑ⁺(G)ϑ⁻(H).
HalesReport hales_check(const Graph& g, const Graph& h, const SdpOptions& sdp = {}, int max_vertices = 64);

struct ZetaProbe
{
    int sigma_product = 0; ///< σ(G ∗ H)
    int sigma_h = 0;
    Rational ratio;        ///< σ(G∗H) / σ(H)
    int sigma_g = 0;       ///< trivial upper bound: ratio <= σ(G)
    double theta_g = 0.0;  ///< lower bound on the ratio through ϑ(G)ϑ(H)/σ(H)
    double theta_bound = 0.0;
    std::vector<Check> checks;
};

ZetaProbe zeta_probe(const Graph& g, const Graph& h, const SdpOptions& sdp = {}, int max_vertices = 64);

} // namespace gal
