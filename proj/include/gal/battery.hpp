#pragma once

#include "gal/activation.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gal {

struct NamedGraph
{
    std::string id;
    Graph graph;
    bool vertex_transitive = false;
};

/// C5, C7, Petersen, K5, co-K5 and G(n, 1/2) for n = 5..8 drawn with `seed`, seed+1, ...
std::vector<NamedGraph> default_suite(uint64_t seed = 1);
/// `count` graphs G(n, 1/2) with n cycling through 5..max_n, seeds seed, seed+1, ...
std::vector<NamedGraph> random_suite(int count, int max_n, uint64_t seed = 1);
/// Index pairs (i <= j) whose product has at most `max_product` vertices.
std::vector<std::pair<int, int>> small_pairs(const std::vector<NamedGraph>& gs, int max_product = 36);

struct GraphSummary
{
    std::string id;
    int vertices = 0;
    int edges = 0;
    int alpha = 0;
    double theta_minus = 0.0, theta = 0.0, theta_plus = 0.0;
    double gap_minus = 0.0, gap = 0.0, gap_plus = 0.0;
    Rational alpha_star;
    int sigma = 0;
    int chi = 0;
};

struct BatteryOptions
{
    SdpOptions sdp;
    uint64_t seed = 1;
    /// Large enough for Petersen ⊠ its complement.
    int max_vertices = 100;
    /// Worker threads; items are independent and the report order follows the input.
    int jobs = 1;
    /// Series levels run on every graph whose square fits the vertex limit; empty disables.
    std::vector<int> levels = {1, 2, 4};
};

struct BatteryReport
{
    BatteryOptions options;
    std::vector<GraphSummary> graphs;
    std::vector<Check> checks;
    /// Numerical evidence that is reported but never asserted.
    std::vector<Check> observations;
    std::vector<ActivationReport> series;
    std::vector<RosenfeldWitness> witnesses;

    int failures() const;
};

/// Per graph: sandwich chain, weighted activation equality, blow-up series, Rosenfeld
/// witness, and for vertex-transitive inputs α(G⊠Ḡ) = |V| = ϑ(G)ϑ(Ḡ). Per pair:
/// multiplicativity of ϑ and α*, α(G∗H) = α(G)α(H), one-sided ϑ± product bounds and
/// the α ≤ ϑ⁻ ≤ ϑ⁻ϑ⁺ ≤ ϑ⁺ chain. Failures, including exceptions, become failed checks.
BatteryReport duality_battery(const std::vector<NamedGraph>& gs, const std::vector<std::pair<int, int>>& pairs,
                              const BatteryOptions& opt = {});

} // namespace gal
