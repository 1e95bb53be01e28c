#include "gal/error.hpp"
#include "gal/lp.hpp"
#include "gal/parameters.hpp"
#include "gal/sdp.hpp"

#include <cmath>

namespace gal {

AsymptoticTable asymptotic_bounds(const Graph& g, int n_max, int max_vertices)
{
    if (n_max < 1)
        throw InvalidArgument("power bound must be at least 1");
    double size = 1.0;
    for (int k = 0; k < n_max; ++k)
        size *= g.size();
    if (size > max_vertices)
        throw GuardError("power " + std::to_string(n_max) + " has " + std::to_string(static_cast<long long>(size)) +
                         " vertices, above the limit of " + std::to_string(max_vertices));

    AsymptoticTable table;
    table.theta = theta_value(g);
    table.alpha_star = fractional_packing(g).value;
    for (int k = 1; k <= n_max; ++k) {
        Graph strong = strong_power(g, k);
        Graph disj = disjunctive_power(g, k);
        PowerRow row;
        row.power = k;
        row.vertices = strong.size();
        row.alpha = alpha_number(strong);
        row.sigma_strong = sigma(strong).size;
        row.sigma_disjunctive = sigma(disj).size;
        row.alpha_root = std::pow(row.alpha, 1.0 / k);
        row.sigma_strong_root = std::pow(row.sigma_strong, 1.0 / k);
        row.sigma_disjunctive_root = std::pow(row.sigma_disjunctive, 1.0 / k);
        table.rows.push_back(row);
    }
    return table;
}

} // namespace gal
