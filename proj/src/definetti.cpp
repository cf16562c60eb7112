#include "graphlim/definetti.hpp"

#include <cmath>
#include <stdexcept>

#include "graphlim/homomorphisms.hpp"

namespace graphlim {

GraphDistribution induced_marginal(const GraphDistribution& p, int m) {
    const int n = p.n;
    if (m < 0 || m > n) throw DomainError("induced_marginal: need 0 <= m <= n");
    GraphDistribution out(m);
    std::vector<long double> acc(out.mass.size(), 0.0);
    // Pair k of [m] keeps its index under the embedding [m] -> [n] only for
    // m == n; map explicitly.
    std::vector<int> pair_map(static_cast<std::size_t>(m * (m - 1) / 2));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            pair_map[static_cast<std::size_t>(pair_index(m, i, j))] = pair_index(n, i, j);
    for (std::uint32_t mask = 0; mask < p.mass.size(); ++mask) {
        std::uint32_t sub = 0;
        for (std::size_t k = 0; k < pair_map.size(); ++k)
            if ((mask >> pair_map[k]) & 1u) sub |= std::uint32_t{1} << k;
        acc[sub] += p.mass[mask];
    }
    for (std::size_t i = 0; i < acc.size(); ++i) out.mass[i] = static_cast<double>(acc[i]);
    return out;
}

GraphDistribution smooth_distribution(const GraphDistribution& p, int m) {
    const int n = p.n;
    if (m < 0 || m > 7) throw CapacityError("smooth_distribution supports 0 <= m <= 7");
    GraphDistribution out(m);
    std::vector<long double> acc(out.mass.size(), 0.0);

    // p_hom(., G) depends on G only through its class: aggregate P by
    // canonical form first, then mix one sampling distribution per class.
    const auto& canon = canonical_mask_table(n);
    std::vector<long double> class_mass(p.mass.size(), 0.0);
    for (std::uint32_t mask = 0; mask < p.mass.size(); ++mask)
        class_mass[canon[mask]] += p.mass[mask];

    for (const auto& cls : isomorphism_classes(n)) {
        const auto rep = cls.canon.mask();
        if (class_mass[rep] == 0.0) continue;
        const GraphDistribution sampled = sample_dist_hom(m, cls.canon);
        for (std::uint32_t sub = 0; sub < out.mass.size(); ++sub)
            acc[sub] += class_mass[rep] * sampled.mass[sub];
    }
    for (std::size_t i = 0; i < acc.size(); ++i) out.mass[i] = static_cast<double>(acc[i]);
    return out;
}

DeFinettiReport definetti_report(const GraphDistribution& p, int m, double tol) {
    const int n = p.n;
    if (m < 0 || m > n) throw DomainError("definetti_report: need 0 <= m <= n");
    if (!is_exchangeable(p, tol))
        throw DomainError("definetti_report: input distribution is not exchangeable");

    const GraphDistribution marginal = induced_marginal(p, m);
    const GraphDistribution smoothed = smooth_distribution(p, m);

    DeFinettiReport report;
    report.m = m;
    report.n = n;
    double sup = 0.0;
    long double l1 = 0.0;
    for (std::uint32_t mask = 0; mask < marginal.mass.size(); ++mask) {
        const double diff = std::abs(marginal.mass[mask] - smoothed.mass[mask]);
        sup = std::max(sup, diff);
        l1 += diff;
    }
    report.tv_half_sum = static_cast<double>(l1 / 2.0);
    report.tv_two_sup = 2.0 * sup;
    report.r_bound =
        1.0 - static_cast<double>(falling_factorial(n, m)) / std::pow(static_cast<double>(n), m);
    report.loose_bound = n > 0 ? static_cast<double>(m) * (m - 1) / static_cast<double>(n) : 0.0;

    const double slack = 1e-12;
    if (report.tv_two_sup > 2.0 * report.r_bound + slack ||
        2.0 * report.r_bound > report.loose_bound + slack)
        throw std::logic_error(
            "definetti_report: bound chain violated; this indicates an implementation "
            "bug, not a falsification of the bound");
    return report;
}

} // namespace graphlim
