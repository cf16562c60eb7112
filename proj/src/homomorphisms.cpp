#include "graphlim/homomorphisms.hpp"

#include <bit>

namespace graphlim {

namespace {

// Adjacency rows of G as bitsets over its nodes.
std::vector<std::uint64_t> adjacency_rows(const LabeledGraph& g) {
    const int n = g.node_count();
    if (n > 64) throw CapacityError("counting kernels support host graphs on at most 64 nodes");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(i, j)) {
                rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
            }
    return rows;
}

// Neighbors of node i among nodes < i, per node of F; drives the candidate
// pruning during backtracking.
std::vector<std::vector<int>> earlier_neighbors(const LabeledGraph& f) {
    const int m = f.node_count();
    std::vector<std::vector<int>> prior(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < i; ++j)
            if (f.has_edge(j, i)) prior[static_cast<std::size_t>(i)].push_back(j);
    return prior;
}

std::int64_t count_maps(const LabeledGraph& f, const LabeledGraph& g, bool injective) {
    const int m = f.node_count();
    const int n = g.node_count();
    if (m == 0) return 1;
    if (n == 0) return 0;
    if (injective && m > n) return 0;
    const auto rows = adjacency_rows(g);
    const auto prior = earlier_neighbors(f);
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    std::vector<int> image(static_cast<std::size_t>(m), -1);
    std::int64_t count = 0;
    // Depth-first over partial maps; cand holds the feasible images of node
    // `depth` given the earlier assignments.
    auto descend = [&](auto&& self, int depth, std::uint64_t used) -> void {
        if (depth == m) {
            ++count;
            return;
        }
        std::uint64_t cand = all;
        for (int j : prior[static_cast<std::size_t>(depth)])
            cand &= rows[static_cast<std::size_t>(image[static_cast<std::size_t>(j)])];
        if (injective) cand &= ~used;
        while (cand) {
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            image[static_cast<std::size_t>(depth)] = v;
            self(self, depth + 1, used | (std::uint64_t{1} << v));
        }
    };
    descend(descend, 0, 0);
    return count;
}

std::int64_t power_checked(std::int64_t base, int exp) {
    __int128 out = 1;
    for (int i = 0; i < exp; ++i) {
        out *= base;
        if (out > INT64_MAX) throw CapacityError("node-count power exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(out);
}

} // namespace

std::int64_t hom_count(const LabeledGraph& f, const LabeledGraph& g) {
    return count_maps(f, g, false);
}

std::int64_t inj_count(const LabeledGraph& f, const LabeledGraph& g) {
    return count_maps(f, g, true);
}

std::int64_t falling_factorial(std::int64_t x, int y) {
    std::int64_t out = 1;
    for (int i = 0; i < y && out != 0; ++i) out *= x - i;
    return out;
}

DensityReport densities(const LabeledGraph& f, const LabeledGraph& g) {
    const int m = f.node_count();
    const int n = g.node_count();
    if (m >= 1 && n < 1)
        throw DomainError("densities: host graph must have at least one node");
    DensityReport report;
    report.hom = hom_count(f, g);
    report.inj = inj_count(f, g);
    report.t_hom = Rational(report.hom, power_checked(n, m));
    report.t_inj_defined = m <= n;
    report.t_inj = report.t_inj_defined ? Rational(report.inj, falling_factorial(n, m))
                                        : Rational(0);
    report.gap_bound =
        Rational(1) - Rational(falling_factorial(n, m), power_checked(n, m));
    return report;
}

std::vector<std::int64_t> sample_tally_hom(int m, const LabeledGraph& g) {
    const int n = g.node_count();
    if (n < 1) throw DomainError("sample_tally_hom: host graph must have at least one node");
    if (m < 0 || m > 7) throw CapacityError("sample distributions support 0 <= m <= 7");
    if (power_checked(n, m) > 100'000'000)
        throw CapacityError("sample_tally_hom: v(G)^m too large to enumerate");
    const int bits = m * (m - 1) / 2;
    std::vector<std::int64_t> tally(std::size_t{1} << bits, 0);
    std::vector<int> draw(static_cast<std::size_t>(m), 0);
    // Odometer over all v(G)^m ordered draws.
    while (true) {
        std::uint32_t mask = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                const int a = draw[static_cast<std::size_t>(i)];
                const int b = draw[static_cast<std::size_t>(j)];
                if (a != b && g.has_edge(a, b))
                    mask |= std::uint32_t{1} << pair_index(m, i, j);
            }
        ++tally[mask];
        int pos = m - 1;
        while (pos >= 0 && draw[static_cast<std::size_t>(pos)] == n - 1) {
            draw[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++draw[static_cast<std::size_t>(pos)];
    }
    return tally;
}

std::vector<std::int64_t> sample_tally_inj(int m, const LabeledGraph& g) {
    const int n = g.node_count();
    if (m < 0 || m > 7) throw CapacityError("sample distributions support 0 <= m <= 7");
    if (m > n) throw DomainError("sample_tally_inj: m exceeds the host node count");
    const int bits = m * (m - 1) / 2;
    std::vector<std::int64_t> tally(std::size_t{1} << bits, 0);
    std::vector<int> draw(static_cast<std::size_t>(m), 0);
    auto distinct = [&](int upto) {
        for (int i = 0; i < upto; ++i)
            if (draw[static_cast<std::size_t>(i)] == draw[static_cast<std::size_t>(upto)])
                return false;
        return true;
    };
    // Ordered draws without replacement, built depth-first.
    auto descend = [&](auto&& self, int depth) -> void {
        if (depth == m) {
            std::uint32_t mask = 0;
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    if (g.has_edge(draw[static_cast<std::size_t>(i)],
                                   draw[static_cast<std::size_t>(j)]))
                        mask |= std::uint32_t{1} << pair_index(m, i, j);
            ++tally[mask];
            return;
        }
        for (int v = 0; v < n; ++v) {
            draw[static_cast<std::size_t>(depth)] = v;
            if (distinct(depth)) self(self, depth + 1);
        }
    };
    descend(descend, 0);
    return tally;
}

GraphDistribution sample_dist_hom(int m, const LabeledGraph& g) {
    const auto tally = sample_tally_hom(m, g);
    const double denom = static_cast<double>(power_checked(g.node_count(), m));
    GraphDistribution p(m);
    for (std::uint32_t mask = 0; mask < tally.size(); ++mask)
        p.mass[mask] = static_cast<double>(tally[mask]) / denom;
    return p;
}

GraphDistribution sample_dist_inj(int m, const LabeledGraph& g) {
    const auto tally = sample_tally_inj(m, g);
    const double denom = static_cast<double>(falling_factorial(g.node_count(), m));
    GraphDistribution p(m);
    for (std::uint32_t mask = 0; mask < tally.size(); ++mask)
        p.mass[mask] = static_cast<double>(tally[mask]) / denom;
    return p;
}

SamplingGap sampling_gap(int m, const LabeledGraph& g) {
    const int n = g.node_count();
    if (m > n) throw DomainError("sampling_gap: m exceeds the host node count");
    const auto hom_tally = sample_tally_hom(m, g);
    const auto inj_tally = sample_tally_inj(m, g);
    const Rational hom_denom(power_checked(n, m));
    const Rational inj_denom(falling_factorial(n, m));
    SamplingGap gap;
    gap.sup_gap = Rational(0);
    for (std::size_t mask = 0; mask < hom_tally.size(); ++mask) {
        const Rational diff = (Rational(hom_tally[mask]) / hom_denom -
                               Rational(inj_tally[mask]) / inj_denom)
                                  .abs();
        if (gap.sup_gap < diff) gap.sup_gap = diff;
    }
    gap.envelope = Rational(1) - inj_denom / hom_denom;
    gap.loose_envelope = Rational(static_cast<std::int64_t>(m) * (m - 1) / 2, n);
    return gap;
}

} // namespace graphlim
