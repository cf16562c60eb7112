#include "graphlim/mobius.hpp"

#include <bit>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "graphlim/rng.hpp"

namespace graphlim {

namespace {

constexpr int kDistributionMaxNodes = 7;

int checked_bits(int n, int max_nodes, const char* who) {
    if (n < 0 || n > max_nodes)
        throw CapacityError(std::string(who) + " supports 0 <= n <= " +
                            std::to_string(max_nodes) + ", got n=" + std::to_string(n));
    return n * (n - 1) / 2;
}

// Compensated accumulation; subset sums over 2^21 terms must stay well under
// the 1e-12 tolerances promised to callers.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

double format_guard(double v) {
    // -0.0 prints as "-0"; normalize for byte-stable files.
    return v == 0.0 ? 0.0 : v;
}

} // namespace

GraphDistribution::GraphDistribution(int node_count) : n(node_count) {
    const int bits = checked_bits(node_count, kDistributionMaxNodes, "GraphDistribution");
    mass.assign(std::size_t{1} << bits, 0.0);
}

GraphDistribution GraphDistribution::point_mass(const LabeledGraph& g) {
    GraphDistribution p(g.node_count());
    p.mass[g.mask()] = 1.0;
    return p;
}

GraphDistribution GraphDistribution::erdos_renyi(int n, double p) {
    if (p < 0.0 || p > 1.0) throw DomainError("edge probability must lie in [0,1]");
    GraphDistribution d(n);
    const int bits = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < d.mass.size(); ++mask) {
        const int e = std::popcount(mask);
        d.mass[mask] = std::pow(p, e) * std::pow(1.0 - p, bits - e);
    }
    return d;
}

GraphDistribution GraphDistribution::uniform(int n) {
    GraphDistribution d(n);
    const double m = 1.0 / static_cast<double>(d.mass.size());
    for (auto& v : d.mass) v = m;
    return d;
}

double GraphDistribution::mass_of(const LabeledGraph& g) const {
    if (g.node_count() != n) throw DomainError("mass_of: node count mismatch");
    return mass[g.mask()];
}

void GraphDistribution::validate(double tol) const {
    KahanSum total;
    for (std::size_t mask = 0; mask < mass.size(); ++mask) {
        const double v = mass[mask];
        if (!(v >= -tol && v <= 1.0 + tol))
            throw DomainError("probability out of [0,1] at graph mask " + std::to_string(mask));
        total.add(v);
    }
    if (std::abs(total.sum - 1.0) > tol)
        throw DomainError("probabilities sum to " + std::to_string(total.sum) + ", not 1");
}

MobiusParams::MobiusParams(int node_count) : n(node_count) {
    const int bits = checked_bits(node_count, kDistributionMaxNodes, "MobiusParams");
    z.assign(std::size_t{1} << bits, 0.0);
    z[0] = 1.0;
}

double MobiusParams::value_of(const LabeledGraph& f) const {
    const int m = f.node_count();
    if (m > n) throw DomainError("value_of: graph has more nodes than the parameter set");
    // Embed into [n]: same edges on the first m nodes.
    std::uint64_t mask = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (f.has_edge(i, j)) mask |= std::uint64_t{1} << pair_index(n, i, j);
    return z[mask];
}

double z_value(const GraphDistribution& p, std::uint32_t f_mask) {
    const int bits = p.n * (p.n - 1) / 2;
    const std::uint32_t full = bits >= 32 ? UINT32_MAX : (std::uint32_t{1} << bits) - 1;
    const std::uint32_t free = full & ~f_mask;
    KahanSum sum;
    // Supergraphs of F are F | s for s a submask of the free pairs.
    std::uint32_t s = free;
    while (true) {
        sum.add(p.mass[f_mask | s]);
        if (s == 0) break;
        s = (s - 1) & free;
    }
    return sum.sum;
}

MobiusParams z_from_p(const GraphDistribution& p) {
    checked_bits(p.n, kTransformMaxNodes, "z_from_p");
    MobiusParams zp(p.n);
    for (std::uint32_t f = 0; f < zp.z.size(); ++f) zp.z[f] = z_value(p, f);
    return zp;
}

GraphDistribution p_from_z(const MobiusParams& zp) {
    checked_bits(zp.n, kTransformMaxNodes, "p_from_z");
    if (std::abs(zp.z[0] - 1.0) > 1e-12)
        throw DomainError("Mobius parameters must have Z(empty) = 1");
    const int bits = zp.n * (zp.n - 1) / 2;
    const std::uint32_t full = (std::uint32_t{1} << bits) - 1;
    GraphDistribution p(zp.n);
    for (std::uint32_t g = 0; g < p.mass.size(); ++g) {
        const std::uint32_t free = full & ~g;
        KahanSum sum;
        std::uint32_t s = free;
        while (true) {
            const double term = zp.z[g | s];
            sum.add(std::popcount(s) % 2 == 0 ? term : -term);
            if (s == 0) break;
            s = (s - 1) & free;
        }
        p.mass[g] = sum.sum;
    }
    return p;
}

MobiusValidity is_valid_mobius(const MobiusParams& zp, double tol) {
    const GraphDistribution p = p_from_z(zp);
    MobiusValidity result;
    double worst = 0.0;
    std::uint32_t worst_mask = 0;
    for (std::uint32_t g = 0; g < p.mass.size(); ++g) {
        if (p.mass[g] < worst) {
            worst = p.mass[g];
            worst_mask = g;
        }
    }
    if (worst < -tol) {
        result.valid = false;
        result.witness = LabeledGraph::from_mask(zp.n, worst_mask);
        result.witness_mass = worst;
    }
    return result;
}

ExchangeabilityCheck check_exchangeable(const GraphDistribution& p, double tol) {
    const auto& canon = canonical_mask_table(p.n);
    ExchangeabilityCheck result;
    result.permutation_invariant = true;
    for (std::uint32_t mask = 0; mask < p.mass.size(); ++mask) {
        if (std::abs(p.mass[mask] - p.mass[canon[mask]]) > tol) {
            result.permutation_invariant = false;
            break;
        }
    }
    if (p.n <= kTransformMaxNodes) {
        const MobiusParams zp = z_from_p(p);
        bool ok = true;
        for (std::uint32_t mask = 0; mask < zp.z.size(); ++mask) {
            if (std::abs(zp.z[mask] - zp.z[canon[mask]]) > tol) {
                ok = false;
                break;
            }
        }
        result.mobius_invariant = ok;
    }
    return result;
}

bool is_exchangeable(const GraphDistribution& p, double tol) {
    return check_exchangeable(p, tol).exchangeable();
}

GraphDistribution random_distribution(int n, std::uint64_t seed) {
    GraphDistribution p(n);
    KahanSum total;
    for (std::uint32_t mask = 0; mask < p.mass.size(); ++mask) {
        const double u = rng::uniform(seed, rng::kStreamMass, mask) + 1e-12;
        p.mass[mask] = u;
        total.add(u);
    }
    for (auto& v : p.mass) v /= total.sum;
    return p;
}

GraphDistribution random_exchangeable_distribution(int n, std::uint64_t seed) {
    const auto& canon = canonical_mask_table(n);
    GraphDistribution p(n);
    std::vector<double> orbit_sum(p.mass.size(), 0.0);
    std::vector<std::uint32_t> orbit_count(p.mass.size(), 0);
    for (std::uint32_t mask = 0; mask < p.mass.size(); ++mask) {
        orbit_sum[canon[mask]] += rng::uniform(seed, rng::kStreamMass, mask) + 1e-12;
        orbit_count[canon[mask]] += 1;
    }
    KahanSum total;
    for (std::uint32_t mask = 0; mask < p.mass.size(); ++mask) {
        p.mass[mask] = orbit_sum[canon[mask]] / static_cast<double>(orbit_count[canon[mask]]);
        total.add(p.mass[mask]);
    }
    for (auto& v : p.mass) v /= total.sum;
    return p;
}

GraphDistribution random_character_mixture(int n, std::uint64_t seed) {
    const int components = 2 + static_cast<int>(rng::stream(seed, rng::kStreamMass, 1u << 20) % 3);
    std::vector<double> weights(static_cast<std::size_t>(components));
    std::vector<double> edge_probs(static_cast<std::size_t>(components));
    double total = 0.0;
    for (int c = 0; c < components; ++c) {
        weights[c] = 0.05 + rng::uniform(seed, rng::kStreamMass, (1u << 20) + 1, c);
        edge_probs[c] = rng::uniform(seed, rng::kStreamMass, (1u << 20) + 2, c);
        total += weights[c];
    }
    GraphDistribution p(n);
    const int bits = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < p.mass.size(); ++mask) {
        const int e = std::popcount(mask);
        double m = 0.0;
        for (int c = 0; c < components; ++c)
            m += weights[c] / total * std::pow(edge_probs[c], e) *
                 std::pow(1.0 - edge_probs[c], bits - e);
        p.mass[mask] = m;
    }
    return p;
}

namespace {

// Shared "<encoding> <value>" reader for distribution and Z files.
std::pair<int, std::map<std::uint32_t, double>> read_value_lines(std::istream& in) {
    std::map<std::uint32_t, double> values;
    int n = -1;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        std::string encoding;
        double value = 0.0;
        if (!(fields >> encoding >> value))
            throw DomainError("line " + std::to_string(lineno) + ": expected \"<graph> <value>\"");
        std::string trailing;
        if (fields >> trailing)
            throw DomainError("line " + std::to_string(lineno) + ": unexpected trailing token");
        const LabeledGraph g = LabeledGraph::parse(encoding);
        if (n == -1) n = g.node_count();
        if (g.node_count() != n)
            throw DomainError("line " + std::to_string(lineno) + ": node count differs from earlier lines");
        if (g.pair_count() > 21)
            throw CapacityError("files support graphs on at most 7 nodes");
        const auto mask = static_cast<std::uint32_t>(g.mask());
        if (values.count(mask))
            throw DomainError("line " + std::to_string(lineno) + ": duplicate entry for " + encoding);
        values[mask] = value;
    }
    if (n == -1) throw DomainError("no graph entries in input");
    return {n, std::move(values)};
}

} // namespace

GraphDistribution read_distribution(std::istream& in) {
    auto [n, values] = read_value_lines(in);
    GraphDistribution p(n);
    for (const auto& [mask, value] : values) {
        if (value < 0.0) throw DomainError("negative probability in distribution file");
        p.mass[mask] = value;
    }
    p.validate(1e-9);
    return p;
}

void write_distribution(std::ostream& out, const GraphDistribution& p) {
    char buffer[64];
    for (std::uint32_t mask = 0; mask < p.mass.size(); ++mask) {
        if (p.mass[mask] == 0.0) continue;
        std::snprintf(buffer, sizeof buffer, "%.12g", format_guard(p.mass[mask]));
        out << LabeledGraph::from_mask(p.n, mask).encode() << ' ' << buffer << '\n';
    }
}

MobiusParams read_mobius(std::istream& in) {
    auto [n, values] = read_value_lines(in);
    MobiusParams zp(n);
    zp.z.assign(zp.z.size(), 0.0);
    for (const auto& [mask, value] : values) zp.z[mask] = value;
    if (std::abs(zp.z[0] - 1.0) > 1e-12)
        throw DomainError("Mobius parameter file must assign value 1 to the empty graph");
    return zp;
}

void write_mobius(std::ostream& out, const MobiusParams& zp) {
    char buffer[64];
    for (std::uint32_t mask = 0; mask < zp.z.size(); ++mask) {
        std::snprintf(buffer, sizeof buffer, "%.12g", format_guard(zp.z[mask]));
        out << LabeledGraph::from_mask(zp.n, mask).encode() << ' ' << buffer << '\n';
    }
}

} // namespace graphlim
