#include "graphlim/graphons.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

#include "graphlim/rng.hpp"

namespace graphlim {

namespace {

constexpr double kWeightSumTol = 1e-12;

std::int64_t assignments_or_throw(int blocks, int nodes) {
    if (nodes > 10) throw CapacityError("exact graphon evaluation supports at most 10 nodes");
    std::int64_t total = 1;
    for (int i = 0; i < nodes; ++i) {
        total *= blocks;
        if (total > 10'000'000)
            throw CapacityError("exact graphon evaluation needs block^nodes <= 1e7");
    }
    return total;
}

} // namespace

StepGraphon StepGraphon::constant(double p) {
    StepGraphon w;
    w.weights = {1.0};
    w.values = {{p}};
    w.validate();
    return w;
}

void StepGraphon::validate() const {
    const std::size_t k = weights.size();
    if (k == 0) throw DomainError("step graphon needs at least one block");
    long double total = 0.0;
    for (double wgt : weights) {
        if (!(wgt > 0.0)) throw DomainError("block lengths must be positive");
        total += wgt;
    }
    if (std::abs(static_cast<double>(total) - 1.0) > kWeightSumTol)
        throw DomainError("block lengths must sum to 1");
    if (values.size() != k) throw DomainError("value matrix must be block_count x block_count");
    for (const auto& row : values) {
        if (row.size() != k) throw DomainError("value matrix must be block_count x block_count");
        for (double v : row)
            if (!(v >= 0.0 && v <= 1.0)) throw DomainError("graphon values must lie in [0,1]");
    }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            if (values[a][b] != values[b][a])
                throw DomainError("graphon value matrix must be symmetric");
}

int StepGraphon::block_of(double u) const {
    double cum = 0.0;
    const int k = block_count();
    for (int a = 0; a < k - 1; ++a) {
        cum += weights[static_cast<std::size_t>(a)];
        if (u < cum) return a;
    }
    return k - 1;
}

double StepGraphon::value_at(double u, double v) const {
    return values[static_cast<std::size_t>(block_of(u))][static_cast<std::size_t>(block_of(v))];
}

StepGraphon step_graphon_from_graph(const LabeledGraph& g) {
    const int n = g.node_count();
    if (n < 1) throw DomainError("step_graphon_from_graph: cannot partition [0,1] for an empty graph");
    StepGraphon w;
    w.weights.assign(static_cast<std::size_t>(n), 1.0 / n);
    w.values.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(i, j)) {
                w.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1.0;
                w.values[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1.0;
            }
    return w;
}

double graphon_character(const StepGraphon& w, const LabeledGraph& f) {
    const int m = f.node_count();
    const int k = w.block_count();
    assignments_or_throw(k, m);
    if (m == 0) return 1.0;

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (f.has_edge(i, j)) edges.emplace_back(i, j);

    std::vector<int> block(static_cast<std::size_t>(m), 0);
    long double total = 0.0;
    while (true) {
        double term = 1.0;
        for (int i = 0; i < m && term != 0.0; ++i)
            term *= w.weights[static_cast<std::size_t>(block[static_cast<std::size_t>(i)])];
        for (const auto& [i, j] : edges) {
            if (term == 0.0) break;
            term *= w.values[static_cast<std::size_t>(block[static_cast<std::size_t>(i)])]
                            [static_cast<std::size_t>(block[static_cast<std::size_t>(j)])];
        }
        total += term;
        int pos = m - 1;
        while (pos >= 0 && block[static_cast<std::size_t>(pos)] == k - 1) {
            block[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++block[static_cast<std::size_t>(pos)];
    }
    return static_cast<double>(total);
}

LabeledGraph sample_w_random(const StepGraphon& w, int n, std::uint64_t seed) {
    if (n < 0) throw DomainError("sample_w_random: negative node count");
    LabeledGraph g(n);
    std::vector<double> latent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        latent[static_cast<std::size_t>(i)] =
            rng::uniform(seed, rng::kStreamNode, static_cast<std::uint64_t>(i));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double p = w.value_at(latent[static_cast<std::size_t>(i)],
                                        latent[static_cast<std::size_t>(j)]);
            const double coin = rng::uniform(seed, rng::kStreamEdge,
                                             static_cast<std::uint64_t>(i),
                                             static_cast<std::uint64_t>(j));
            if (coin < p) g.set_edge(i, j);
        }
    }
    return g;
}

GraphDistribution w_random_distribution(const StepGraphon& w, int n) {
    assignments_or_throw(w.block_count(), n);
    GraphDistribution p(n);
    const int k = w.block_count();
    const int bits = n * (n - 1) / 2;
    std::vector<int> block(static_cast<std::size_t>(n), 0);
    // Condition on the block assignment, then edges are independent coins.
    while (true) {
        double assignment_weight = 1.0;
        for (int i = 0; i < n; ++i)
            assignment_weight *= w.weights[static_cast<std::size_t>(block[static_cast<std::size_t>(i)])];
        std::vector<double> edge_p(static_cast<std::size_t>(bits));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                edge_p[static_cast<std::size_t>(pair_index(n, i, j))] =
                    w.values[static_cast<std::size_t>(block[static_cast<std::size_t>(i)])]
                            [static_cast<std::size_t>(block[static_cast<std::size_t>(j)])];
        for (std::uint32_t mask = 0; mask < p.mass.size(); ++mask) {
            double prob = assignment_weight;
            for (int b = 0; b < bits && prob != 0.0; ++b)
                prob *= (mask >> b) & 1u ? edge_p[static_cast<std::size_t>(b)]
                                         : 1.0 - edge_p[static_cast<std::size_t>(b)];
            p.mass[mask] += prob;
        }
        int pos = n - 1;
        while (pos >= 0 && block[static_cast<std::size_t>(pos)] == k - 1) {
            block[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++block[static_cast<std::size_t>(pos)];
    }
    return p;
}

McEstimate mc_estimate_character(const StepGraphon& w, const LabeledGraph& f,
                                 std::int64_t trials, std::uint64_t seed) {
    if (trials < 1) throw DomainError("mc_estimate_character: trials must be >= 1");
    const int m = f.node_count();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (f.has_edge(i, j)) edges.emplace_back(i, j);

    std::vector<double> latent(static_cast<std::size_t>(m));
    long double sum = 0.0, sum_sq = 0.0;
    for (std::int64_t t = 0; t < trials; ++t) {
        for (int i = 0; i < m; ++i)
            latent[static_cast<std::size_t>(i)] =
                rng::uniform(seed, rng::kStreamTrial, static_cast<std::uint64_t>(t),
                             static_cast<std::uint64_t>(i));
        double product = 1.0;
        for (const auto& [i, j] : edges) {
            product *= w.value_at(latent[static_cast<std::size_t>(i)],
                                  latent[static_cast<std::size_t>(j)]);
            if (product == 0.0) break;
        }
        sum += product;
        sum_sq += static_cast<long double>(product) * product;
    }
    McEstimate est;
    est.trials = trials;
    est.estimate = static_cast<double>(sum / trials);
    if (trials > 1) {
        const long double mean = sum / trials;
        long double var = (sum_sq - static_cast<long double>(trials) * mean * mean) /
                          (trials - 1);
        if (var < 0.0) var = 0.0;  // rounding guard for constant integrands
        est.std_error = static_cast<double>(std::sqrt(static_cast<double>(var / trials)));
    }
    return est;
}

SymmetricFunctional functional_from_graphon(const StepGraphon& w, int n_max) {
    SymmetricFunctional phi;
    phi.n_max = n_max;
    phi.source = FunctionalSource::graphon;
    for (const auto& cls : classes_up_to(n_max))
        phi.set(cls, graphon_character(w, cls.canon));
    return phi;
}

StepGraphon read_graphon(std::istream& in) {
    int k = 0;
    if (!(in >> k) || k < 1) throw DomainError("graphon file must start with a positive block count");
    if (k > 1024) throw CapacityError("graphon file has an unreasonable block count");
    StepGraphon w;
    w.weights.resize(static_cast<std::size_t>(k));
    for (auto& wgt : w.weights)
        if (!(in >> wgt)) throw DomainError("graphon file is missing block weights");
    w.values.assign(static_cast<std::size_t>(k), std::vector<double>(static_cast<std::size_t>(k)));
    for (auto& row : w.values)
        for (auto& v : row)
            if (!(in >> v)) throw DomainError("graphon file is missing value entries");
    w.validate();
    return w;
}

void write_graphon(std::ostream& out, const StepGraphon& w) {
    char buffer[64];
    out << w.block_count() << '\n';
    for (std::size_t a = 0; a < w.weights.size(); ++a) {
        std::snprintf(buffer, sizeof buffer, "%.12g", w.weights[a]);
        out << (a ? " " : "") << buffer;
    }
    out << '\n';
    for (const auto& row : w.values) {
        for (std::size_t b = 0; b < row.size(); ++b) {
            std::snprintf(buffer, sizeof buffer, "%.12g", row[b]);
            out << (b ? " " : "") << buffer;
        }
        out << '\n';
    }
}

} // namespace graphlim
