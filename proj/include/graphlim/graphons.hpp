#ifndef GRAPHLIM_GRAPHONS_HPP
#define GRAPHLIM_GRAPHONS_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "graphlim/characters.hpp"
#include "graphlim/graphs.hpp"
#include "graphlim/mobius.hpp"

namespace graphlim {

// Piecewise-constant symmetric kernel on [0,1]^2: block a has length
// weights[a], and the kernel takes values[a][b] on block a x b. The diagonal
// may be nonzero for user-supplied graphons (probability inside a block).
struct StepGraphon {
    std::vector<double> weights;
    std::vector<std::vector<double>> values;

    int block_count() const { return static_cast<int>(weights.size()); }

    static StepGraphon constant(double p);

    // Weights positive and summing to 1 (1e-12), values a symmetric
    // block_count x block_count matrix with entries in [0,1].
    void validate() const;

    // Block containing u; u is clamped into [0,1).
    int block_of(double u) const;
    double value_at(double u, double v) const;
};

// The 0/1 graphon of a graph: v(G) equal blocks, value 1 on block (i,j) iff
// i ~ j. Rejects the empty graph (nothing to partition).
StepGraphon step_graphon_from_graph(const LabeledGraph& g);

// Exact integral over [0,1]^v(F) of the product of W(u_i, u_j) over the
// edges of F, by exhaustive sum over block assignments (early exit on zero
// factors). Capacity: v(F) <= 10 and block_count^v(F) <= 1e7.
double graphon_character(const StepGraphon& w, const LabeledGraph& f);

// W-random graph on [n]: latent uniforms u_i per node, edge (i,j) present
// with probability W(u_i, u_j). Deterministic in the seed; node i uses the
// kStreamNode sub-stream, pair (i,j) the kStreamEdge sub-stream.
LabeledGraph sample_w_random(const StepGraphon& w, int n, std::uint64_t seed);

// Exact law of sample_w_random on [n] (mixture over block assignments).
// Requires block_count^n within the same capacity as graphon_character.
GraphDistribution w_random_distribution(const StepGraphon& w, int n);

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;   // sample standard error; 0 when trials == 1
    std::int64_t trials = 0;
};

// Unbiased Monte Carlo estimate of graphon_character: averages the edge
// product over independent latent draws. Trial t, node i draws from the
// kStreamTrial sub-stream of the seed.
McEstimate mc_estimate_character(const StepGraphon& w, const LabeledGraph& f,
                                 std::int64_t trials, std::uint64_t seed);

// phi([F]) = graphon_character(W, F) on all classes up to n_max nodes.
SymmetricFunctional functional_from_graphon(const StepGraphon& w, int n_max);

// Graphon file: "k", then k weights, then k rows of k values,
// whitespace-separated.
StepGraphon read_graphon(std::istream& in);
void write_graphon(std::ostream& out, const StepGraphon& w);

} // namespace graphlim

#endif
