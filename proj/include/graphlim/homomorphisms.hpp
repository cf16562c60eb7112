#ifndef GRAPHLIM_HOMOMORPHISMS_HPP
#define GRAPHLIM_HOMOMORPHISMS_HPP

#include <cstdint>
#include <vector>

#include "graphlim/graphs.hpp"
#include "graphlim/mobius.hpp"
#include "graphlim/rational.hpp"

namespace graphlim {

// Number of edge-preserving maps V(F) -> V(G); isolated nodes of F each
// contribute a factor v(G), and v(F)=0 yields 1. Backtracking with
// adjacency-bitset pruning; v(G) <= 64.
std::int64_t hom_count(const LabeledGraph& f, const LabeledGraph& g);

// Injective edge-preserving maps; 0 whenever v(F) > v(G).
std::int64_t inj_count(const LabeledGraph& f, const LabeledGraph& g);

// (x)_y = x (x-1) ... (x-y+1); equals 1 at y=0 and 0 when y > x >= 0.
std::int64_t falling_factorial(std::int64_t x, int y);

// Exact densities of F in G. Both counts and all three derived quantities
// depend on (F, G) only through isomorphism classes.
struct DensityReport {
    std::int64_t hom = 0;
    std::int64_t inj = 0;
    Rational t_hom;              // hom / v(G)^v(F)
    Rational t_inj;              // inj / (v(G))_{v(F)}; 0 when undefined
    bool t_inj_defined = true;   // false iff v(F) > v(G)
    Rational gap_bound;          // 1 - (n)_m / n^m with m = v(F), n = v(G)
};

DensityReport densities(const LabeledGraph& f, const LabeledGraph& g);

// Distribution of the graph on [m] built by drawing m nodes of G uniformly
// with replacement and joining i~j iff the draws are distinct and adjacent.
// Its Mobius parameters are exactly t_hom(., G).
GraphDistribution sample_dist_hom(int m, const LabeledGraph& g);

// Induced-subgraph distribution of an ordered uniform draw of m distinct
// nodes; Mobius parameters t_inj(., G). Requires m <= v(G).
GraphDistribution sample_dist_inj(int m, const LabeledGraph& g);

// Exact numerators of the two sampling distributions: hom tallies are over
// denominator v(G)^m, inj tallies over (v(G))_m.
std::vector<std::int64_t> sample_tally_hom(int m, const LabeledGraph& g);
std::vector<std::int64_t> sample_tally_inj(int m, const LabeledGraph& g);

struct SamplingGap {
    Rational sup_gap;         // sup over F on [m] of |p_hom(F) - p_inj(F)|
    Rational envelope;        // 1 - (n)_m / n^m
    Rational loose_envelope;  // C(m,2) / n
};

// Exhaustive with-vs-without-replacement gap; m <= v(G).
SamplingGap sampling_gap(int m, const LabeledGraph& g);

} // namespace graphlim

#endif
