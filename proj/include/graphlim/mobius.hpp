#ifndef GRAPHLIM_MOBIUS_HPP
#define GRAPHLIM_MOBIUS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "graphlim/graphs.hpp"

namespace graphlim {

// Probability mass function on all labeled graphs on [n], indexed by edge
// mask (the mask order is exactly the enumerate_labeled order).
struct GraphDistribution {
    int n = 0;
    std::vector<double> mass;

    GraphDistribution() : mass(1, 1.0) {}
    explicit GraphDistribution(int node_count);

    static GraphDistribution point_mass(const LabeledGraph& g);
    static GraphDistribution erdos_renyi(int n, double p);
    static GraphDistribution uniform(int n);

    double at(std::uint32_t mask) const { return mass[mask]; }
    double& at(std::uint32_t mask) { return mass[mask]; }
    double mass_of(const LabeledGraph& g) const;

    // Throws DomainError unless entries are in [0,1] (within tol) and sum to 1
    // within tol.
    void validate(double tol = 1e-9) const;
};

// Mobius parameters Z(F) = P(F is an edge-subset of the sample), one value
// per edge-subset F of K_n. Z only depends on F through its edge set, so
// adding isolated nodes to F never changes it.
struct MobiusParams {
    int n = 0;
    std::vector<double> z;

    MobiusParams() : z(1, 1.0) {}
    explicit MobiusParams(int node_count);

    double at(std::uint32_t mask) const { return z[mask]; }
    double& at(std::uint32_t mask) { return z[mask]; }

    // Z at a graph on m <= n nodes, read through its embedding into [n].
    double value_of(const LabeledGraph& f) const;
};

// Capacity ceiling shared by the transforms below (direct subset sums are
// 3^(n(n-1)/2) work).
inline constexpr int kTransformMaxNodes = 6;

// Z(F) = sum of P(B) over supergraphs B of F. Single value, any n <= 7.
double z_value(const GraphDistribution& p, std::uint32_t f_mask);

// The full Z table. n <= 6.
MobiusParams z_from_p(const GraphDistribution& p);

// Inclusion-exclusion inversion P(G) = sum over B >= G of (-1)^|B\G| Z(B),
// by direct alternating sum. Entries may come out negative; callers decide
// (see is_valid_mobius). Requires Z(empty) = 1. n <= 6.
GraphDistribution p_from_z(const MobiusParams& zp);

struct MobiusValidity {
    bool valid = true;
    // Witness graph with the most negative inverted mass, when invalid.
    std::optional<LabeledGraph> witness;
    double witness_mass = 0.0;
};

// A nonnegative Z is a valid Mobius parameter iff every inverted mass is
// nonnegative; tolerance absorbs the alternating-sum float error.
MobiusValidity is_valid_mobius(const MobiusParams& zp, double tol = 1e-9);

struct ExchangeabilityCheck {
    // Mass function constant on isomorphism orbits.
    bool permutation_invariant = false;
    // Z constant on isomorphism orbits, i.e. Z factors through canonical
    // form. Only run for n <= kTransformMaxNodes (full table needed).
    std::optional<bool> mobius_invariant;

    bool exchangeable() const {
        return permutation_invariant && mobius_invariant.value_or(true);
    }
    bool tests_agree() const {
        return !mobius_invariant || *mobius_invariant == permutation_invariant;
    }
};

ExchangeabilityCheck check_exchangeable(const GraphDistribution& p, double tol = 1e-9);

// True iff P is invariant under every node relabeling (both routes of
// check_exchangeable must concur).
bool is_exchangeable(const GraphDistribution& p, double tol = 1e-9);

// I.i.d. uniform masses, normalized. Deterministic in the seed.
GraphDistribution random_distribution(int n, std::uint64_t seed);

// I.i.d. uniform masses averaged over each isomorphism orbit, then
// normalized: exchangeable by construction, with full support. Note this is
// only *finitely* exchangeable: it need not extend to larger node sets, so
// its Mobius functional can fail reflection positivity.
GraphDistribution random_exchangeable_distribution(int n, std::uint64_t seed);

// Random convex mixture of 2..4 Erdos-Renyi components: the n-marginal of an
// exchangeable law on the infinite node set (a mixture of product measures),
// hence exchangeable, dissociated per component, and reflection-positive.
GraphDistribution random_character_mixture(int n, std::uint64_t seed);

// Distribution file: one "<graph-encoding> <probability>" line per graph,
// zero-mass lines may be omitted; blank lines and #-comments are skipped.
GraphDistribution read_distribution(std::istream& in);
void write_distribution(std::ostream& out, const GraphDistribution& p);

// Same line format for Mobius parameters; omitted graphs default to 0 and
// the empty graph must carry value 1.
MobiusParams read_mobius(std::istream& in);
void write_mobius(std::ostream& out, const MobiusParams& zp);

} // namespace graphlim

#endif
