#ifndef GRAPHLIM_GRAPHS_HPP
#define GRAPHLIM_GRAPHS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphlim/errors.hpp"

namespace graphlim {

// Simple labeled graph on nodes {0, ..., n-1}, stored as one bit per
// unordered pair in row-major upper-triangular order:
//   pair 0 = (0,1), pair 1 = (0,2), ..., pair n-2 = (0,n-1), pair n-1 = (1,2), ...
// The representation admits no loops and no multi-edges. The text encoding is
// "n:bits" with character k of `bits` giving pair k, e.g. "3:111" is the
// triangle and "3:100" the single edge (0,1); the 0-node graph is "0:".
class LabeledGraph {
public:
    LabeledGraph() = default;
    explicit LabeledGraph(int node_count);

    // Graph from the bit mask whose bit k is pair k. Requires at most 64 pairs
    // (node_count <= 11).
    static LabeledGraph from_mask(int node_count, std::uint64_t mask);

    // Parses the "n:bits" encoding. Throws DomainError on malformed input.
    static LabeledGraph parse(std::string_view text);

    static LabeledGraph complete(int node_count);

    int node_count() const { return n_; }
    int pair_count() const { return n_ * (n_ - 1) / 2; }
    int edge_count() const;

    bool has_edge(int i, int j) const;
    void set_edge(int i, int j, bool present = true);

    // Pair-k bit, 0 <= k < pair_count().
    bool bit(int k) const { return (words_[k >> 6] >> (k & 63)) & 1u; }
    void set_bit(int k, bool value);

    // The edge mask with bit k = pair k. Requires pair_count() <= 64.
    std::uint64_t mask() const;

    std::string encode() const;

    friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }
    friend bool operator!=(const LabeledGraph& a, const LabeledGraph& b) { return !(a == b); }
    // Container ordering (node count, then words); not the canonical order.
    friend bool operator<(const LabeledGraph& a, const LabeledGraph& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.words_ < b.words_;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Index of pair (i, j), i < j, in the upper-triangular order above.
inline int pair_index(int n, int i, int j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// Isomorphism class: the canonical representative together with the number of
// labeled graphs in the class (n! / |Aut|).
struct UnlabeledGraph {
    LabeledGraph canon;
    std::uint64_t class_size = 1;

    int node_count() const { return canon.node_count(); }
    int edge_count() const { return canon.edge_count(); }

    friend bool operator==(const UnlabeledGraph& a, const UnlabeledGraph& b) {
        return a.canon == b.canon;
    }
    friend bool operator!=(const UnlabeledGraph& a, const UnlabeledGraph& b) { return !(a == b); }
    friend bool operator<(const UnlabeledGraph& a, const UnlabeledGraph& b) {
        return a.canon < b.canon;
    }
};

// All 2^(n(n-1)/2) labeled graphs on [n] in ascending mask order.
// Supported for n <= 7.
std::vector<LabeledGraph> enumerate_labeled(int n);

// Canonical representative of G's isomorphism class: the relabeling whose
// edge mask is smallest as an integer (equivalently, whose edges occupy the
// earliest pairs). Brute force over all n! permutations; n <= 8.
LabeledGraph canonical_form(const LabeledGraph& g);

// Canonical form plus class size, computed by enumerating the orbit.
UnlabeledGraph to_unlabeled(const LabeledGraph& g);

// One entry per isomorphism class of graphs on [n], ordered by canonical
// mask. Class sizes sum to 2^(n(n-1)/2). Supported for n <= 7.
std::vector<UnlabeledGraph> isomorphism_classes(int n);

// Every isomorphism class with at most max_nodes nodes, smaller node counts
// first. max_nodes <= 7.
std::vector<UnlabeledGraph> classes_up_to(int max_nodes);

// Node-disjoint union of labeled graphs: V's nodes are shifted past U's.
LabeledGraph disjoint_union(const LabeledGraph& u, const LabeledGraph& v);

// Semigroup operation on classes; the result is canonicalized. The combined
// node count must stay within canonicalization capacity.
UnlabeledGraph disjoint_union(const UnlabeledGraph& u, const UnlabeledGraph& v);

// Subgraph induced by `nodes` (strictly increasing, subset of [n]), relabeled
// to {0, ..., |nodes|-1} preserving order.
LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const int> nodes);

// Convenience: the subgraph induced by the first m nodes.
LabeledGraph induced_prefix(const LabeledGraph& g, int m);

// G relabeled by sigma: edge (sigma[i], sigma[j]) in the result iff
// edge (i, j) in G. sigma must be a permutation of {0, ..., n-1}.
LabeledGraph relabel(const LabeledGraph& g, std::span<const int> sigma);

// Edge-set inclusion of F in G on a shared node set.
bool edge_subset_contains(const LabeledGraph& f, const LabeledGraph& g);

// Drops isolated nodes, relabeling the rest to an initial segment in order.
LabeledGraph strip_isolated(const LabeledGraph& g);

// mask -> canonical mask for every graph on [n], built once per n and cached
// (n <= 7). Threadsafe.
const std::vector<std::uint32_t>& canonical_mask_table(int n);

} // namespace graphlim

#endif
