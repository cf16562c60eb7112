#include "graphlim/graphs.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace graphlim {

namespace {

constexpr int kEnumerateMaxNodes = 7;   // 2^21 graphs
constexpr int kCanonicalMaxNodes = 8;   // 8! = 40320 permutations

int checked_pair_count(int n) {
    return n * (n - 1) / 2;
}

// Pair-index image of each pair under sigma, for fast mask relabeling.
std::vector<int> pair_permutation(int n, std::span<const int> sigma) {
    std::vector<int> map(static_cast<std::size_t>(checked_pair_count(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int a = sigma[i], b = sigma[j];
            if (a > b) std::swap(a, b);
            map[pair_index(n, i, j)] = pair_index(n, a, b);
        }
    }
    return map;
}

std::uint64_t apply_pair_map(std::uint64_t mask, const std::vector<int>& map) {
    std::uint64_t out = 0;
    while (mask) {
        const int k = std::countr_zero(mask);
        out |= std::uint64_t{1} << map[k];
        mask &= mask - 1;
    }
    return out;
}

std::vector<std::vector<int>> all_pair_permutations(int n) {
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<std::vector<int>> maps;
    do {
        maps.push_back(pair_permutation(n, sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return maps;
}

struct ClassTable {
    std::vector<std::uint32_t> canon;          // mask -> canonical mask
    std::vector<std::uint32_t> rep_masks;      // ascending canonical masks
    std::vector<std::uint64_t> class_sizes;    // orbit sizes, parallel to rep_masks
};

// Canonicalizes every graph on [n] in one sweep: masks are visited in
// ascending order, so the first unseen mask of each orbit is its canonical
// representative; its whole orbit is then marked.
ClassTable build_class_table(int n) {
    const int bits = checked_pair_count(n);
    const auto maps = all_pair_permutations(n);
    ClassTable table;
    table.canon.assign(std::size_t{1} << bits, UINT32_MAX);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << bits); ++mask) {
        if (table.canon[mask] != UINT32_MAX) continue;
        std::uint64_t orbit = 0;
        for (const auto& map : maps) {
            const auto image = static_cast<std::uint32_t>(apply_pair_map(mask, map));
            if (table.canon[image] == UINT32_MAX) {
                table.canon[image] = mask;
                ++orbit;
            }
        }
        table.rep_masks.push_back(mask);
        table.class_sizes.push_back(orbit);
    }
    return table;
}

const ClassTable& class_table(int n) {
    if (n < 0 || n > kEnumerateMaxNodes)
        throw CapacityError("isomorphism tables support 0 <= n <= 7, got n=" + std::to_string(n));
    static std::array<ClassTable, kEnumerateMaxNodes + 1> cache;
    static std::array<std::once_flag, kEnumerateMaxNodes + 1> flags;
    std::call_once(flags[static_cast<std::size_t>(n)],
                   [n] { cache[static_cast<std::size_t>(n)] = build_class_table(n); });
    return cache[static_cast<std::size_t>(n)];
}

} // namespace

LabeledGraph::LabeledGraph(int node_count) : n_(node_count) {
    if (node_count < 0) throw DomainError("negative node count");
    words_.assign(static_cast<std::size_t>((pair_count() + 63) / 64), 0);
}

LabeledGraph LabeledGraph::from_mask(int node_count, std::uint64_t mask) {
    LabeledGraph g(node_count);
    if (g.pair_count() > 64) throw CapacityError("from_mask supports at most 64 pairs");
    if (g.pair_count() < 64 && (mask >> g.pair_count()) != 0)
        throw DomainError("edge mask has bits beyond the pair count");
    if (!g.words_.empty()) g.words_[0] = mask;
    return g;
}

LabeledGraph LabeledGraph::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw DomainError("graph encoding must look like \"n:bits\"");
    int n = 0;
    const auto head = text.substr(0, colon);
    if (head.empty()) throw DomainError("graph encoding is missing the node count");
    for (char c : head) {
        if (c < '0' || c > '9') throw DomainError("bad node count in graph encoding");
        n = n * 10 + (c - '0');
        if (n > 10000) throw DomainError("unreasonable node count in graph encoding");
    }
    LabeledGraph g(n);
    const auto bits = text.substr(colon + 1);
    if (static_cast<int>(bits.size()) != g.pair_count())
        throw DomainError("graph encoding has " + std::to_string(bits.size()) +
                          " bits where " + std::to_string(g.pair_count()) + " are required");
    for (int k = 0; k < g.pair_count(); ++k) {
        if (bits[static_cast<std::size_t>(k)] == '1') g.set_bit(k, true);
        else if (bits[static_cast<std::size_t>(k)] != '0')
            throw DomainError("graph encoding bits must be 0 or 1");
    }
    return g;
}

LabeledGraph LabeledGraph::complete(int node_count) {
    LabeledGraph g(node_count);
    for (int k = 0; k < g.pair_count(); ++k) g.set_bit(k, true);
    return g;
}

int LabeledGraph::edge_count() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
}

bool LabeledGraph::has_edge(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n_) throw DomainError("edge endpoint out of range");
    return bit(pair_index(n_, i, j));
}

void LabeledGraph::set_edge(int i, int j, bool present) {
    if (i == j) throw DomainError("no self-loops in a simple graph");
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n_) throw DomainError("edge endpoint out of range");
    set_bit(pair_index(n_, i, j), present);
}

void LabeledGraph::set_bit(int k, bool value) {
    if (value) words_[k >> 6] |= std::uint64_t{1} << (k & 63);
    else words_[k >> 6] &= ~(std::uint64_t{1} << (k & 63));
}

std::uint64_t LabeledGraph::mask() const {
    if (pair_count() > 64) throw CapacityError("graph too large for a single edge mask");
    return words_.empty() ? 0 : words_[0];
}

std::string LabeledGraph::encode() const {
    std::string out = std::to_string(n_) + ":";
    out.reserve(out.size() + static_cast<std::size_t>(pair_count()));
    for (int k = 0; k < pair_count(); ++k) out.push_back(bit(k) ? '1' : '0');
    return out;
}

std::vector<LabeledGraph> enumerate_labeled(int n) {
    if (n < 0 || n > kEnumerateMaxNodes)
        throw CapacityError("enumerate_labeled supports 0 <= n <= 7, got n=" + std::to_string(n));
    const int bits = checked_pair_count(n);
    std::vector<LabeledGraph> all;
    all.reserve(std::size_t{1} << bits);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask)
        all.push_back(LabeledGraph::from_mask(n, mask));
    return all;
}

LabeledGraph canonical_form(const LabeledGraph& g) {
    const int n = g.node_count();
    if (n > kCanonicalMaxNodes)
        throw CapacityError("canonical_form supports n <= 8, got n=" + std::to_string(n));
    if (n <= 1) return g;
    const std::uint64_t mask = g.mask();
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::uint64_t best = mask;
    do {
        const auto map = pair_permutation(n, sigma);
        best = std::min(best, apply_pair_map(mask, map));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return LabeledGraph::from_mask(n, best);
}

UnlabeledGraph to_unlabeled(const LabeledGraph& g) {
    const int n = g.node_count();
    if (n > kCanonicalMaxNodes)
        throw CapacityError("to_unlabeled supports n <= 8, got n=" + std::to_string(n));
    if (n <= 1) return {g, 1};
    const std::uint64_t mask = g.mask();
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::uint64_t best = mask;
    std::unordered_set<std::uint64_t> orbit;
    do {
        const auto image = apply_pair_map(mask, pair_permutation(n, sigma));
        orbit.insert(image);
        best = std::min(best, image);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return {LabeledGraph::from_mask(n, best), orbit.size()};
}

std::vector<UnlabeledGraph> isomorphism_classes(int n) {
    const auto& table = class_table(n);
    std::vector<UnlabeledGraph> classes;
    classes.reserve(table.rep_masks.size());
    for (std::size_t c = 0; c < table.rep_masks.size(); ++c)
        classes.push_back({LabeledGraph::from_mask(n, table.rep_masks[c]), table.class_sizes[c]});
    return classes;
}

std::vector<UnlabeledGraph> classes_up_to(int max_nodes) {
    std::vector<UnlabeledGraph> all;
    for (int n = 0; n <= max_nodes; ++n) {
        auto level = isomorphism_classes(n);
        all.insert(all.end(), level.begin(), level.end());
    }
    return all;
}

LabeledGraph disjoint_union(const LabeledGraph& u, const LabeledGraph& v) {
    const int nu = u.node_count(), nv = v.node_count();
    LabeledGraph out(nu + nv);
    for (int i = 0; i < nu; ++i)
        for (int j = i + 1; j < nu; ++j)
            if (u.has_edge(i, j)) out.set_edge(i, j);
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            if (v.has_edge(i, j)) out.set_edge(nu + i, nu + j);
    return out;
}

UnlabeledGraph disjoint_union(const UnlabeledGraph& u, const UnlabeledGraph& v) {
    const int n = u.node_count() + v.node_count();
    if (n > kCanonicalMaxNodes)
        throw CapacityError("disjoint_union result has " + std::to_string(n) +
                            " nodes, beyond canonicalization capacity (8)");
    return to_unlabeled(disjoint_union(u.canon, v.canon));
}

LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const int> nodes) {
    const int n = g.node_count();
    for (std::size_t t = 0; t < nodes.size(); ++t) {
        if (nodes[t] < 0 || nodes[t] >= n)
            throw DomainError("induced_subgraph: node " + std::to_string(nodes[t]) +
                              " is not in [0, " + std::to_string(n) + ")");
        if (t > 0 && nodes[t] <= nodes[t - 1])
            throw DomainError("induced_subgraph: node list must be strictly increasing");
    }
    LabeledGraph out(static_cast<int>(nodes.size()));
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b)
            if (g.has_edge(nodes[a], nodes[b]))
                out.set_edge(static_cast<int>(a), static_cast<int>(b));
    return out;
}

LabeledGraph induced_prefix(const LabeledGraph& g, int m) {
    if (m < 0 || m > g.node_count())
        throw DomainError("induced_prefix: m out of range");
    std::vector<int> nodes(static_cast<std::size_t>(m));
    std::iota(nodes.begin(), nodes.end(), 0);
    return induced_subgraph(g, nodes);
}

LabeledGraph relabel(const LabeledGraph& g, std::span<const int> sigma) {
    const int n = g.node_count();
    if (static_cast<int>(sigma.size()) != n)
        throw DomainError("relabel: permutation length differs from node count");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        if (sigma[i] < 0 || sigma[i] >= n || seen[static_cast<std::size_t>(sigma[i])])
            throw DomainError("relabel: sigma is not a permutation of the node set");
        seen[static_cast<std::size_t>(sigma[i])] = true;
    }
    LabeledGraph out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(i, j)) out.set_edge(sigma[i], sigma[j]);
    return out;
}

bool edge_subset_contains(const LabeledGraph& f, const LabeledGraph& g) {
    if (f.node_count() != g.node_count())
        throw DomainError("edge_subset_contains: graphs must share a node set");
    for (int k = 0; k < f.pair_count(); ++k)
        if (f.bit(k) && !g.bit(k)) return false;
    return true;
}

LabeledGraph strip_isolated(const LabeledGraph& g) {
    const int n = g.node_count();
    std::vector<int> keep;
    for (int i = 0; i < n; ++i) {
        bool isolated = true;
        for (int j = 0; j < n && isolated; ++j)
            if (j != i && g.has_edge(i, j)) isolated = false;
        if (!isolated) keep.push_back(i);
    }
    return induced_subgraph(g, keep);
}

const std::vector<std::uint32_t>& canonical_mask_table(int n) {
    return class_table(n).canon;
}

} // namespace graphlim
