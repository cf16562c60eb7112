#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "graphlim/graphs.hpp"
#include "graphlim/rng.hpp"
#include "test_support.hpp"

using namespace graphlim;
using namespace graphlim::testing;

TEST_CASE("encoding round trips and pins the documented forms") {
    CHECK(LabeledGraph().encode() == "0:");
    CHECK(LabeledGraph::complete(3).encode() == "3:111");

    LabeledGraph single(3);
    single.set_edge(0, 1);
    CHECK(single.encode() == "3:100");

    for (const char* text : {"0:", "1:", "2:1", "3:101", "5:1010010110"}) {
        CHECK(LabeledGraph::parse(text).encode() == text);
    }

    CHECK_THROWS_AS(LabeledGraph::parse("3:10"), DomainError);
    CHECK_THROWS_AS(LabeledGraph::parse("3:10x"), DomainError);
    CHECK_THROWS_AS(LabeledGraph::parse("abc"), DomainError);
    CHECK_THROWS_AS(LabeledGraph::parse(":01"), DomainError);
}

TEST_CASE("enumerate_labeled sizes and order") {
    CHECK(enumerate_labeled(0).size() == 1);
    CHECK(enumerate_labeled(0)[0] == LabeledGraph());
    CHECK(enumerate_labeled(2).size() == 2);
    CHECK(enumerate_labeled(4).size() == 64);

    const auto all = enumerate_labeled(4);
    std::set<std::uint64_t> seen;
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].mask() == i);
        seen.insert(all[i].mask());
    }
    CHECK(seen.size() == all.size());

    CHECK_THROWS_AS(enumerate_labeled(8), CapacityError);
    CHECK_THROWS_AS(enumerate_labeled(-1), CapacityError);
}

TEST_CASE("canonical_form matches the orbit-minimum oracle") {
    // Two labelings of the 3-path agree.
    LabeledGraph a(3), b(3);
    a.set_edge(0, 1);
    a.set_edge(1, 2);
    b.set_edge(0, 2);
    b.set_edge(2, 1);
    CHECK(canonical_form(a) == canonical_form(b));

    // Complete graphs are fixed points.
    CHECK(canonical_form(LabeledGraph::complete(3)) == LabeledGraph::complete(3));

    // Single edge (1,2) among nodes {0,1,2} maps to the earliest pair.
    LabeledGraph late(3);
    late.set_edge(1, 2);
    CHECK(canonical_form(late).encode() == "3:100");

    // Oracle sweep: canonical form is the orbit minimum, and relabeling never
    // changes it. Exhaustive for n <= 5.
    for (int n = 0; n <= 5; ++n) {
        std::vector<int> sigma(static_cast<std::size_t>(n));
        for (const auto& g : enumerate_labeled(n)) {
            const auto canon = canonical_form(g);
            CHECK(canon.mask() == *orbit_masks(g).begin());
            CHECK(canonical_form(canon) == canon);
            std::iota(sigma.begin(), sigma.end(), 0);
            do {
                CHECK(canonical_form(relabel(g, sigma)) == canon);
            } while (std::next_permutation(sigma.begin(), sigma.end()));
        }
    }
}

TEST_CASE("isomorphism class counts and sizes") {
    CHECK(isomorphism_classes(2).size() == 2);
    CHECK(isomorphism_classes(3).size() == 4);
    CHECK(isomorphism_classes(4).size() == 11);
    CHECK(isomorphism_classes(5).size() == 34);
    CHECK(isomorphism_classes(6).size() == 156);
    CHECK(isomorphism_classes(7).size() == 1044);

    for (int n = 0; n <= 6; ++n) {
        std::uint64_t total = 0;
        for (const auto& cls : isomorphism_classes(n)) {
            CHECK(canonical_form(cls.canon) == cls.canon);
            CHECK(cls.class_size == factorial(n) / automorphism_count(cls.canon));
            total += cls.class_size;
        }
        CHECK(total == std::uint64_t{1} << (n * (n - 1) / 2));
    }

    // At n = 7 the class sizes still partition all 2^21 labeled graphs.
    std::uint64_t total7 = 0;
    for (const auto& cls : isomorphism_classes(7)) total7 += cls.class_size;
    CHECK(total7 == std::uint64_t{1} << 21);

    // Cross-check against a from-scratch canonicalization of the full
    // enumeration.
    for (int n = 2; n <= 5; ++n) {
        std::set<std::uint64_t> reps;
        for (const auto& g : enumerate_labeled(n)) reps.insert(*orbit_masks(g).begin());
        CHECK(reps.size() == isomorphism_classes(n).size());
    }

    CHECK_THROWS_AS(isomorphism_classes(8), CapacityError);
}

TEST_CASE("to_unlabeled computes orbit sizes") {
    const auto k2_class = to_unlabeled(LabeledGraph::complete(2));
    CHECK(k2_class.class_size == 1);
    const auto p3_class = to_unlabeled(path3());
    CHECK(p3_class.class_size == 3);
}

TEST_CASE("disjoint_union is a commutative and associative semigroup operation") {
    const UnlabeledGraph empty = to_unlabeled(LabeledGraph());
    const auto k2 = to_unlabeled(LabeledGraph::complete(2));
    const auto k3 = to_unlabeled(LabeledGraph::complete(3));

    // K_2 + K_2 is the 4-node perfect matching (3 labeled graphs).
    const auto matching = disjoint_union(k2, k2);
    CHECK(matching.canon.encode() == "4:001100");
    CHECK(matching.class_size == 3);

    const auto k2k3 = disjoint_union(k2, k3);
    CHECK(k2k3.node_count() == 5);
    CHECK(k2k3.edge_count() == 4);
    CHECK(k2k3 == to_unlabeled(disjoint_union(LabeledGraph::complete(2),
                                              LabeledGraph::complete(3))));

    // Exhaustive semigroup laws on small classes.
    const auto small = classes_up_to(4);
    for (const auto& u : small) {
        CHECK(disjoint_union(u, empty) == u);
        CHECK(disjoint_union(empty, u) == u);
        for (const auto& v : small) {
            if (u.node_count() + v.node_count() > 6) continue;
            CHECK(disjoint_union(u, v) == disjoint_union(v, u));
            for (const auto& w : small) {
                if (u.node_count() + v.node_count() + w.node_count() > 6) continue;
                CHECK(disjoint_union(disjoint_union(u, v), w) ==
                      disjoint_union(u, disjoint_union(v, w)));
            }
        }
    }

    const auto k4 = to_unlabeled(LabeledGraph::complete(4));
    const auto k5 = to_unlabeled(LabeledGraph::complete(5));
    CHECK_THROWS_AS(disjoint_union(k4, k5), CapacityError);
}

TEST_CASE("induced_subgraph") {
    const std::vector<int> first_two = {0, 1};
    CHECK(induced_subgraph(LabeledGraph::complete(3), first_two) == LabeledGraph::complete(2));

    const auto square = cycle(4);
    const std::vector<int> diagonal = {0, 2};
    const auto opposite = induced_subgraph(square, diagonal);
    CHECK(opposite.node_count() == 2);
    CHECK(opposite.edge_count() == 0);

    for (const auto& g : enumerate_labeled(4)) {
        CHECK(induced_prefix(g, 4) == g);
        // Consistency of nested prefixes.
        for (int k = 0; k <= 4; ++k)
            for (int m = 0; m <= k; ++m)
                CHECK(induced_prefix(induced_prefix(g, k), m) == induced_prefix(g, m));
    }

    const std::vector<int> bad = {1, 5};
    CHECK_THROWS_AS(induced_subgraph(LabeledGraph::complete(3), bad), DomainError);
    const std::vector<int> unsorted = {1, 0};
    CHECK_THROWS_AS(induced_subgraph(LabeledGraph::complete(3), unsorted), DomainError);
}

TEST_CASE("relabel") {
    LabeledGraph g(3);
    g.set_edge(0, 1);

    const std::vector<int> identity = {0, 1, 2};
    CHECK(relabel(g, identity) == g);

    // sigma = (0 -> 2, 1 -> 1, 2 -> 0) moves edge (0,1) to (2,1).
    const std::vector<int> swap02 = {2, 1, 0};
    LabeledGraph expected(3);
    expected.set_edge(1, 2);
    CHECK(relabel(g, swap02) == expected);
    CHECK(relabel(relabel(g, swap02), swap02) == g);

    // A 3-cycle composed with its inverse is the identity on every graph.
    const std::vector<int> cycle3 = {1, 2, 0};
    const std::vector<int> cycle3_inv = {2, 0, 1};
    for (const auto& h : enumerate_labeled(3))
        CHECK(relabel(relabel(h, cycle3), cycle3_inv) == h);

    const std::vector<int> not_perm = {0, 0, 2};
    CHECK_THROWS_AS(relabel(g, not_perm), DomainError);
    const std::vector<int> short_perm = {0, 1};
    CHECK_THROWS_AS(relabel(g, short_perm), DomainError);
}

TEST_CASE("edge_subset_contains") {
    const auto k3 = LabeledGraph::complete(3);
    for (const auto& g : enumerate_labeled(3)) {
        CHECK(edge_subset_contains(LabeledGraph(3), g));
        CHECK(edge_subset_contains(g, g));
    }
    CHECK_FALSE(edge_subset_contains(k3, path3()));
    CHECK(edge_subset_contains(path3(), k3));
    CHECK_THROWS_AS(edge_subset_contains(LabeledGraph(2), k3), DomainError);
}

TEST_CASE("strip_isolated") {
    CHECK(strip_isolated(LabeledGraph(5)) == LabeledGraph());

    auto padded = disjoint_union(LabeledGraph::complete(2), LabeledGraph(1));
    CHECK(strip_isolated(padded) == LabeledGraph::complete(2));

    LabeledGraph sparse(4);
    sparse.set_edge(1, 3);
    CHECK(strip_isolated(sparse).encode() == "2:1");

    // Idempotent and edge-preserving on everything small.
    for (const auto& g : enumerate_labeled(4)) {
        const auto stripped = strip_isolated(g);
        CHECK(stripped.edge_count() == g.edge_count());
        CHECK(strip_isolated(stripped) == stripped);
    }
}

TEST_CASE("canonical_mask_table agrees with canonical_form") {
    for (int n = 0; n <= 5; ++n) {
        const auto& table = canonical_mask_table(n);
        for (const auto& g : enumerate_labeled(n))
            CHECK(table[g.mask()] == canonical_form(g).mask());
    }
}

TEST_CASE("graphs beyond one mask word") {
    // 12 nodes = 66 pairs: exercises the multi-word bit storage used by
    // W-random sampling at larger n.
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        LabeledGraph g(12);
        int edges = 0;
        for (int i = 0; i < 12; ++i)
            for (int j = i + 1; j < 12; ++j)
                if (rng::uniform(seed, 0x77, i, j) < 0.4) {
                    g.set_edge(i, j);
                    ++edges;
                }
        CHECK(g.edge_count() == edges);
        CHECK(LabeledGraph::parse(g.encode()) == g);
        CHECK_THROWS_AS(g.mask(), CapacityError);

        const auto stripped = strip_isolated(g);
        CHECK(stripped.edge_count() == edges);
    }
    CHECK_THROWS_AS(LabeledGraph::from_mask(12, 0), CapacityError);
}
