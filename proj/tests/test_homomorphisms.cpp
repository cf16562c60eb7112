#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "graphlim/homomorphisms.hpp"
#include "test_support.hpp"

using namespace graphlim;
using namespace graphlim::testing;

TEST_CASE("hom_count basics") {
    const auto k2 = LabeledGraph::complete(2);
    const auto k3 = LabeledGraph::complete(3);
    for (const auto& g : enumerate_labeled(4))
        CHECK(hom_count(LabeledGraph(1), g) == 4);
    CHECK(hom_count(k2, k3) == 6);
    CHECK(hom_count(k3, k3) == 6);
    CHECK(hom_count(LabeledGraph(), k3) == 1);
    CHECK(hom_count(k2, LabeledGraph()) == 0);
    // Isolated nodes of F contribute a factor v(G) each.
    CHECK(hom_count(disjoint_union(k2, LabeledGraph(2)), k3) == 6 * 9);
}

TEST_CASE("inj_count basics") {
    const auto k2 = LabeledGraph::complete(2);
    const auto k3 = LabeledGraph::complete(3);
    CHECK(inj_count(k2, k3) == 6);
    CHECK(inj_count(k3, k2) == 0);
    CHECK(inj_count(LabeledGraph(2), k2) == 2);
    CHECK(inj_count(LabeledGraph(), LabeledGraph()) == 1);
}

TEST_CASE("counting kernels match naive enumeration") {
    // Class representatives suffice; isomorphism invariance is tested below.
    const auto hosts = classes_up_to(4);
    const auto patterns = classes_up_to(3);
    for (const auto& f : patterns) {
        for (const auto& g : hosts) {
            if (g.node_count() == 0) continue;
            CHECK(hom_count(f.canon, g.canon) == naive_map_count(f.canon, g.canon, false));
            CHECK(inj_count(f.canon, g.canon) == naive_map_count(f.canon, g.canon, true));
        }
    }
}

TEST_CASE("densities report") {
    const auto k2 = LabeledGraph::complete(2);
    const auto k3 = LabeledGraph::complete(3);

    const auto tight = densities(k2, k3);
    CHECK(tight.t_hom == Rational(2, 3));
    CHECK(tight.t_inj == Rational(1));
    CHECK(tight.gap_bound == Rational(1, 3));

    const auto node = densities(LabeledGraph(1), k3);
    CHECK(node.t_hom == Rational(1));
    CHECK(node.t_inj == Rational(1));

    const auto self = densities(k3, k3);
    CHECK(self.t_hom == Rational(2, 9));
    CHECK(self.t_inj == Rational(1));

    const auto undefined = densities(k3, k2);
    CHECK_FALSE(undefined.t_inj_defined);
    CHECK(undefined.t_inj == Rational(0));
    CHECK(undefined.gap_bound == Rational(1));

    CHECK_THROWS_AS(densities(k2, LabeledGraph()), DomainError);

    // Gap-bound and isomorphism-invariance sweep.
    for (const auto& f : classes_up_to(3)) {
        for (const auto& g : classes_up_to(5)) {
            if (g.node_count() < f.node_count() || g.node_count() == 0) continue;
            const auto report = densities(f.canon, g.canon);
            CHECK((report.t_hom - report.t_inj).abs() <= report.gap_bound);
            CHECK(report.gap_bound <=
                  Rational(static_cast<std::int64_t>(f.node_count()) * (f.node_count() - 1) / 2,
                           g.node_count()));
            // Same numbers through any other labeling of either side.
            const auto f_alt = *orbit_masks(f.canon).rbegin();
            const auto alt = densities(LabeledGraph::from_mask(f.node_count(), f_alt), g.canon);
            CHECK(alt.t_hom == report.t_hom);
            CHECK(alt.t_inj == report.t_inj);
        }
    }
}

TEST_CASE("sample_dist_hom") {
    const auto k3 = LabeledGraph::complete(3);
    const auto two_of_k3 = sample_dist_hom(2, k3);
    CHECK(two_of_k3.at(0) == doctest::Approx(1.0 / 3).epsilon(1e-14));
    CHECK(two_of_k3.at(1) == doctest::Approx(2.0 / 3).epsilon(1e-14));

    const auto one = sample_dist_hom(1, k3);
    CHECK(one.at(0) == 1.0);

    // Mobius parameters of the with-replacement draw are t_hom(., G).
    for (int m = 0; m <= 3; ++m) {
        for (const auto& g : classes_up_to(5)) {
            if (g.node_count() == 0) continue;
            const auto dist = sample_dist_hom(m, g.canon);
            dist.validate(1e-12);
            const auto z = z_from_p(dist);
            for (const auto& f : enumerate_labeled(m))
                CHECK(z.at(f.mask()) ==
                      doctest::Approx(densities(f, g.canon).t_hom.to_double()).epsilon(1e-12));
        }
    }
}

TEST_CASE("sample_dist_inj") {
    const auto k3 = LabeledGraph::complete(3);
    const auto pair_of_k3 = sample_dist_inj(2, k3);
    CHECK(pair_of_k3.at(1) == 1.0);

    // m = v(G): uniform over the relabelings of G.
    const auto full = sample_dist_inj(3, path3());
    for (std::uint64_t mask : orbit_masks(path3()))
        CHECK(full.at(static_cast<std::uint32_t>(mask)) == doctest::Approx(1.0 / 3).epsilon(1e-14));

    const auto pair_of_path = sample_dist_inj(2, path3());
    CHECK(pair_of_path.at(1) == doctest::Approx(2.0 / 3).epsilon(1e-14));

    CHECK_THROWS_AS(sample_dist_inj(3, LabeledGraph::complete(2)), DomainError);

    // Mobius parameters are t_inj(., G).
    for (int m = 0; m <= 3; ++m) {
        for (const auto& g : classes_up_to(5)) {
            if (g.node_count() < m) continue;
            const auto z = z_from_p(sample_dist_inj(m, g.canon));
            for (const auto& f : enumerate_labeled(m))
                CHECK(z.at(f.mask()) ==
                      doctest::Approx(densities(f, g.canon).t_inj.to_double()).epsilon(1e-12));
        }
    }
}

TEST_CASE("multiplicativity over disjoint unions") {
    const auto parts = classes_up_to(3);
    for (const auto& f1 : parts) {
        for (const auto& f2 : parts) {
            if (f1.node_count() + f2.node_count() > 5) continue;
            const auto joint = disjoint_union(f1.canon, f2.canon);
            for (const auto& g : classes_up_to(5)) {
                if (g.node_count() == 0) continue;
                CHECK(densities(joint, g.canon).t_hom ==
                      densities(f1.canon, g.canon).t_hom * densities(f2.canon, g.canon).t_hom);
            }
        }
    }
}

TEST_CASE("sampling_gap") {
    const auto k3 = LabeledGraph::complete(3);
    const auto tight = sampling_gap(2, k3);
    CHECK(tight.sup_gap == Rational(1, 3));
    CHECK(tight.envelope == Rational(1, 3));
    CHECK(tight.loose_envelope == Rational(1, 3));

    CHECK(sampling_gap(1, k3).sup_gap == Rational(0));

    CHECK(sampling_gap(2, LabeledGraph::complete(4)).envelope == Rational(1, 4));

    CHECK_THROWS_AS(sampling_gap(3, LabeledGraph::complete(2)), DomainError);

    for (int m = 0; m <= 3; ++m) {
        for (const auto& g : classes_up_to(5)) {
            if (g.node_count() < m || g.node_count() == 0) continue;
            const auto gap = sampling_gap(m, g.canon);
            CHECK(gap.sup_gap <= gap.envelope);
            CHECK(gap.envelope <= gap.loose_envelope);
        }
    }
}

TEST_CASE("falling_factorial") {
    CHECK(falling_factorial(3, 2) == 6);
    CHECK(falling_factorial(4, 2) == 12);
    CHECK(falling_factorial(5, 0) == 1);
    CHECK(falling_factorial(2, 3) == 0);
}
