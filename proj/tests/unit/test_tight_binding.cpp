#include <doctest.h>

#include <algorithm>
#include <cmath>

#include <graphphys/error.hpp>
#include <graphphys/graph.hpp>
#include <graphphys/spectral.hpp>
#include <graphphys/tight_binding.hpp>

#include "oracles.hpp"

using namespace graphphys;

namespace {

std::size_t rank_nullity(const Graph &g) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(oracle::adjacency(g));
    lu.setThreshold(1e-9);
    return g.node_count() - static_cast<std::size_t>(lu.rank());
}

} // namespace

TEST_CASE("Huckel levels of benzene") {
    const HuckelResult h = huckel_spectrum(cycle_graph(6), 0.0, -1.0);
    REQUIRE(h.orbital_energies.size() == 6);
    CHECK(h.orbital_energies.front() == doctest::Approx(-2.0));
    CHECK(h.orbital_energies.back() == doctest::Approx(2.0));
    CHECK(h.occupations == std::vector<int>{2, 2, 2, 0, 0, 0});
    CHECK(h.total_energy == doctest::Approx(-8.0));
    CHECK(total_pi_energy(cycle_graph(6)) == doctest::Approx(8.0));
    // Allyl radical: three electrons, the last one in the nonbonding level.
    const HuckelResult allyl = huckel_spectrum(path_graph(3), 0.0, -1.0);
    CHECK(allyl.occupations == std::vector<int>{2, 1, 0});
    CHECK(allyl.total_energy == doctest::Approx(-2.0 * std::sqrt(2.0)));
}

TEST_CASE("graph energy equals the pi energy for bipartite graphs") {
    oracle::TestRng rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = oracle::random_bipartite_graph(5, 5, 0.4, rng);
        const Spectrum s = eig_symmetric(adjacency_matrix(g));
        CHECK(graph_energy(s.values) == doctest::Approx(total_pi_energy(g)).epsilon(1e-10));
    }
}

TEST_CASE("energy bounds hold on random graphs") {
    oracle::TestRng rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracle::random_graph(9, 0.45, rng);
        const double e = graph_energy(eig_symmetric(adjacency_matrix(g)).values);
        const EnergyBounds b = energy_bounds(g);
        CHECK(e >= b.lower - 1e-9);
        CHECK(e <= b.upper + 1e-9);
        if (b.bipartite_upper)
            CHECK(e <= *b.bipartite_upper + 1e-9);
    }
}

TEST_CASE("closed-form spectra of paths, cycles and polyacenes") {
    for (std::size_t n : {1, 2, 5, 17}) {
        const auto cf = closed_form_spectrum(SpectrumFamily::Path, n);
        const Spectrum s = eig_symmetric(adjacency_matrix(path_graph(n)));
        for (std::size_t j = 0; j < n; ++j)
            CHECK(cf[j] == doctest::Approx(s.values[static_cast<Eigen::Index>(j)]).epsilon(1e-10));
    }
    for (std::size_t h : {1, 2, 3, 6}) {
        const Graph g = polyacene_graph(h);
        CHECK(g.node_count() == 4 * h + 2);
        const auto cf = closed_form_spectrum(SpectrumFamily::Polyacene, h);
        const Spectrum s = eig_symmetric(adjacency_matrix(g));
        REQUIRE(cf.size() == g.node_count());
        for (std::size_t j = 0; j < cf.size(); ++j)
            CHECK(std::abs(cf[j] - s.values[static_cast<Eigen::Index>(j)]) < 1e-10);
    }
}

TEST_CASE("benzenoid fixtures") {
    const Graph pyrene = pyrene_graph();
    const Graph tri = triangulene_graph();
    CHECK(pyrene.node_count() == 16);
    CHECK(pyrene.edge_count() == 19);
    CHECK(tri.node_count() == 22);
    CHECK(is_bipartite(pyrene));
    const auto parts = bipartition(tri);
    REQUIRE(parts);
    CHECK(parts->first.size() == 10);
    CHECK(parts->second.size() == 12);
    CHECK(nullity(tri) == 2);
    CHECK(nullity_via_matching(tri, true) == 2);
    CHECK(nullity_via_matching(pyrene, true) == 0);
    CHECK(benzenoid_graph({{0, 0}}).node_count() == 6);
}

TEST_CASE("nullity formulas agree") {
    oracle::TestRng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph t = oracle::random_tree(1 + trial, rng);
        CHECK(nullity(t) == rank_nullity(t));
        CHECK(nullity_via_matching(t) == nullity(t));
        CHECK(nullity_via_rank(t) == nullity(t));
    }
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracle::random_bipartite_graph(4, 6, 0.3, rng);
        CHECK(nullity_via_rank(g) == rank_nullity(g));
    }
    // C4 has a 4-cycle so the matching formula does not apply; it would give 0.
    CHECK(nullity(cycle_graph(4)) == 2);
    CHECK_THROWS_AS(nullity_via_matching(cycle_graph(4)), Error);
    CHECK(nullity_via_matching(cycle_graph(6)) == 0);
    CHECK_THROWS_AS(nullity_via_rank(cycle_graph(5)), Error);
    CHECK(has_cycle_length_multiple_of_four(cycle_graph(8)));
    CHECK_FALSE(has_cycle_length_multiple_of_four(cycle_graph(6)));
}

TEST_CASE("nullity bounds from girth, paths and diameter") {
    CHECK(path_nullity_bound(10, 4) == 6);
    CHECK(path_nullity_bound(10, 3) == 6);
    CHECK_THROWS_AS(girth_nullity_bound(path_graph(4)), Error);
    // The commonly printed girth bound fails already on C4 (η = 2).
    CHECK(girth_nullity_bound(cycle_graph(4), true) < static_cast<long>(nullity(cycle_graph(4))));
    oracle::TestRng rng(24);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_connected_graph(10, 0.2, rng);
        const NullityBounds b = nullity_bounds(g);
        const long eta = static_cast<long>(nullity(g));
        CHECK(eta <= b.path);
        REQUIRE(b.diameter);
        CHECK(eta <= *b.diameter);
        if (b.girth)
            CHECK(eta <= *b.girth);
    }
}

TEST_CASE("Lieb spin preconditions") {
    CHECK(lieb_total_spin(cycle_graph(6)) == 0.0);
    CHECK(lieb_total_spin(star_graph(3)) == 1.0);
    CHECK_THROWS_AS(lieb_total_spin(cycle_graph(5)), Error);
    CHECK_THROWS_AS(lieb_total_spin(path_graph(3)), Error);
}
