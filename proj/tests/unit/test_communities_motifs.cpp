#include <doctest.h>

#include <cmath>

#include <graphphys/communities.hpp>
#include <graphphys/error.hpp>
#include <graphphys/graph.hpp>
#include <graphphys/motifs.hpp>

#include "oracles.hpp"

using namespace graphphys;

namespace {

Graph barbell() {
    return build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

} // namespace

TEST_CASE("partitions") {
    const Partition p = make_partition({5, 5, 2, 9, 2});
    CHECK(p.blocks == 3);
    CHECK(p.block == std::vector<std::size_t>{0, 0, 1, 2, 1});
    CHECK(p.members()[1] == std::vector<node>{2, 4});
    CHECK(component_partition(disjoint_union(path_graph(2), path_graph(3))).blocks == 2);
}

TEST_CASE("modularity against the pair formula") {
    const Graph two = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK(modularity(two, make_partition({0, 0, 0, 1, 1, 1})) == 0.5);
    CHECK(modularity(two, make_partition({0, 0, 0, 0, 0, 0})) == doctest::Approx(0.0));
    oracle::TestRng rng(91);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracle::random_graph(12, 0.3, rng);
        if (g.edge_count() == 0)
            continue;
        std::vector<std::size_t> block(12);
        for (auto &b : block)
            b = rng() % 3;
        CHECK(modularity(g, make_partition(block)) == doctest::Approx(oracle::modularity_pairs(g, block)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(modularity(empty_graph(3), make_partition({0, 1, 2})), Error);
}

TEST_CASE("edge betweenness") {
    const Graph g = barbell();
    const auto eb = edge_betweenness(g);
    CHECK(eb[6] == doctest::Approx(9.0));
    const auto expected = oracle::edge_betweenness_by_paths(g);
    for (std::size_t e = 0; e < 7; ++e) {
        const Edge &x = g.edges()[e];
        CHECK(eb[e] == doctest::Approx(expected.at({x.source, x.target})));
    }
}

TEST_CASE("Girvan-Newman on two triangles joined by a bridge") {
    const Dendrogram d = girvan_newman(barbell());
    REQUIRE(d.stages.size() == 8);
    CHECK_FALSE(d.stages[0].removed);
    REQUIRE(d.stages[1].removed);
    CHECK(*d.stages[1].removed == std::pair<node, node>{2, 3});
    CHECK(d.best == 1);
    CHECK(d.best_stage().partition.block == std::vector<std::size_t>{0, 0, 0, 1, 1, 1});
    CHECK(d.best_stage().modularity == doctest::Approx(5.0 / 14.0));
    CHECK(d.stages.back().partition.blocks == 6);
}

TEST_CASE("spectral bisection") {
    for (BisectionMatrix m : {BisectionMatrix::Laplacian, BisectionMatrix::NormalizedLaplacian}) {
        const Partition p = spectral_bisection(barbell(), m);
        CHECK(p.blocks == 2);
        CHECK(p.block[0] == p.block[1]);
        CHECK(p.block[1] == p.block[2]);
        CHECK(p.block[3] == p.block[4]);
        CHECK(p.block[4] == p.block[5]);
        CHECK(p.block[0] != p.block[5]);
    }
}

TEST_CASE("cosine similarity") {
    const Eigen::MatrixXd s = cosine_similarity(cycle_graph(4));
    CHECK(s(0, 2) == doctest::Approx(1.0));
    CHECK(s(0, 1) == doctest::Approx(0.0));
    const Eigen::MatrixXd iso = cosine_similarity(empty_graph(2));
    CHECK(iso(0, 1) == 0.0);
}

TEST_CASE("motif census against brute force") {
    const MotifCensus k4 = motif_census(complete_graph(4));
    CHECK(k4["triangle"] == 4);
    CHECK(k4["path"] == 0);
    CHECK(motif_census(star_graph(4))["path"] == 6);
    CHECK_THROWS_AS(k4["square"], Error);
    CHECK(motif_names(true).size() == 13);
    oracle::TestRng rng(92);
    for (int trial = 0; trial < 30; ++trial) {
        const bool directed = trial % 2 == 1;
        const Graph g = oracle::random_graph(9, 0.35, rng, directed);
        const MotifCensus c = motif_census(g);
        const auto brute = oracle::triad_census_brute(g);
        for (const std::string &name : motif_names(directed)) {
            const auto it = brute.find(name);
            CHECK_MESSAGE(c[name] == (it == brute.end() ? 0 : it->second), name);
        }
    }
}

TEST_CASE("degree-preserving rewiring") {
    oracle::TestRng rng(93);
    for (bool directed : {false, true}) {
        const Graph g = oracle::random_graph(20, 0.2, rng, directed);
        const Graph h = degree_preserving_rewire(g, 2000, 5);
        CHECK(h.simple());
        CHECK(out_degrees(h) == out_degrees(g));
        CHECK(in_degrees(h) == in_degrees(g));
        CHECK(h.edge_count() == g.edge_count());
    }
    CHECK_THROWS_AS(degree_preserving_rewire(build_graph(2, {{0, 1}, {0, 1}}, false, false), 10, 1), Error);
}

TEST_CASE("motif z-scores") {
    CHECK(motif_zscore_value(10, 4, 2) == 3.0);
    try {
        motif_zscore_value(1, 1, 0);
        FAIL("expected DegenerateEnsemble");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::DegenerateEnsemble);
    }
    // A ring lattice is far more clustered than its rewired versions.
    std::vector<Edge> ring;
    for (node v = 0; v < 30; ++v) {
        ring.push_back({v, (v + 1) % 30});
        ring.push_back({v, (v + 2) % 30});
    }
    const Graph lattice = build_graph(30, ring);
    const MotifReport r = motif_zscore(lattice, "triangle", 30, 17);
    CHECK(r.real == 30.0);
    CHECK(r.ensemble_size == 30);
    CHECK(r.z > 3.0);
    const MotifReport again = motif_zscore(lattice, "triangle", 30, 17);
    CHECK(again.z == r.z);
    CHECK_THROWS_AS(motif_zscore(lattice, "triangle", 10, 17), Error);
}
