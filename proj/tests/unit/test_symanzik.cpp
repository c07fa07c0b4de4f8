#include <doctest.h>

#include <graphphys/error.hpp>
#include <graphphys/graph.hpp>
#include <graphphys/multipoly.hpp>
#include <graphphys/symanzik.hpp>

#include "oracles.hpp"

using namespace graphphys;
using MP = MultivariatePolynomial;

namespace {

FeynmanGraph two_loop() {
    FeynmanGraph fg = FeynmanGraph::from_edges(4, {{0, 3}, {0, 1}, {1, 2}, {2, 3}, {0, 2}});
    fg.legs = {{1, "p1"}, {3, "p2"}};
    return fg;
}

FeynmanGraph bubble() {
    FeynmanGraph fg = FeynmanGraph::from_edges(2, {{0, 1}, {0, 1}});
    fg.legs = {{0, "p1"}, {1, "p2"}};
    return fg;
}

} // namespace

TEST_CASE("polynomial text round trip") {
    const MP p = MP::parse("x1*x2 - 2*s1_1*x3^2 + 4");
    CHECK(MP::parse(p.to_string()) == p);
    CHECK(p.size() == 3);
    CHECK(MP::parse("x1 + x2") * MP::parse("x1 - x2") == MP::parse("x1^2 - x2^2"));
    CHECK((MP::parse("x1^2 - x2^2").exact_divide(MP::parse("x1 + x2"))) == MP::parse("x1 - x2"));
    CHECK_THROWS_AS(MP::parse("x1^2 + 1").exact_divide(MP::parse("x1 + x2")), Error);
    CHECK(Variable::s(2, 1).name() == "s1_2");
    CHECK(Variable::mass(4).name() == "M4");
}

TEST_CASE("symbolic determinant") {
    const std::vector<std::vector<MP>> m{{MP::parse("x1"), MP::parse("x2")}, {MP::parse("x3"), MP::parse("x4")}};
    CHECK(determinant(m) == MP::parse("x1*x4 - x2*x3"));
    CHECK(determinant({}) == MP::constant(1));
    const std::vector<std::vector<MP>> singular{{MP::parse("x1"), MP::parse("x1")}, {MP::parse("x2"), MP::parse("x2")}};
    CHECK(determinant(singular).is_zero());
}

TEST_CASE("one-loop bubble") {
    const FeynmanGraph fg = bubble();
    CHECK(fg.loop_count() == 1);
    CHECK(first_symanzik_trees(fg) == MP::parse("x1 + x2"));
    CHECK(second_symanzik(fg).f0 == MP::parse("-s1_1*x1*x2"));
    FeynmanGraph massive = fg;
    massive.edges[0].mass = 1.0;
    massive.edges[1].mass = 1.0;
    const SecondSymanzik f = second_symanzik(massive);
    CHECK(f.f0 == MP::parse("-s1_1*x1*x2"));
    CHECK(f.f == MP::parse("-s1_1*x1*x2 + M1*x1^2 + M1*x1*x2 + M2*x1*x2 + M2*x2^2"));
}

TEST_CASE("two-loop worked example") {
    const FeynmanGraph fg = two_loop();
    CHECK(fg.loop_count() == 2);
    const MP u = first_symanzik_trees(fg);
    CHECK(u.to_string() == "x1*x2 + x1*x3 + x1*x5 + x2*x4 + x2*x5 + x3*x4 + x3*x5 + x4*x5");
    CHECK(u.is_homogeneous(VarKind::X, 2));
    CHECK(u.is_multilinear_unit(VarKind::X));
    const MP f0 = second_symanzik(fg).f0;
    CHECK(f0.is_homogeneous(VarKind::X, 3));
    CHECK(f0.size() == 8);
    // Every term carries -s1_1.
    for (const auto &[m, c] : f0.terms())
        CHECK(c == -1);
    CHECK(spanning_trees(fg.n, {{0, 3}, {0, 1}, {1, 2}, {2, 3}, {0, 2}}).size() == 8);
    const MP k = kirchhoff_polynomial(fg, 0);
    CHECK(first_symanzik_from_kirchhoff(k, 5) == u);
    CHECK(k.invert_x(5) == u);
    // Any deleted row gives the same minor.
    for (node drop = 1; drop < 4; ++drop)
        CHECK(kirchhoff_polynomial(fg, drop) == k);
}

TEST_CASE("spanning 2-forests of C4") {
    const auto forests = spanning_2forests(cycle_graph(4));
    CHECK(forests.size() == 6);
    for (const auto &f : forests) {
        CHECK(f.edges.size() == 2);
        CHECK(f.first.size() + f.second.size() == 4);
        CHECK(f.first.front() == 0);
    }
    CHECK(spanning_trees(complete_graph(5)).size() == 125);
}

TEST_CASE("three legs and momentum conservation") {
    FeynmanGraph fg = FeynmanGraph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
    fg.legs = {{0, "p1"}, {1, "p2"}, {2, "p3"}};
    const ModifiedLaplacian w = modified_laplacian_expansion(fg);
    CHECK(w.u == first_symanzik_trees(fg));
    CHECK(w.f0 == second_symanzik(fg).f0);
    // p3 = -(p1 + p2): s3_3 -> s1_1 + 2 s1_2 + s2_2.
    const MP conserved = apply_momentum_conservation(MP::parse("s3_3"), 3);
    CHECK(conserved == MP::parse("s1_1 + 2*s1_2 + s2_2"));
    CHECK(apply_momentum_conservation(MP::parse("s1_3"), 3) == MP::parse("-s1_1 - s1_2"));
}

TEST_CASE("deletion and contraction of Feynman graphs") {
    const FeynmanGraph fg = two_loop();
    for (std::size_t e = 0; e < fg.edges.size(); ++e) {
        const auto check = symanzik_deletion_contraction_check(fg, e);
        CHECK(check.first);
        CHECK(check.second);
    }
    const FeynmanGraph tree = [] {
        FeynmanGraph t = FeynmanGraph::from_edges(3, {{0, 1}, {1, 2}});
        t.legs = {{0, "p1"}, {2, "p2"}};
        return t;
    }();
    CHECK_THROWS_AS(symanzik_deletion_contraction_check(tree, 0), Error);
    CHECK(delete_edge(fg, 4).edges.size() == 4);
    CHECK(contract_edge(fg, 4).n == 3);
    CHECK_THROWS_AS(delete_edge(fg, 9), Error);

    oracle::TestRng rng(41);
    for (int trial = 0; trial < 15; ++trial) {
        const Graph g = oracle::random_connected_graph(5, 0.5, rng);
        std::vector<std::pair<node, node>> e;
        for (const Edge &x : g.edges())
            e.emplace_back(x.source, x.target);
        FeynmanGraph r = FeynmanGraph::from_edges(5, e);
        r.legs = {{0, "p1"}, {2, "p2"}, {4, "p3"}};
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (!is_connected(remove_edge(g, k)))
                continue;
            const auto check = symanzik_deletion_contraction_check(r, k);
            CHECK(check.first);
            CHECK(check.second);
        }
    }
}

TEST_CASE("validation errors") {
    FeynmanGraph fg = two_loop();
    fg.legs.clear();
    CHECK_THROWS_AS(modified_laplacian_expansion(fg), Error);
    FeynmanGraph bad = two_loop();
    bad.edges[0].parameter = 2;
    CHECK_THROWS_AS(validate(bad), Error);
    FeynmanGraph out = two_loop();
    out.legs.push_back({7, "p3"});
    CHECK_THROWS_AS(validate(out), Error);
}
