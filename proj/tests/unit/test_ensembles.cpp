#include <doctest.h>

#include <cmath>
#include <set>

#include <graphphys/ensembles.hpp>
#include <graphphys/error.hpp>
#include <graphphys/graph.hpp>
#include <graphphys/random.hpp>

using namespace graphphys;

namespace {

bool same_edges(const Graph &a, const Graph &b) {
    if (a.edges().size() != b.edges().size())
        return false;
    for (std::size_t i = 0; i < a.edges().size(); ++i)
        if (a.edges()[i].source != b.edges()[i].source || a.edges()[i].target != b.edges()[i].target ||
            a.edges()[i].multiplicity != b.edges()[i].multiplicity)
            return false;
    return true;
}

} // namespace

TEST_CASE("generator primitives") {
    Rng a(5), b(5);
    for (int i = 0; i < 100; ++i) {
        const double u = a.uniform();
        CHECK(u == b.uniform());
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(a.below(7) < 7);
        b.below(7);
    }
    CHECK(replica_seed(1, 0) != replica_seed(1, 1));
    CHECK(splitmix64(0) != 0);
    Rng c(9);
    double mean = 0.0;
    for (int i = 0; i < 20000; ++i)
        mean += c.normal();
    CHECK(std::abs(mean / 20000) < 0.05);
}

TEST_CASE("Erdos-Renyi graphs") {
    CHECK(same_edges(erdos_renyi(100, 0.05, 3), erdos_renyi(100, 0.05, 3)));
    CHECK_FALSE(same_edges(erdos_renyi(100, 0.05, 3), erdos_renyi(100, 0.05, 4)));
    CHECK(erdos_renyi(30, 0.0, 1).edge_count() == 0);
    CHECK(erdos_renyi(30, 1.0, 1).edge_count() == 435);
    CHECK_THROWS_AS(erdos_renyi(10, 1.5, 1), Error);
    double total = 0.0;
    for (Seed s = 0; s < 50; ++s)
        total += static_cast<double>(erdos_renyi(200, 0.03, s).edge_count());
    const double expected = 0.03 * 200 * 199 / 2.0;
    // Standard error of the mean over 50 graphs is about 3.
    CHECK(std::abs(total / 50 - expected) < 15.0);
}

TEST_CASE("Erdos-Renyi theory") {
    const ErTheory t = er_theory(1000, 0.002);
    CHECK(t.expected_degree == doctest::Approx(1.998));
    CHECK(t.regime == ErRegime::Supercritical);
    CHECK(er_theory(1000, 0.0005).regime == ErRegime::Subcritical);
    CHECK(to_string(ErRegime::Critical) == "critical");
    const double f = giant_component_fraction(2.0);
    CHECK(1.0 - f - std::exp(-2.0 * f) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(f == doctest::Approx(0.7968121300200202).epsilon(1e-9));
    CHECK(giant_component_fraction(0.8) == 0.0);
}

TEST_CASE("semicircle law") {
    const count n = 500;
    const double p = 0.1;
    const double r = std::sqrt(n * p * (1 - p));
    CHECK(wigner_cdf(-2 * r, n, p) == doctest::Approx(0.0));
    CHECK(wigner_cdf(2 * r, n, p) == doctest::Approx(1.0));
    CHECK(wigner_cdf(0.0, n, p) == doctest::Approx(0.5));
    double integral = 0.0;
    const int steps = 20000;
    for (int i = 0; i < steps; ++i) {
        const double x = -2 * r + (i + 0.5) * 4 * r / steps;
        integral += wigner_density(x, n, p) * 4 * r / steps;
    }
    CHECK(integral == doctest::Approx(1.0).epsilon(1e-6));
    const std::vector<Graph> gs{erdos_renyi(n, p, 1), erdos_renyi(n, p, 2)};
    const SpectralHistogram h = empirical_spectral_density(gs, 40);
    CHECK(h.eigenvalues.size() == 2 * (n - 1));
    double mass = 0.0;
    for (double d : h.density)
        mass += d * (h.upper - h.lower) / 40.0;
    CHECK(mass == doctest::Approx(1.0));
    CHECK(wigner_ks_distance(h.eigenvalues, n, p) < 0.05);
}

TEST_CASE("Watts-Strogatz rings") {
    const Graph ring = watts_strogatz(30, 4, 0.0, 1);
    for (count k : degrees(ring))
        CHECK(k == 4);
    CHECK(clustering(ring).average == 0.5);
    CHECK(ws_theory(30, 4).clustering == 0.5);
    CHECK(ws_theory(30, 4).path_length == doctest::Approx(29.0 * 33.0 / 240.0));
    CHECK(average_path_length(watts_strogatz(30, 4, 0.0, 1)) > average_path_length(watts_strogatz(30, 4, 0.3, 1)));
    const Graph rewired = watts_strogatz(100, 6, 1.0, 2);
    CHECK(rewired.edge_count() == 300);
    CHECK(rewired.simple());
    CHECK_THROWS_AS(watts_strogatz(10, 3, 0.1, 1), Error);
    CHECK_THROWS_AS(watts_strogatz(10, 10, 0.1, 1), Error);
    CHECK_THROWS_AS(watts_strogatz(10, 4, -0.1, 1), Error);
}

TEST_CASE("Barabasi-Albert growth") {
    const Graph g = barabasi_albert(500, 3, 11);
    CHECK(g.simple());
    CHECK(is_connected(g));
    const auto k = degrees(g);
    for (node v = 4; v < 500; ++v)
        CHECK(k[v] >= 3);
    CHECK(same_edges(g, barabasi_albert(500, 3, 11)));
    const Graph br = barabasi_albert(500, 2, 12, BaVariant::BollobasRiordan);
    count ends = 0;
    for (count d : degrees(br))
        ends += d;
    CHECK(ends == 2 * br.edge_count());
    const Graph simple = barabasi_albert(500, 2, 12, BaVariant::BollobasRiordan, true);
    CHECK(simple.simple());
}

TEST_CASE("Barabasi-Albert theory") {
    const BaTheory t = ba_theory(10000, 2);
    double sum = 0.0;
    for (count k = 2; k < 200000; ++k)
        sum += t.pk(k);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(t.ccdf(2) == doctest::Approx(1.0));
    CHECK(t.ccdf(10) == doctest::Approx(6.0 / 110.0));
    for (count k = 2; k < 50; ++k)
        CHECK(t.pk(k) == doctest::Approx(t.ccdf(k) - t.ccdf(k + 1)).epsilon(1e-12));
    CHECK(t.pk_printed(5) == doctest::Approx(t.pk(5) / 3.0));
    CHECK(t.pk(1) == 0.0);
}

TEST_CASE("degree distributions and power-law fits") {
    const DegreeDistribution star = degree_distribution(star_graph(4));
    CHECK(star.samples == 5);
    CHECK(star.pk[1] == doctest::Approx(0.8));
    CHECK(star.pk[4] == doctest::Approx(0.2));
    CHECK(star.ccdf[1] == doctest::Approx(1.0));
    CHECK(star.ccdf[2] == doctest::Approx(0.2));

    // Exact P(k) = 1/k² on k ≥ 1.
    std::vector<double> w(20001, 0.0);
    for (count k = 1; k < 20000; ++k)
        w[k] = 1.0 / double(k * k) - 1.0 / double((k + 1) * (k + 1));
    w[20000] = 1.0 / (20000.0 * 20000.0);
    const PowerLawFit fit = fit_power_law(distribution_from_weights(w), 4, 100);
    CHECK(fit.ccdf_slope == doctest::Approx(-2.0).epsilon(1e-6));
    CHECK(fit.gamma == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(fit.points == 97);
    CHECK_THROWS_AS(fit_power_law(degree_distribution(cycle_graph(5)), 1), Error);
}
