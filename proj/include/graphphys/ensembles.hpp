#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <graphphys/graph.hpp>
#include <graphphys/random.hpp>

namespace graphphys {

Graph erdos_renyi(count n, double p, Seed seed);

enum class ErRegime { Subcritical, Critical, Supercritical };
std::string to_string(ErRegime r);

struct ErTheory {
    double expected_edges = 0;
    double expected_degree = 0;
    /// (ln n - γ) / ln(pn) + 1/2; meaningful for pn > 1.
    double avg_path_estimate = 0;
    ErRegime regime = ErRegime::Subcritical;
    /// Positive root of e^{-k f} = 1 - f, zero when k ≤ 1.
    double giant_fraction = 0;
};

ErTheory er_theory(count n, double p);
/// Positive root of 1 - f - e^{-k f} by bisection.
double giant_component_fraction(double mean_degree);

/// Semicircle density in λ with radius 2r, r = sqrt(np(1-p)).
double wigner_density(double lambda, count n, double p);
double wigner_cdf(double lambda, count n, double p);

struct SpectralHistogram {
    double lower = 0, upper = 0;
    /// Normalized so the histogram integrates to one.
    std::vector<double> density;
    std::vector<double> eigenvalues;
};

/// Pooled adjacency spectra; the largest eigenvalue of each graph is dropped when requested.
SpectralHistogram empirical_spectral_density(std::span<const Graph> graphs, std::size_t bins,
                                             bool exclude_largest = true);
/// Kolmogorov-Smirnov distance between the sample and the semicircle law.
double wigner_ks_distance(std::vector<double> eigenvalues, count n, double p);

Graph watts_strogatz(count n, count k, double p_rewire, Seed seed);

struct WsTheory {
    /// 3(k-2) / (4(k-1))
    double clustering = 0;
    /// (n-1)(n+k-1) / (2kn)
    double path_length = 0;
};
WsTheory ws_theory(count n, count k);

enum class BaVariant { Growth, BollobasRiordan };

/// Preferential attachment; the Bollobás-Riordan variant keeps loops and parallel edges unless simplified.
Graph barabasi_albert(count n, count d, Seed seed, BaVariant variant = BaVariant::Growth,
                      bool simplify = false);

struct BaTheory {
    count n = 0, d = 0;
    /// 2d(d+1) / (k(k+1)(k+2)) for k ≥ d.
    double pk(count k) const;
    /// The printed constant 2d(d-1); does not normalize.
    double pk_printed(count k) const;
    /// d(d+1) / (k(k+1)), the cumulative law of pk.
    double ccdf(count k) const;
    double clustering_estimate = 0;
    double path_length_estimate = 0;
};
BaTheory ba_theory(count n, count d);

struct DegreeDistribution {
    /// p[k] for k = 0..k_max.
    std::vector<double> pk;
    /// P[k] = Σ_{k' ≥ k} p[k'].
    std::vector<double> ccdf;
    count samples = 0;
};

DegreeDistribution degree_distribution(const Graph &g);
/// Pooled distribution over several graphs.
DegreeDistribution degree_distribution(std::span<const Graph> graphs);
/// Distribution from unnormalized weights indexed by degree.
DegreeDistribution distribution_from_weights(std::vector<double> weights);

struct PowerLawFit {
    /// Exponent of p(k): 1 - (CCDF slope).
    double gamma = 0;
    double ccdf_slope = 0;
    /// ln P(k) = ccdf_slope ln k + intercept.
    double intercept = 0;
    count k_min = 0, k_max = 0;
    std::size_t points = 0;
};

/// Least squares on ln P(k) vs ln k over support degrees in [k_min, k_max].
PowerLawFit fit_power_law(const DegreeDistribution &dd, count k_min,
                          std::optional<count> k_max = std::nullopt);

} // namespace graphphys
