#include <graphphys/statmech.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <graphphys/error.hpp>
#include <graphphys/spectral.hpp>

namespace graphphys {

namespace {

Spectrum undirected_spectrum(const Graph &g) {
    if (g.directed())
        fail(ErrorCode::DirectedUnsupported, "network thermodynamics needs an undirected graph");
    return eig_symmetric(adjacency_matrix(g));
}

} // namespace

double network_partition(const Graph &g, double beta) {
    const Spectrum s = undirected_spectrum(g);
    double z = 0.0;
    for (Eigen::Index j = 0; j < s.values.size(); ++j)
        z += std::exp(beta * s.values[j]);
    return z;
}

ThermoReport thermo_report(const Graph &g, double beta) {
    const Spectrum s = undirected_spectrum(g);
    ThermoReport r;
    r.beta = beta;
    const Eigen::Index n = s.values.size();
    if (n == 0)
        fail(ErrorCode::EmptyGraph, "thermodynamics needs at least one node");
    // Shift by the dominant exponent so that large β does not overflow.
    double top = beta * s.values[0];
    for (Eigen::Index j = 0; j < n; ++j)
        top = std::max(top, beta * s.values[j]);
    double shifted = 0.0;
    for (Eigen::Index j = 0; j < n; ++j)
        shifted += std::exp(beta * s.values[j] - top);
    r.log_partition = top + std::log(shifted);
    r.partition = std::exp(r.log_partition);
    for (Eigen::Index j = 0; j < n; ++j) {
        const double p = std::exp(beta * s.values[j] - r.log_partition);
        r.eigenvalues.push_back(s.values[j]);
        r.probabilities.push_back(p);
        if (p > 0.0)
            r.entropy -= p * (beta * s.values[j] - r.log_partition);
        r.energy -= s.values[j] * p;
    }
    r.free_energy = beta == 0.0 ? -std::numeric_limits<double>::infinity() : -r.log_partition / beta;
    return r;
}

Eigen::MatrixXd communicability(const Graph &g, double beta) {
    if (g.directed())
        fail(ErrorCode::DirectedUnsupported, "communicability needs an undirected graph");
    return matrix_exp(adjacency_matrix(g), beta);
}

double path_communicability(count n, count r, count s) {
    if (r < 1 || s < 1 || r > n || s > n)
        fail(ErrorCode::OutOfRange, "path node index must lie in 1..n");
    const double m = static_cast<double>(n + 1);
    const double rr = static_cast<double>(r), ss = static_cast<double>(s);
    double g = 0.0;
    for (count j = 1; j <= n; ++j) {
        const double t = static_cast<double>(j) * std::numbers::pi / m;
        g += (std::cos(t * (rr - ss)) - std::cos(t * (rr + ss))) * std::exp(2.0 * std::cos(t));
    }
    return g / m;
}

double complete_communicability(count n) {
    if (n < 2)
        fail(ErrorCode::InvalidArgument, "complete graph needs n >= 2");
    const double nn = static_cast<double>(n);
    return (std::exp(nn) - 1.0) / (nn * std::numbers::e);
}

} // namespace graphphys
