#include <graphphys/oscillators.hpp>

#include <cmath>
#include <numbers>
#include <string>

#include <graphphys/error.hpp>
#include <graphphys/spectral.hpp>

namespace graphphys {

namespace {

void check_constants(const OscillatorParams &p) {
    if (!(p.mass > 0 && p.omega > 0 && p.beta > 0 && p.hbar > 0 && p.big_omega > 0 && p.ground > 0))
        fail(ErrorCode::InvalidArgument, "oscillator constants must be positive");
}

/// Spectrum of A after checking K > λ1.
Spectrum grounded_spectrum(const Graph &g, const OscillatorParams &p) {
    check_constants(p);
    if (g.directed())
        fail(ErrorCode::DirectedUnsupported, "oscillator network must be undirected");
    Spectrum s = eig_symmetric(adjacency_matrix(g));
    if (s.size() > 0 && !(p.ground > s.values[0] + s.tolerance))
        fail(ErrorCode::KTooSmall, "K = " + std::to_string(p.ground) + " does not exceed lambda1 = " +
                                       std::to_string(s.values[0]));
    return s;
}

void check_node(const Graph &g, node u) {
    if (u >= g.node_count())
        fail(ErrorCode::OutOfRange, "node " + std::to_string(u));
}

} // namespace

double classical_partition(const Graph &g, const OscillatorParams &p) {
    grounded_spectrum(g, p);
    const Eigen::Index n = static_cast<Eigen::Index>(g.node_count());
    const Eigen::MatrixXd m = p.ground * Eigen::MatrixXd::Identity(n, n) - adjacency_matrix(g);
    const double det = n == 0 ? 1.0 : m.llt().matrixLLT().diagonal().prod();
    const double pref = 2.0 * std::numbers::pi / (p.beta * p.mass * p.omega * p.omega);
    // det(KI - A) = (det of the Cholesky factor)^2
    return std::pow(pref, static_cast<double>(n) / 2.0) / std::abs(det);
}

double classical_partition_modes(const Graph &g, const OscillatorParams &p) {
    const Spectrum s = grounded_spectrum(g, p);
    const double pref = 2.0 * std::numbers::pi / (p.beta * p.mass * p.omega * p.omega);
    double z = 1.0;
    for (Eigen::Index k = 0; k < s.values.size(); ++k)
        z *= std::sqrt(pref / (p.ground - s.values[k]));
    return z;
}

Eigen::MatrixXd classical_green_matrix(const Graph &g, const OscillatorParams &p, GreenForm form) {
    if (form == GreenForm::Adjacency) {
        grounded_spectrum(g, p);
        const Eigen::MatrixXd r = resolvent(adjacency_matrix(g), p.ground);
        return r / (p.beta * p.mass * p.ground * p.omega * p.omega);
    }
    check_constants(p);
    if (!is_connected(g))
        fail(ErrorCode::Disconnected, "Laplacian Green's function needs a connected graph");
    return laplacian_pseudoinverse(laplacian_matrix(g)) / (p.beta * p.mass * p.omega * p.omega);
}

double classical_green(const Graph &g, const OscillatorParams &p, node u, node v, GreenForm form) {
    check_node(g, u);
    check_node(g, v);
    return classical_green_matrix(g, p, form)(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v));
}

double quantum_effective_beta(const OscillatorParams &p) {
    return p.beta * p.hbar * p.omega * p.omega / (2.0 * p.big_omega);
}

Eigen::MatrixXd quantum_green_matrix(const Graph &g, const OscillatorParams &p) {
    check_constants(p);
    return std::exp(-p.beta * p.hbar * p.big_omega) * matrix_exp(adjacency_matrix(g), quantum_effective_beta(p));
}

double quantum_green(const Graph &g, const OscillatorParams &p, node u, node v) {
    check_node(g, u);
    check_node(g, v);
    return quantum_green_matrix(g, p)(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v));
}

double quantum_partition(const Graph &g, const OscillatorParams &p) {
    check_constants(p);
    const Spectrum s = eig_symmetric(adjacency_matrix(g));
    const double ratio = p.omega * p.omega / (2.0 * p.big_omega * p.big_omega);
    double log_z = 0.0;
    for (Eigen::Index k = 0; k < s.values.size(); ++k)
        log_z -= 0.5 * p.beta * p.hbar * p.big_omega * (1.0 + ratio * (s.values[k] - p.ground));
    return std::exp(log_z);
}

double laplacian_quantum_correlation(const Graph &g, const OscillatorParams &p, node u, node v) {
    check_constants(p);
    check_node(g, u);
    check_node(g, v);
    if (g.node_count() < 2 || !is_connected(g))
        fail(ErrorCode::Disconnected, "needs a connected graph with at least two nodes");
    const Spectrum s = eig_symmetric(laplacian_matrix(g));
    // μ2 is the second smallest, i.e. position n-2 in descending order.
    const Eigen::Index k = s.values.size() - 2;
    const double mu2 = s.values[k];
    return 1.0 + s.vectors(static_cast<Eigen::Index>(u), k) * s.vectors(static_cast<Eigen::Index>(v), k) *
                     std::exp(-quantum_effective_beta(p) * mu2);
}

} // namespace graphphys
