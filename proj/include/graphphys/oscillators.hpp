#pragma once

#include <Eigen/Dense>

#include <graphphys/graph.hpp>

namespace graphphys {

/// Ball-and-spring network constants, natural units by default.
struct OscillatorParams {
    double mass = 1.0;
    /// Network spring frequency ω.
    double omega = 1.0;
    /// Ground spring constant K; must exceed λ1(A).
    double ground = 1.0;
    double beta = 1.0;
    double hbar = 1.0;
    /// Oscillator frequency Ω, kept independent of the other constants.
    double big_omega = 1.0;
};

enum class GreenForm { Adjacency, Laplacian };

/// (2π/βmω²)^{n/2} / sqrt(det(KI - A)).
double classical_partition(const Graph &g, const OscillatorParams &p);
/// Mode product Π_μ sqrt(2π / (βmω² λ_μ)) over the eigenvalues of KI - A.
double classical_partition_modes(const Graph &g, const OscillatorParams &p);

Eigen::MatrixXd classical_green_matrix(const Graph &g, const OscillatorParams &p, GreenForm form);
double classical_green(const Graph &g, const OscillatorParams &p, node u, node v, GreenForm form);

/// e^{-βħΩ} (exp[(βħω²/2Ω) A])_{uv}
Eigen::MatrixXd quantum_green_matrix(const Graph &g, const OscillatorParams &p);
double quantum_green(const Graph &g, const OscillatorParams &p, node u, node v);
/// Π_μ exp{-(βħΩ/2)[1 + (ω²/2Ω²)(λ_μ - K)]}
double quantum_partition(const Graph &g, const OscillatorParams &p);
/// Effective inverse temperature βħω²/(2Ω) of the quantum Green's function.
double quantum_effective_beta(const OscillatorParams &p);

/// 1 + U_2(u) U_2(v) exp(-(βħω²/2Ω) μ2) at the given Ω; diagnostic only.
double laplacian_quantum_correlation(const Graph &g, const OscillatorParams &p, node u, node v);

} // namespace graphphys
