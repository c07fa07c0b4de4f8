#pragma once

#include <Eigen/Dense>

#include <graphphys/graph.hpp>

namespace graphphys {

enum class ResistanceMethod { Pseudoinverse, Determinant, Spectral };

/// Effective resistance with edge weights read as conductances.
double resistance_distance(const Graph &g, node u, node v,
                           ResistanceMethod method = ResistanceMethod::Pseudoinverse);

/// Ω = 1 diag(M)ᵀ + diag(M) 1ᵀ - 2M with M = (L + J/n)^{-1}.
Eigen::MatrixXd resistance_matrix(const Graph &g);

/// L⁺ = -1/2 [Ω - (ΩJ + JΩ)/n + JΩJ/n²].
Eigen::MatrixXd pseudoinverse_from_resistance(const Eigen::MatrixXd &omega);

/// Expected round-trip time 2 (Σ w) Ω(u, v) of the random walk P_uv ∝ w_uv.
double commute_time(const Graph &g, node u, node v);

} // namespace graphphys
