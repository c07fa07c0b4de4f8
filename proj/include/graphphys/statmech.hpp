#pragma once

#include <vector>

#include <Eigen/Dense>

#include <graphphys/graph.hpp>

namespace graphphys {

/// Thermodynamic functionals of the adjacency spectrum with k_B = 1.
struct ThermoReport {
    double beta = 1.0;
    double partition = 0.0;
    double log_partition = 0.0;
    /// p_j = e^{βλ_j} / Z, eigenvalues in descending order.
    std::vector<double> probabilities;
    std::vector<double> eigenvalues;
    double entropy = 0.0;
    double energy = 0.0;
    /// -ln Z / β; infinite at β = 0.
    double free_energy = 0.0;
};

/// Tr e^{βA} = Σ_j e^{βλ_j}.
double network_partition(const Graph &g, double beta);
ThermoReport thermo_report(const Graph &g, double beta);

/// e^{βA}
Eigen::MatrixXd communicability(const Graph &g, double beta = 1.0);

/// Eigen-expansion of (e^A)_rs on the path P_n, with 1-based r and s.
double path_communicability(count n, count r, count s);
/// Off-diagonal (e^A)_rs of the complete graph K_n: (e^n - 1) / (n e).
double complete_communicability(count n);

} // namespace graphphys
