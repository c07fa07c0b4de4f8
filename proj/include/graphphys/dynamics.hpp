#pragma once

#include <string>
#include <utility>
#include <vector>

#include <graphphys/graph.hpp>

namespace graphphys {

/**
 * Sampled node states over time.
 *
 * states[t][c] holds component c (one value per node) at times[t].
 */
struct Trajectory {
    std::string model;
    std::vector<std::string> components;
    std::vector<double> times;
    std::vector<std::vector<std::vector<double>>> states;
    std::vector<std::pair<std::string, double>> parameters;
    double step = 0.0;

    const std::vector<double> &final_state(std::size_t component = 0) const;
};

/// φ(t) = exp(-Lt) φ0 sampled at multiples of dt up to t_end.
Trajectory consensus_continuous(const Graph &g, const std::vector<double> &phi0, double t_end, double dt);

/// φ(t+1) = (I - εL) φ(t); requires 0 < ε < 1/δ_max.
Trajectory consensus_discrete(const Graph &g, const std::vector<double> &phi0, double epsilon, std::size_t steps);

/// μ_max / μ2 of the Laplacian.
double sync_eigenratio(const Graph &g);
/// True iff c μ2 > α1 and c μ_max < α2.
bool sync_verdict(const Graph &g, double alpha1, double alpha2, double c);

struct EpidemicParams {
    double beta_spread = 0.0;
    double gamma_recover = 0.0;
};

/// Mean-field SIR with fourth-order Runge-Kutta steps of size dt.
Trajectory sir_integrate(const Graph &g, const EpidemicParams &params, const std::vector<double> &s0,
                         const std::vector<double> &x0, const std::vector<double> &r0, double t_end, double dt);

/// Mean-field SIS with fourth-order Runge-Kutta steps of size dt.
Trajectory sis_integrate(const Graph &g, const EpidemicParams &params, const std::vector<double> &s0,
                         const std::vector<double> &x0, double t_end, double dt);

/// Rows "time,node,<components...>".
std::string trajectory_csv(const Trajectory &t);
/// Model, parameters, final state and, when reached, the first time all components agree to tol.
std::string trajectory_json(const Trajectory &t, double consensus_tol = 1e-8);

} // namespace graphphys
