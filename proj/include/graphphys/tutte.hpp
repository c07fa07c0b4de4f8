#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <graphphys/graph.hpp>
#include <graphphys/polynomial.hpp>

namespace graphphys {

/// Undirected pseudograph: loops and parallel edges allowed.
struct Multigraph {
    std::size_t n = 0;
    std::vector<std::pair<node, node>> edges;
};

/// Expands multiplicities; weights are ignored.
Multigraph to_multigraph(const Graph &g);

Multigraph delete_edge(const Multigraph &g, std::size_t e);
/// Glues the endpoints of e (the higher-numbered one disappears) and removes e.
Multigraph contract_edge(const Multigraph &g, std::size_t e);
std::size_t component_count(const Multigraph &g);

BivariatePolynomial tutte_polynomial(const Multigraph &g);
BivariatePolynomial tutte_polynomial(const Graph &g);

struct TutteEvaluations {
    Coefficient spanning_trees = 0;
    Coefficient spanning_forests = 0;
    Coefficient connected_spanning_subgraphs = 0;
    Coefficient subgraph_count = 0;
};

TutteEvaluations tutte_evaluations(const BivariatePolynomial &t);

/// Polynomial in q counting proper q-colourings.
UnivariatePolynomial chromatic_polynomial(const Multigraph &g);
UnivariatePolynomial chromatic_polynomial(const Graph &g);

enum class PottsHamiltonian { H1, H2 };

/**
 * Exact Potts partition function. in_w has integer coefficients in w = e^K;
 * the partition function is w^shift * in_w(w) (shift = -m for H2).
 * in_v is the same function written in v = e^K - 1.
 */
struct PottsPolynomial {
    UnivariatePolynomial in_w;
    UnivariatePolynomial in_v;
    long shift = 0;

    double evaluate(double K) const;
    /// e.g. "2*exp(4K) + 12*exp(2K) + 2"
    std::string to_string() const;
};

PottsPolynomial potts_polynomial(const Multigraph &g, unsigned q, PottsHamiltonian h = PottsHamiltonian::H1);
double potts_partition(const Graph &g, unsigned q, double K, PottsHamiltonian h = PottsHamiltonian::H1);

/// Brute-force Σ_ω exp(-βH(ω)); TooLarge when q^n > 10^7.
double enumerate_states(const Graph &g, unsigned q, double K, PottsHamiltonian h = PottsHamiltonian::H1);
/// Boltzmann probability of one spin configuration.
double state_probability(const Graph &g, unsigned q, double K, PottsHamiltonian h,
                         const std::vector<unsigned> &spins);

/// Number of proper q-colourings as the K -> -inf limit of Z1.
Coefficient chromatic_from_zero_T_limit(const Graph &g, unsigned q);

} // namespace graphphys
