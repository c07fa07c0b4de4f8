#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include <graphphys/graph.hpp>

namespace graphphys {

struct CentralityVector {
    std::string measure;
    std::vector<double> scores;
    std::vector<std::pair<std::string, double>> parameters;
    /// Set when a precondition for a unique positive answer does not hold.
    std::optional<std::string> warning;
};

struct DegreeCentrality {
    std::vector<double> in, out, total;
};

DegreeCentrality degree_centrality(const Graph &g);

/// (n-1) / Σ_v d(u, v) over hop distances.
CentralityVector closeness(const Graph &g);

/// Shortest-path betweenness; undirected pairs are unordered, endpoints excluded.
CentralityVector betweenness(const Graph &g);

struct BetweennessScores {
    std::vector<double> nodes;
    /// Indexed like g.edges(); a bundle of parallel edges is credited to its first member.
    std::vector<double> edges;
};

/// Brandes accumulation of node and edge scores in one pass.
BetweennessScores brandes_betweenness(const Graph &g);

struct KatzCentrality {
    CentralityVector in, out;
};

/// [(I - A/η)^{-1} - I] 1 and its transpose counterpart; requires η > ρ(A).
KatzCentrality katz(const Graph &g, double eta);

/// Spectral radius of the adjacency matrix.
double spectral_radius(const Graph &g);

enum class EigenDirection { Undirected, Right, Left };

/// Nonnegative unit Perron vector; directed cases use power iteration on A + I.
CentralityVector eigenvector_centrality(const Graph &g, EigenDirection direction = EigenDirection::Undirected,
                                        double tol = 1e-12, std::size_t max_iterations = 100000);

/// Row-stochastic Google matrix αS + (1-α)/n 11ᵀ with dangling rows set to 1/n.
Eigen::MatrixXd google_matrix(const Graph &g, double alpha);

CentralityVector pagerank(const Graph &g, double alpha = 0.85, double tol = 1e-12,
                          std::size_t max_iterations = 100000);

enum class SubgraphPart { Total, Odd, Even };

/// Diagonal of e^A, sinh A or cosh A.
CentralityVector subgraph_centrality(const Graph &g, SubgraphPart part = SubgraphPart::Total);

} // namespace graphphys
