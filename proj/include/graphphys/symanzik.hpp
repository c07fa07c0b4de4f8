#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <graphphys/graph.hpp>
#include <graphphys/multipoly.hpp>

namespace graphphys {

struct InternalEdge {
    node u = 0;
    node v = 0;
    /// Feynman parameter index j of x_j (1-based).
    unsigned parameter = 0;
    /// Mass in units of mu; massless when empty.
    std::optional<double> mass;
};

struct ExternalLeg {
    node attach = 0;
    std::string label;
};

/**
 * Feynman graph: internal edges carry Feynman parameters, external legs
 * carry incoming momenta. Momentum conservation is assumed and applied by
 * eliminating the last leg's momentum.
 */
struct FeynmanGraph {
    std::size_t n = 0;
    std::vector<InternalEdge> edges;
    std::vector<ExternalLeg> legs;

    /// Edges numbered x1..xm in list order, all massless.
    static FeynmanGraph from_edges(std::size_t n, const std::vector<std::pair<node, node>> &edges);
    std::size_t loop_count() const;
    unsigned max_parameter() const;
};

/// Validates indices and distinct parameters/labels.
void validate(const FeynmanGraph &fg);

struct TwoForest {
    std::vector<std::size_t> edges;
    /// Component containing the lowest-numbered node, then the other one.
    std::vector<node> first;
    std::vector<node> second;
};

/// Spanning trees as edge-index lists (loops never belong to a tree).
std::vector<std::vector<std::size_t>> spanning_trees(std::size_t n, const std::vector<std::pair<node, node>> &edges);
std::vector<TwoForest> spanning_2forests(std::size_t n, const std::vector<std::pair<node, node>> &edges);
std::vector<std::vector<std::size_t>> spanning_trees(const Graph &g);
std::vector<TwoForest> spanning_2forests(const Graph &g);

MultivariatePolynomial first_symanzik_trees(const FeynmanGraph &fg);

struct SecondSymanzik {
    MultivariatePolynomial f0;
    MultivariatePolynomial f;
};

SecondSymanzik second_symanzik(const FeynmanGraph &fg);

/// det of the Laplacian over x_j with row and column i removed.
MultivariatePolynomial kirchhoff_polynomial(const FeynmanGraph &fg, node drop = 0);
MultivariatePolynomial first_symanzik_from_kirchhoff(const MultivariatePolynomial &k, unsigned m);

struct ModifiedLaplacian {
    /// W = det(L + D) with D_ii the sum of z_j over legs at node i.
    MultivariatePolynomial w;
    /// parts[k] is the part of W homogeneous of degree k in z.
    std::vector<MultivariatePolynomial> parts;
    /// U and F0 recovered from parts[1] and parts[2].
    MultivariatePolynomial u;
    MultivariatePolynomial f0;
};

ModifiedLaplacian modified_laplacian_expansion(const FeynmanGraph &fg);

/// Rewrites s_{j,t} in terms of the other labels, t being the last leg.
MultivariatePolynomial apply_momentum_conservation(const MultivariatePolynomial &p, unsigned legs);

FeynmanGraph delete_edge(const FeynmanGraph &fg, std::size_t e);
FeynmanGraph contract_edge(const FeynmanGraph &fg, std::size_t e);

struct DeletionContractionCheck {
    bool first = false;
    bool second = false;
};

/// U(G) = U(G/e) + x_e U(G-e) and the same for F0; BridgeOrLoop otherwise.
DeletionContractionCheck symanzik_deletion_contraction_check(const FeynmanGraph &fg, std::size_t e);

} // namespace graphphys
