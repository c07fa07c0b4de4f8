#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace graphphys {

using node = std::size_t;
using count = std::size_t;

struct Edge {
    node source = 0;
    node target = 0;
    double weight = 1.0;
    count multiplicity = 1;
};

/// Incidence entry of the adjacency structure.
struct Arc {
    node target;
    double weight;
    count multiplicity;
    std::size_t edge;
};

/**
 * Immutable graph on nodes 0..n-1.
 *
 * Undirected edges are stored once; the adjacency structure exposes each of
 * them from both endpoints (a loop appears once at its node). Directed graphs
 * keep separate out- and in-arc lists.
 */
class Graph {
public:
    Graph() = default;
    Graph(count n, std::vector<Edge> edges, bool directed, bool require_simple);

    count node_count() const noexcept { return n_; }
    /// Number of edges counted with multiplicity.
    count edge_count() const noexcept { return m_; }
    bool directed() const noexcept { return directed_; }
    /// No loops, no parallel edges, unit multiplicities.
    bool simple() const noexcept { return simple_; }
    /// Some edge carries a weight other than 1.
    bool weighted() const noexcept { return weighted_; }

    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Arc> out_arcs(node u) const;
    std::span<const Arc> in_arcs(node u) const;
    /// Undirected view: arcs in both directions regardless of orientation.
    std::span<const Arc> arcs(node u) const;

    bool has_edge(node u, node v) const;

private:
    count n_ = 0;
    count m_ = 0;
    bool directed_ = false;
    bool simple_ = true;
    bool weighted_ = false;
    std::vector<Edge> edges_;
    std::vector<std::size_t> out_offsets_, in_offsets_, all_offsets_;
    std::vector<Arc> out_, in_, all_;
};

Graph build_graph(count n, std::vector<Edge> edges, bool directed = false, bool simple = true);

Graph empty_graph(count n);
Graph path_graph(count n);
Graph cycle_graph(count n);
Graph complete_graph(count n);
Graph star_graph(count leaves);
Graph complete_bipartite_graph(count a, count b);
/// Two disjoint copies of g (second copy shifted by n).
Graph disjoint_union(const Graph &g, const Graph &h);
/// Node relabelling: node v of g becomes perm[v].
Graph relabel(const Graph &g, std::span<const node> perm);
/// Same graph with the listed edge (index into edges()) removed.
Graph remove_edge(const Graph &g, std::size_t edge_index);
Graph add_edge(const Graph &g, Edge e);

Eigen::MatrixXd adjacency_matrix(const Graph &g);
Eigen::MatrixXd degree_matrix(const Graph &g);
/// L = K - A with weights as conductances; loops do not contribute.
Eigen::MatrixXd laplacian_matrix(const Graph &g);

/// Number of incident edge ends (a loop counts twice). Out-degree for directed graphs.
std::vector<count> degrees(const Graph &g);
std::vector<count> in_degrees(const Graph &g);
std::vector<count> out_degrees(const Graph &g);

/// Per-edge choice: false keeps source as head (+1), true flips it.
using Orientation = std::vector<bool>;
Eigen::MatrixXd incidence_matrix(const Graph &g, const Orientation &orientation = {});

class DistanceMatrix {
public:
    static constexpr std::int32_t unreachable = -1;

    DistanceMatrix() = default;
    explicit DistanceMatrix(count n) : n_(n), d_(n * n, unreachable) {}

    count size() const noexcept { return n_; }
    bool reachable(node u, node v) const { return d_[u * n_ + v] != unreachable; }
    std::int32_t operator()(node u, node v) const { return d_[u * n_ + v]; }
    std::int32_t &at(node u, node v) { return d_[u * n_ + v]; }

private:
    count n_ = 0;
    std::vector<std::int32_t> d_;
};

/// BFS hop distances from one source (directed graphs follow arc direction).
std::vector<std::int32_t> bfs_distances(const Graph &g, node source);
DistanceMatrix shortest_path_distances(const Graph &g);
double average_path_length(const Graph &g);

struct ClusteringReport {
    std::vector<double> local;
    double average = 0.0;
    double transitivity = 0.0;
};

/// Watts-Strogatz local clustering, its mean and the network transitivity.
ClusteringReport clustering(const Graph &g);
count triangle_count(const Graph &g);

/// Length of the shortest cycle, or nullopt for a forest.
std::optional<count> girth(const Graph &g);
std::vector<std::optional<std::int32_t>> eccentricities(const Graph &g);
std::optional<std::int32_t> diameter(const Graph &g);

struct Components {
    std::vector<std::size_t> label;
    std::size_t count = 0;
};

Components connected_components(const Graph &g);
Components strongly_connected_components(const Graph &g);
bool is_connected(const Graph &g);
bool is_tree(const Graph &g);

struct Bipartition {
    std::vector<node> first;
    std::vector<node> second;
};

/// Two-colouring with |first| <= |second|, or nullopt when an odd cycle exists.
std::optional<Bipartition> bipartition(const Graph &g);
bool is_bipartite(const Graph &g);
/// Rows indexed by the first part, columns by the second.
Eigen::MatrixXd biadjacency_matrix(const Graph &g, const Bipartition &parts);

struct Matching {
    count size = 0;
    std::vector<std::pair<node, node>> edges;
};

/// Hopcroft-Karp maximum matching; throws NotBipartite otherwise.
Matching maximum_matching_bipartite(const Graph &g);

} // namespace graphphys
