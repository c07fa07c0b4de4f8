#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include <graphphys/graph.hpp>

namespace graphphys {

/// Assignment of nodes to nonempty blocks 0..blocks-1.
struct Partition {
    std::vector<std::size_t> block;
    std::size_t blocks = 0;

    /// Blocks as sorted node lists.
    std::vector<std::vector<node>> members() const;
};

/// Relabels blocks by first appearance and checks that ids are in range.
Partition make_partition(std::vector<std::size_t> assignment);
/// One block per connected component.
Partition component_partition(const Graph &g);

/// Edge betweenness indexed like g.edges().
std::vector<double> edge_betweenness(const Graph &g);

struct DendrogramStage {
    /// Endpoints of the edge removed to reach this stage; empty for the initial stage.
    std::optional<std::pair<node, node>> removed;
    Partition partition;
    double modularity = 0.0;
};

struct Dendrogram {
    std::vector<DendrogramStage> stages;
    /// Stage with the largest modularity (earliest on ties).
    std::size_t best = 0;

    const DendrogramStage &best_stage() const { return stages[best]; }
};

/// Repeatedly removes the edge of largest betweenness, recomputing after every removal.
Dendrogram girvan_newman(const Graph &g);

/// Σ_k [|E_k|/m - (Σ_{j∈V_k} k_j / 2m)²]
double modularity(const Graph &g, const Partition &p);

enum class BisectionMatrix { Adjacency, Laplacian, NormalizedLaplacian };

/// Sign split of the second eigenvector; block 0 holds entries ≥ -tol.
Partition spectral_bisection(const Graph &g, BisectionMatrix matrix = BisectionMatrix::Laplacian,
                             double tol = 1e-10);

/// Common-neighbour count over sqrt(k_i k_j); zero for isolated nodes.
Eigen::MatrixXd cosine_similarity(const Graph &g);

} // namespace graphphys
