#include <graphphys/communities.hpp>

#include <cmath>
#include <limits>
#include <string>

#include <graphphys/centrality.hpp>
#include <graphphys/error.hpp>
#include <graphphys/spectral.hpp>

namespace graphphys {

std::vector<std::vector<node>> Partition::members() const {
    std::vector<std::vector<node>> m(blocks);
    for (node u = 0; u < block.size(); ++u)
        m[block[u]].push_back(u);
    return m;
}

Partition make_partition(std::vector<std::size_t> assignment) {
    Partition p;
    std::vector<std::size_t> relabel;
    const std::size_t unset = std::numeric_limits<std::size_t>::max();
    for (std::size_t &b : assignment) {
        if (b >= relabel.size())
            relabel.resize(b + 1, unset);
        if (relabel[b] == unset)
            relabel[b] = p.blocks++;
        b = relabel[b];
    }
    p.block = std::move(assignment);
    return p;
}

Partition component_partition(const Graph &g) {
    return make_partition(connected_components(g).label);
}

std::vector<double> edge_betweenness(const Graph &g) {
    return brandes_betweenness(g).edges;
}

double modularity(const Graph &g, const Partition &p) {
    if (g.edge_count() == 0)
        fail(ErrorCode::EmptyGraph, "modularity needs at least one edge");
    if (p.block.size() != g.node_count())
        fail(ErrorCode::InvalidArgument, "partition size does not match the graph");
    for (std::size_t b : p.block)
        if (b >= p.blocks)
            fail(ErrorCode::InvalidArgument, "block id out of range");
    const double m = static_cast<double>(g.edge_count());
    std::vector<double> inside(p.blocks, 0.0), degree_sum(p.blocks, 0.0);
    for (const Edge &e : g.edges()) {
        const double mult = static_cast<double>(e.multiplicity);
        degree_sum[p.block[e.source]] += mult;
        degree_sum[p.block[e.target]] += mult;
        if (p.block[e.source] == p.block[e.target])
            inside[p.block[e.source]] += mult;
    }
    double q = 0.0;
    for (std::size_t k = 0; k < p.blocks; ++k) {
        const double share = degree_sum[k] / (2.0 * m);
        q += inside[k] / m - share * share;
    }
    return q;
}

Dendrogram girvan_newman(const Graph &g) {
    if (g.directed())
        fail(ErrorCode::DirectedUnsupported, "Girvan-Newman needs an undirected graph");
    Dendrogram d;
    auto score = [&](const Partition &p) { return g.edge_count() == 0 ? 0.0 : modularity(g, p); };
    Partition initial = component_partition(g);
    d.stages.push_back({std::nullopt, initial, score(initial)});
    Graph current = g;
    while (!current.edges().empty()) {
        const std::vector<double> eb = edge_betweenness(current);
        double top = 0.0;
        for (double x : eb)
            top = std::max(top, x);
        const double tie = 1e-9 * std::max(1.0, top);
        std::size_t pick = current.edges().size();
        for (std::size_t i = 0; i < eb.size(); ++i) {
            if (eb[i] < top - tie)
                continue;
            const Edge &e = current.edges()[i];
            if (pick == current.edges().size() ||
                std::pair(e.source, e.target) < std::pair(current.edges()[pick].source, current.edges()[pick].target))
                pick = i;
        }
        const Edge removed = current.edges()[pick];
        current = remove_edge(current, pick);
        Partition p = component_partition(current);
        const double q = score(p);
        d.stages.push_back({std::pair(removed.source, removed.target), std::move(p), q});
    }
    for (std::size_t i = 1; i < d.stages.size(); ++i)
        if (d.stages[i].modularity > d.stages[d.best].modularity + 1e-12)
            d.best = i;
    return d;
}

Partition spectral_bisection(const Graph &g, BisectionMatrix matrix, double tol) {
    if (g.directed())
        fail(ErrorCode::DirectedUnsupported, "spectral bisection needs an undirected graph");
    const count n = g.node_count();
    if (n < 2 || !is_connected(g))
        fail(ErrorCode::Disconnected, "spectral bisection needs a connected graph with two or more nodes");
    const Eigen::Index nn = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd m;
    Eigen::Index column = 0;
    switch (matrix) {
    case BisectionMatrix::Adjacency:
        m = adjacency_matrix(g);
        column = 1;
        break;
    case BisectionMatrix::Laplacian:
        m = laplacian_matrix(g);
        column = nn - 2;
        break;
    case BisectionMatrix::NormalizedLaplacian: {
        m = laplacian_matrix(g);
        const Eigen::VectorXd scale = m.diagonal().cwiseSqrt().cwiseInverse();
        m = scale.asDiagonal() * m * scale.asDiagonal();
        column = nn - 2;
        break;
    }
    }
    const Spectrum s = eig_symmetric(m);
    Eigen::VectorXd phi = s.vectors.col(column);
    if (matrix == BisectionMatrix::NormalizedLaplacian)
        phi = phi.cwiseQuotient(laplacian_matrix(g).diagonal().cwiseSqrt());
    // Fix the sign so that the first clearly signed entry is positive.
    for (Eigen::Index i = 0; i < nn; ++i) {
        if (std::abs(phi[i]) > tol) {
            if (phi[i] < 0)
                phi = -phi;
            break;
        }
    }
    std::vector<std::size_t> assignment(n);
    for (node u = 0; u < n; ++u)
        assignment[u] = phi[static_cast<Eigen::Index>(u)] >= -tol ? 0 : 1;
    Partition p;
    p.block = std::move(assignment);
    p.blocks = 1;
    for (std::size_t b : p.block)
        if (b == 1)
            p.blocks = 2;
    return p;
}

Eigen::MatrixXd cosine_similarity(const Graph &g) {
    const Eigen::MatrixXd a = adjacency_matrix(g);
    const Eigen::MatrixXd common = a * a.transpose();
    const Eigen::VectorXd k = a.rowwise().sum();
    const Eigen::Index n = a.rows();
    Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (k[i] > 0 && k[j] > 0)
                sigma(i, j) = common(i, j) / std::sqrt(k[i] * k[j]);
    return sigma;
}

} // namespace graphphys
