#include <graphphys/electrical.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include <graphphys/error.hpp>
#include <graphphys/spectral.hpp>

namespace graphphys {

namespace {

void check_node(const Graph &g, node u) {
    if (u >= g.node_count())
        fail(ErrorCode::OutOfRange, "node " + std::to_string(u));
}

/// Laplacian of the component holding u, plus the local indices of u and v.
struct ComponentLaplacian {
    Eigen::MatrixXd l;
    Eigen::Index u = 0, v = 0;
};

ComponentLaplacian component_laplacian(const Graph &g, node u, node v) {
    const Components c = connected_components(g);
    if (c.label[u] != c.label[v])
        fail(ErrorCode::DifferentComponents, "nodes lie in different components");
    const Eigen::MatrixXd full = laplacian_matrix(g);
    std::vector<Eigen::Index> keep;
    ComponentLaplacian r;
    for (node w = 0; w < g.node_count(); ++w) {
        if (c.label[w] != c.label[u])
            continue;
        if (w == u)
            r.u = static_cast<Eigen::Index>(keep.size());
        if (w == v)
            r.v = static_cast<Eigen::Index>(keep.size());
        keep.push_back(static_cast<Eigen::Index>(w));
    }
    r.l = full(keep, keep);
    return r;
}

Eigen::MatrixXd drop(const Eigen::MatrixXd &m, std::vector<Eigen::Index> rows) {
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        if (std::find(rows.begin(), rows.end(), i) == rows.end())
            keep.push_back(i);
    return m(keep, keep);
}

} // namespace

double resistance_distance(const Graph &g, node u, node v, ResistanceMethod method) {
    check_node(g, u);
    check_node(g, v);
    if (u == v)
        return 0.0;
    if (method == ResistanceMethod::Determinant && !is_connected(g))
        fail(ErrorCode::Disconnected, "determinant formula needs a connected graph");
    const ComponentLaplacian c = component_laplacian(g, u, v);
    switch (method) {
    case ResistanceMethod::Pseudoinverse: {
        const Eigen::MatrixXd p = laplacian_pseudoinverse(c.l);
        return p(c.u, c.u) + p(c.v, c.v) - 2.0 * p(c.u, c.v);
    }
    case ResistanceMethod::Determinant: {
        const Eigen::MatrixXd lu = drop(c.l, {c.u});
        const Eigen::MatrixXd luv = drop(c.l, {c.u, c.v});
        const double denom = lu.partialPivLu().determinant();
        const double numer = luv.rows() == 0 ? 1.0 : luv.partialPivLu().determinant();
        return numer / denom;
    }
    case ResistanceMethod::Spectral: {
        const Spectrum s = eig_symmetric(c.l);
        const Eigen::Index n = c.l.rows();
        double omega = 0.0;
        // Descending order: the zero mode is the last column.
        for (Eigen::Index k = 0; k + 1 < n; ++k) {
            const double d = s.vectors(c.u, k) - s.vectors(c.v, k);
            omega += d * d / s.values[k];
        }
        return omega;
    }
    }
    fail(ErrorCode::InvalidArgument, "unknown resistance method");
}

Eigen::MatrixXd resistance_matrix(const Graph &g) {
    if (!is_connected(g))
        fail(ErrorCode::Disconnected, "resistance matrix needs a connected graph");
    const Eigen::Index n = static_cast<Eigen::Index>(g.node_count());
    const Eigen::MatrixXd l = laplacian_matrix(g);
    const Eigen::MatrixXd j = Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
    const Eigen::MatrixXd m = (l + j).partialPivLu().inverse();
    const Eigen::VectorXd d = m.diagonal();
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
    Eigen::MatrixXd omega = ones * d.transpose() + d * ones.transpose() - 2.0 * m;
    omega.diagonal().setZero();
    return 0.5 * (omega + omega.transpose());
}

Eigen::MatrixXd pseudoinverse_from_resistance(const Eigen::MatrixXd &omega) {
    const Eigen::Index n = omega.rows();
    const double nn = static_cast<double>(n);
    const Eigen::MatrixXd j = Eigen::MatrixXd::Ones(n, n);
    return -0.5 * (omega - (omega * j + j * omega) / nn + j * omega * j / (nn * nn));
}

double commute_time(const Graph &g, node u, node v) {
    if (!is_connected(g))
        fail(ErrorCode::Disconnected, "commute time needs a connected graph");
    double total = 0.0;
    for (const Edge &e : g.edges())
        total += e.weight * static_cast<double>(e.multiplicity);
    return 2.0 * total * resistance_distance(g, u, v);
}

} // namespace graphphys
