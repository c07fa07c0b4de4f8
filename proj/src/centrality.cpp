#include <graphphys/centrality.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <stack>

#include <Eigen/Eigenvalues>

#include <graphphys/error.hpp>
#include <graphphys/spectral.hpp>

namespace graphphys {

namespace {

/// Distinct out-neighbours without loops, with the first connecting edge index.
struct Neighbour {
    node target;
    std::size_t edge;
};

std::vector<std::vector<Neighbour>> simple_out_neighbours(const Graph &g) {
    std::vector<std::vector<Neighbour>> nb(g.node_count());
    for (node u = 0; u < g.node_count(); ++u) {
        for (const Arc &a : g.out_arcs(u)) {
            if (a.target == u)
                continue;
            auto it = std::find_if(nb[u].begin(), nb[u].end(),
                                   [&](const Neighbour &x) { return x.target == a.target; });
            if (it == nb[u].end())
                nb[u].push_back({a.target, a.edge});
            else
                it->edge = std::min(it->edge, a.edge);
        }
    }
    return nb;
}

Eigen::VectorXd ones(const Graph &g) {
    return Eigen::VectorXd::Ones(static_cast<Eigen::Index>(g.node_count()));
}

std::vector<double> to_std(const Eigen::VectorXd &v) {
    return std::vector<double>(v.data(), v.data() + v.size());
}

/// Power iteration on (M + I), normalized in 1-norm; same Perron vector as M.
Eigen::VectorXd shifted_power_iteration(const Eigen::MatrixXd &m, double tol, std::size_t max_iterations) {
    const Eigen::Index n = m.rows();
    Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
    for (std::size_t it = 0; it < max_iterations; ++it) {
        Eigen::VectorXd y = m * x + x;
        const double s = y.sum();
        if (!(s > 0.0))
            fail(ErrorCode::NoConvergence, "power iteration collapsed to zero");
        y /= s;
        const double delta = (y - x).lpNorm<1>();
        x = std::move(y);
        if (delta < tol)
            return x;
    }
    fail(ErrorCode::NoConvergence, "power iteration did not converge");
}

} // namespace

DegreeCentrality degree_centrality(const Graph &g) {
    DegreeCentrality d;
    if (!g.directed()) {
        for (count k : degrees(g))
            d.total.push_back(static_cast<double>(k));
        d.in = d.out = d.total;
        return d;
    }
    const auto in = in_degrees(g), out = out_degrees(g);
    for (node u = 0; u < g.node_count(); ++u) {
        d.in.push_back(static_cast<double>(in[u]));
        d.out.push_back(static_cast<double>(out[u]));
        d.total.push_back(static_cast<double>(in[u] + out[u]));
    }
    return d;
}

CentralityVector closeness(const Graph &g) {
    CentralityVector c{"closeness", {}, {}, std::nullopt};
    const count n = g.node_count();
    for (node u = 0; u < n; ++u) {
        const auto dist = bfs_distances(g, u);
        double total = 0.0;
        for (auto d : dist) {
            if (d == DistanceMatrix::unreachable)
                fail(ErrorCode::Disconnected, "closeness needs every node reachable");
            total += d;
        }
        c.scores.push_back(n < 2 ? 0.0 : static_cast<double>(n - 1) / total);
    }
    return c;
}

BetweennessScores brandes_betweenness(const Graph &g) {
    const count n = g.node_count();
    const auto nb = simple_out_neighbours(g);
    BetweennessScores b{std::vector<double>(n, 0.0), std::vector<double>(g.edges().size(), 0.0)};
    std::vector<std::vector<node>> pred(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<std::int64_t> dist(n);
    for (node s = 0; s < n; ++s) {
        std::stack<node> order;
        for (node v = 0; v < n; ++v) {
            pred[v].clear();
            sigma[v] = 0.0;
            delta[v] = 0.0;
            dist[v] = -1;
        }
        sigma[s] = 1.0;
        dist[s] = 0;
        std::queue<node> q;
        q.push(s);
        while (!q.empty()) {
            const node v = q.front();
            q.pop();
            order.push(v);
            for (const Neighbour &w : nb[v]) {
                if (dist[w.target] < 0) {
                    dist[w.target] = dist[v] + 1;
                    q.push(w.target);
                }
                if (dist[w.target] == dist[v] + 1) {
                    sigma[w.target] += sigma[v];
                    pred[w.target].push_back(v);
                }
            }
        }
        while (!order.empty()) {
            const node w = order.top();
            order.pop();
            for (node v : pred[w]) {
                const double share = sigma[v] / sigma[w] * (1.0 + delta[w]);
                const auto it = std::find_if(nb[v].begin(), nb[v].end(),
                                             [&](const Neighbour &x) { return x.target == w; });
                b.edges[it->edge] += share;
                delta[v] += share;
            }
            if (w != s)
                b.nodes[w] += delta[w];
        }
    }
    if (!g.directed()) {
        // Each unordered pair was visited from both ends.
        for (double &x : b.nodes)
            x /= 2.0;
        for (double &x : b.edges)
            x /= 2.0;
    }
    return b;
}

CentralityVector betweenness(const Graph &g) {
    return {"betweenness", brandes_betweenness(g).nodes, {}, std::nullopt};
}

double spectral_radius(const Graph &g) {
    if (g.node_count() == 0)
        return 0.0;
    const Eigen::MatrixXd a = adjacency_matrix(g);
    if (!g.directed()) {
        const Spectrum s = eig_symmetric(a);
        return std::max(std::abs(s.values[0]), std::abs(s.values[s.values.size() - 1]));
    }
    const Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
    if (es.info() != Eigen::Success)
        fail(ErrorCode::NoConvergence, "eigensolver failed");
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

KatzCentrality katz(const Graph &g, double eta) {
    const double rho = spectral_radius(g);
    if (!(eta > rho * (1.0 + 1e-12)) || !(eta > 0.0))
        fail(ErrorCode::EtaTooSmall, "eta = " + std::to_string(eta) + " must exceed the spectral radius " +
                                         std::to_string(rho));
    const Eigen::Index n = static_cast<Eigen::Index>(g.node_count());
    const Eigen::MatrixXd a = adjacency_matrix(g);
    const Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n) - a / eta;
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
    const Eigen::PartialPivLU<Eigen::MatrixXd> lut(m.transpose());
    const Eigen::VectorXd out = lu.solve(ones(g)) - ones(g);
    const Eigen::VectorXd in = lut.solve(ones(g)) - ones(g);
    KatzCentrality k;
    k.out = {"katz_out", to_std(out), {{"eta", eta}}, std::nullopt};
    k.in = {"katz_in", to_std(in), {{"eta", eta}}, std::nullopt};
    return k;
}

CentralityVector eigenvector_centrality(const Graph &g, EigenDirection direction, double tol,
                                        std::size_t max_iterations) {
    CentralityVector c{"eigenvector", {}, {}, std::nullopt};
    if (g.node_count() == 0)
        return c;
    Eigen::VectorXd x;
    if (!g.directed() || direction == EigenDirection::Undirected) {
        if (g.directed())
            fail(ErrorCode::InvalidArgument, "directed graph needs the right or left direction");
        const Spectrum s = eig_symmetric(adjacency_matrix(g));
        x = s.vectors.col(0);
        if (x.sum() < 0)
            x = -x;
        if (s.multiplicity_of(s.values[0]) > 1 || !is_connected(g))
            c.warning = "graph is not connected; the principal eigenvector is not unique";
        c.parameters.push_back({"lambda1", s.values[0]});
    } else {
        const Eigen::MatrixXd a = adjacency_matrix(g);
        const Eigen::MatrixXd m = direction == EigenDirection::Right ? a : Eigen::MatrixXd(a.transpose());
        x = shifted_power_iteration(m, tol, max_iterations);
        c.parameters.push_back({"lambda1", (m * x).norm() / x.norm()});
        if (strongly_connected_components(g).count != 1)
            c.warning = "graph is not strongly connected; Perron positivity is not guaranteed";
        c.measure = direction == EigenDirection::Right ? "eigenvector_right" : "eigenvector_left";
    }
    x = x.cwiseMax(0.0);
    x /= x.norm();
    c.scores = to_std(x);
    return c;
}

Eigen::MatrixXd google_matrix(const Graph &g, double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        fail(ErrorCode::InvalidArgument, "alpha must lie in [0, 1)");
    const Eigen::Index n = static_cast<Eigen::Index>(g.node_count());
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
    for (node u = 0; u < g.node_count(); ++u)
        for (const Arc &a : g.out_arcs(u))
            s(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(a.target)) +=
                a.weight * static_cast<double>(a.multiplicity);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double row = s.row(i).sum();
        if (row > 0.0)
            s.row(i) /= row;
        else
            s.row(i).setConstant(1.0 / static_cast<double>(n));
    }
    return alpha * s + Eigen::MatrixXd::Constant(n, n, (1.0 - alpha) / static_cast<double>(n));
}

CentralityVector pagerank(const Graph &g, double alpha, double tol, std::size_t max_iterations) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        fail(ErrorCode::InvalidArgument, "alpha must lie in [0, 1)");
    const count n = g.node_count();
    CentralityVector c{"pagerank", {}, {{"alpha", alpha}}, std::nullopt};
    if (n == 0)
        return c;
    std::vector<double> out_weight(n, 0.0);
    for (node u = 0; u < n; ++u)
        for (const Arc &a : g.out_arcs(u))
            out_weight[u] += a.weight * static_cast<double>(a.multiplicity);
    const double nn = static_cast<double>(n);
    std::vector<double> pi(n, 1.0 / nn), next(n);
    for (std::size_t it = 0; it < max_iterations; ++it) {
        double dangling = 0.0;
        for (node u = 0; u < n; ++u)
            if (out_weight[u] <= 0.0)
                dangling += pi[u];
        std::fill(next.begin(), next.end(), (alpha * dangling + 1.0 - alpha) / nn);
        for (node u = 0; u < n; ++u) {
            if (out_weight[u] <= 0.0)
                continue;
            const double share = alpha * pi[u] / out_weight[u];
            for (const Arc &a : g.out_arcs(u))
                next[a.target] += share * a.weight * static_cast<double>(a.multiplicity);
        }
        double total = 0.0;
        for (double x : next)
            total += x;
        double delta = 0.0;
        for (node u = 0; u < n; ++u) {
            next[u] /= total;
            delta += std::abs(next[u] - pi[u]);
        }
        pi.swap(next);
        if (delta < tol) {
            c.scores = std::move(pi);
            return c;
        }
    }
    fail(ErrorCode::NoConvergence, "PageRank did not reach the tolerance");
}

CentralityVector subgraph_centrality(const Graph &g, SubgraphPart part) {
    const Eigen::MatrixXd a = adjacency_matrix(g);
    Eigen::MatrixXd f;
    if (!g.directed()) {
        f = part == SubgraphPart::Total ? matrix_exp(a) : (part == SubgraphPart::Odd ? matrix_sinh(a) : matrix_cosh(a));
    } else {
        const Eigen::MatrixXd ep = matrix_exp_general(a);
        if (part == SubgraphPart::Total) {
            f = ep;
        } else {
            const Eigen::MatrixXd em = matrix_exp_general(-a);
            f = part == SubgraphPart::Odd ? Eigen::MatrixXd(0.5 * (ep - em)) : Eigen::MatrixXd(0.5 * (ep + em));
        }
    }
    const char *name = part == SubgraphPart::Total ? "subgraph" : (part == SubgraphPart::Odd ? "subgraph_odd" : "subgraph_even");
    return {name, to_std(f.diagonal()), {}, std::nullopt};
}

} // namespace graphphys
