#include <graphphys/graph.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>

#include <graphphys/error.hpp>

namespace graphphys {

namespace {

void build_csr(count n, const std::vector<std::pair<node, Arc>> &entries,
               std::vector<std::size_t> &offsets, std::vector<Arc> &arcs) {
    offsets.assign(n + 1, 0);
    for (const auto &[u, arc] : entries)
        ++offsets[u + 1];
    for (count i = 0; i < n; ++i)
        offsets[i + 1] += offsets[i];
    arcs.resize(entries.size());
    std::vector<std::size_t> pos(offsets.begin(), offsets.end() - 1);
    for (const auto &[u, arc] : entries)
        arcs[pos[u]++] = arc;
}

void require_undirected(const Graph &g, const char *what) {
    if (g.directed())
        fail(ErrorCode::DirectedUnsupported, what);
}

/// Sorted, de-duplicated neighbour lists of the underlying simple undirected graph.
std::vector<std::vector<node>> simple_neighbours(const Graph &g) {
    std::vector<std::vector<node>> nb(g.node_count());
    for (const Edge &e : g.edges()) {
        if (e.source == e.target)
            continue;
        nb[e.source].push_back(e.target);
        nb[e.target].push_back(e.source);
    }
    for (auto &list : nb) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return nb;
}

} // namespace

Graph::Graph(count n, std::vector<Edge> edges, bool directed, bool require_simple)
    : n_(n), directed_(directed), edges_(std::move(edges)) {
    std::set<std::pair<node, node>> seen;
    simple_ = true;
    for (Edge &e : edges_) {
        if (e.source >= n_ || e.target >= n_)
            fail(ErrorCode::OutOfRange, "edge (" + std::to_string(e.source) + ", " +
                                            std::to_string(e.target) + ") with n = " +
                                            std::to_string(n_));
        if (e.multiplicity == 0)
            fail(ErrorCode::InvalidArgument, "edge multiplicity must be positive");
        if (!std::isfinite(e.weight))
            fail(ErrorCode::InvalidArgument, "edge weight must be finite");
        if (!directed_ && e.source > e.target)
            std::swap(e.source, e.target);
        bool loop = e.source == e.target;
        bool duplicate = !seen.insert({e.source, e.target}).second || e.multiplicity > 1;
        if (require_simple && loop)
            fail(ErrorCode::SelfLoopInSimpleGraph, "loop at node " + std::to_string(e.source));
        if (require_simple && duplicate)
            fail(ErrorCode::DuplicateEdgeInSimpleGraph, "parallel edge between " +
                                                            std::to_string(e.source) + " and " +
                                                            std::to_string(e.target));
        if (loop || duplicate)
            simple_ = false;
        if (e.weight != 1.0)
            weighted_ = true;
        m_ += e.multiplicity;
    }

    std::vector<std::pair<node, Arc>> out, in, all;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge &e = edges_[i];
        Arc forward{e.target, e.weight, e.multiplicity, i};
        Arc backward{e.source, e.weight, e.multiplicity, i};
        all.emplace_back(e.source, forward);
        if (e.source != e.target)
            all.emplace_back(e.target, backward);
        if (directed_) {
            out.emplace_back(e.source, forward);
            in.emplace_back(e.target, backward);
        }
    }
    build_csr(n_, all, all_offsets_, all_);
    if (directed_) {
        build_csr(n_, out, out_offsets_, out_);
        build_csr(n_, in, in_offsets_, in_);
    }
}

std::span<const Arc> Graph::arcs(node u) const {
    return {all_.data() + all_offsets_[u], all_offsets_[u + 1] - all_offsets_[u]};
}

std::span<const Arc> Graph::out_arcs(node u) const {
    if (!directed_)
        return arcs(u);
    return {out_.data() + out_offsets_[u], out_offsets_[u + 1] - out_offsets_[u]};
}

std::span<const Arc> Graph::in_arcs(node u) const {
    if (!directed_)
        return arcs(u);
    return {in_.data() + in_offsets_[u], in_offsets_[u + 1] - in_offsets_[u]};
}

bool Graph::has_edge(node u, node v) const {
    for (const Arc &a : out_arcs(u))
        if (a.target == v)
            return true;
    return false;
}

Graph build_graph(count n, std::vector<Edge> edges, bool directed, bool simple) {
    return Graph(n, std::move(edges), directed, simple);
}

Graph empty_graph(count n) { return build_graph(n, {}); }

Graph path_graph(count n) {
    std::vector<Edge> edges;
    for (node i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    return build_graph(n, std::move(edges));
}

Graph cycle_graph(count n) {
    if (n < 3)
        fail(ErrorCode::InvalidArgument, "a simple cycle needs at least 3 nodes");
    std::vector<Edge> edges;
    for (node i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    return build_graph(n, std::move(edges));
}

Graph complete_graph(count n) {
    std::vector<Edge> edges;
    for (node i = 0; i < n; ++i)
        for (node j = i + 1; j < n; ++j)
            edges.push_back({i, j});
    return build_graph(n, std::move(edges));
}

Graph star_graph(count leaves) {
    std::vector<Edge> edges;
    for (node i = 1; i <= leaves; ++i)
        edges.push_back({0, i});
    return build_graph(leaves + 1, std::move(edges));
}

Graph complete_bipartite_graph(count a, count b) {
    std::vector<Edge> edges;
    for (node i = 0; i < a; ++i)
        for (node j = 0; j < b; ++j)
            edges.push_back({i, a + j});
    return build_graph(a + b, std::move(edges));
}

Graph disjoint_union(const Graph &g, const Graph &h) {
    if (g.directed() != h.directed())
        fail(ErrorCode::InvalidArgument, "cannot join directed and undirected graphs");
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (Edge e : h.edges()) {
        e.source += g.node_count();
        e.target += g.node_count();
        edges.push_back(e);
    }
    return Graph(g.node_count() + h.node_count(), std::move(edges), g.directed(), false);
}

Graph relabel(const Graph &g, std::span<const node> perm) {
    if (perm.size() != g.node_count())
        fail(ErrorCode::InvalidArgument, "permutation size mismatch");
    std::vector<Edge> edges;
    for (Edge e : g.edges()) {
        e.source = perm[e.source];
        e.target = perm[e.target];
        edges.push_back(e);
    }
    return Graph(g.node_count(), std::move(edges), g.directed(), false);
}

Graph remove_edge(const Graph &g, std::size_t edge_index) {
    if (edge_index >= g.edges().size())
        fail(ErrorCode::NoSuchEdge, "edge index " + std::to_string(edge_index));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        if (i != edge_index)
            edges.push_back(g.edges()[i]);
    return Graph(g.node_count(), std::move(edges), g.directed(), false);
}

Graph add_edge(const Graph &g, Edge e) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    edges.push_back(e);
    return Graph(g.node_count(), std::move(edges), g.directed(), false);
}

Eigen::MatrixXd adjacency_matrix(const Graph &g) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const Edge &e : g.edges()) {
        const double w = e.weight * static_cast<double>(e.multiplicity);
        const auto u = static_cast<Eigen::Index>(e.source);
        const auto v = static_cast<Eigen::Index>(e.target);
        a(u, v) += w;
        if (!g.directed() && u != v)
            a(v, u) += w;
    }
    return a;
}

Eigen::MatrixXd laplacian_matrix(const Graph &g) {
    require_undirected(g, "Laplacian of a directed graph");
    const auto n = static_cast<Eigen::Index>(g.node_count());
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (const Edge &e : g.edges()) {
        if (e.source == e.target)
            continue;
        const double w = e.weight * static_cast<double>(e.multiplicity);
        const auto u = static_cast<Eigen::Index>(e.source);
        const auto v = static_cast<Eigen::Index>(e.target);
        l(u, u) += w;
        l(v, v) += w;
        l(u, v) -= w;
        l(v, u) -= w;
    }
    return l;
}

Eigen::MatrixXd degree_matrix(const Graph &g) {
    Eigen::MatrixXd l = laplacian_matrix(g);
    return l.diagonal().asDiagonal();
}

std::vector<count> degrees(const Graph &g) {
    if (g.directed())
        return out_degrees(g);
    std::vector<count> k(g.node_count(), 0);
    for (const Edge &e : g.edges()) {
        k[e.source] += e.multiplicity;
        k[e.target] += e.multiplicity;
    }
    return k;
}

std::vector<count> out_degrees(const Graph &g) {
    if (!g.directed())
        return degrees(g);
    std::vector<count> k(g.node_count(), 0);
    for (const Edge &e : g.edges())
        k[e.source] += e.multiplicity;
    return k;
}

std::vector<count> in_degrees(const Graph &g) {
    if (!g.directed())
        return degrees(g);
    std::vector<count> k(g.node_count(), 0);
    for (const Edge &e : g.edges())
        k[e.target] += e.multiplicity;
    return k;
}

Eigen::MatrixXd incidence_matrix(const Graph &g, const Orientation &orientation) {
    require_undirected(g, "oriented incidence matrix of a directed graph");
    if (!g.simple())
        fail(ErrorCode::InvalidArgument, "incidence matrix requires a simple graph");
    const auto edges = g.edges();
    if (!orientation.empty() && orientation.size() != edges.size())
        fail(ErrorCode::InvalidArgument, "orientation size mismatch");
    Eigen::MatrixXd inc = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.node_count()),
                                                static_cast<Eigen::Index>(edges.size()));
    for (std::size_t j = 0; j < edges.size(); ++j) {
        node head = edges[j].source, tail = edges[j].target;
        if (!orientation.empty() && orientation[j])
            std::swap(head, tail);
        const auto col = static_cast<Eigen::Index>(j);
        inc(static_cast<Eigen::Index>(head), col) = 1.0;
        inc(static_cast<Eigen::Index>(tail), col) = -1.0;
    }
    return inc;
}

std::vector<std::int32_t> bfs_distances(const Graph &g, node source) {
    std::vector<std::int32_t> dist(g.node_count(), DistanceMatrix::unreachable);
    std::queue<node> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        node u = frontier.front();
        frontier.pop();
        for (const Arc &a : g.out_arcs(u)) {
            if (dist[a.target] == DistanceMatrix::unreachable) {
                dist[a.target] = dist[u] + 1;
                frontier.push(a.target);
            }
        }
    }
    return dist;
}

DistanceMatrix shortest_path_distances(const Graph &g) {
    DistanceMatrix d(g.node_count());
    for (node s = 0; s < g.node_count(); ++s) {
        auto row = bfs_distances(g, s);
        for (node t = 0; t < g.node_count(); ++t)
            d.at(s, t) = row[t];
    }
    return d;
}

double average_path_length(const Graph &g) {
    const count n = g.node_count();
    if (n < 2)
        return 0.0;
    double total = 0.0;
    for (node s = 0; s < n; ++s) {
        auto row = bfs_distances(g, s);
        for (node t = 0; t < n; ++t) {
            if (row[t] == DistanceMatrix::unreachable)
                fail(ErrorCode::Disconnected, "average path length needs every pair reachable");
            total += row[t];
        }
    }
    return total / (static_cast<double>(n) * static_cast<double>(n - 1));
}

ClusteringReport clustering(const Graph &g) {
    require_undirected(g, "clustering coefficient");
    const auto nb = simple_neighbours(g);
    const count n = g.node_count();
    ClusteringReport r;
    r.local.assign(n, 0.0);
    std::vector<count> closed(n, 0);
    std::vector<char> mark(n, 0);
    for (node u = 0; u < n; ++u) {
        for (node v : nb[u])
            mark[v] = 1;
        for (node v : nb[u])
            for (node w : nb[v])
                if (w > v && mark[w])
                    ++closed[u];
        for (node v : nb[u])
            mark[v] = 0;
    }
    double triples = 0.0, tri3 = 0.0;
    for (node u = 0; u < n; ++u) {
        const double k = static_cast<double>(nb[u].size());
        if (nb[u].size() >= 2)
            r.local[u] = 2.0 * static_cast<double>(closed[u]) / (k * (k - 1.0));
        triples += k * (k - 1.0) / 2.0;
        tri3 += static_cast<double>(closed[u]);
    }
    r.average = n == 0 ? 0.0 : std::accumulate(r.local.begin(), r.local.end(), 0.0) / static_cast<double>(n);
    // Each triangle is closed at all three of its corners.
    r.transitivity = triples == 0.0 ? 0.0 : tri3 / triples;
    return r;
}

count triangle_count(const Graph &g) {
    const auto nb = simple_neighbours(g);
    count t = 0;
    std::vector<char> mark(g.node_count(), 0);
    for (node u = 0; u < g.node_count(); ++u) {
        for (node v : nb[u])
            mark[v] = 1;
        for (node v : nb[u])
            if (v > u)
                for (node w : nb[v])
                    if (w > v && mark[w])
                        ++t;
        for (node v : nb[u])
            mark[v] = 0;
    }
    return t;
}

std::optional<count> girth(const Graph &g) {
    std::set<std::pair<node, node>> seen;
    for (const Edge &e : g.edges()) {
        if (e.source == e.target)
            return 1;
        auto key = std::minmax(e.source, e.target);
        if (e.multiplicity > 1 || !seen.insert(key).second)
            return 2;
    }
    const auto nb = simple_neighbours(g);
    const count n = g.node_count();
    count best = std::numeric_limits<count>::max();
    std::vector<std::int64_t> dist(n), parent(n);
    for (node root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<node> q;
        dist[root] = 0;
        parent[root] = -1;
        q.push(root);
        while (!q.empty()) {
            node u = q.front();
            q.pop();
            for (node w : nb[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = static_cast<std::int64_t>(u);
                    q.push(w);
                } else if (parent[u] != static_cast<std::int64_t>(w)) {
                    best = std::min(best, static_cast<count>(dist[u] + dist[w] + 1));
                }
            }
        }
    }
    if (best == std::numeric_limits<count>::max())
        return std::nullopt;
    return best;
}

std::vector<std::optional<std::int32_t>> eccentricities(const Graph &g) {
    std::vector<std::optional<std::int32_t>> ecc(g.node_count());
    for (node s = 0; s < g.node_count(); ++s) {
        auto row = bfs_distances(g, s);
        std::int32_t best = 0;
        bool finite = true;
        for (auto d : row) {
            if (d == DistanceMatrix::unreachable) {
                finite = false;
                break;
            }
            best = std::max(best, d);
        }
        if (finite)
            ecc[s] = best;
    }
    return ecc;
}

std::optional<std::int32_t> diameter(const Graph &g) {
    std::int32_t best = 0;
    for (const auto &e : eccentricities(g)) {
        if (!e)
            return std::nullopt;
        best = std::max(best, *e);
    }
    return best;
}

Components connected_components(const Graph &g) {
    const count n = g.node_count();
    Components c;
    c.label.assign(n, std::numeric_limits<std::size_t>::max());
    std::vector<node> stack;
    for (node s = 0; s < n; ++s) {
        if (c.label[s] != std::numeric_limits<std::size_t>::max())
            continue;
        c.label[s] = c.count;
        stack.push_back(s);
        while (!stack.empty()) {
            node u = stack.back();
            stack.pop_back();
            for (const Arc &a : g.arcs(u)) {
                if (c.label[a.target] == std::numeric_limits<std::size_t>::max()) {
                    c.label[a.target] = c.count;
                    stack.push_back(a.target);
                }
            }
        }
        ++c.count;
    }
    return c;
}

Components strongly_connected_components(const Graph &g) {
    if (!g.directed())
        return connected_components(g);
    // Iterative Tarjan.
    const count n = g.node_count();
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> index(n, none), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<node> stack;
    Components c;
    c.label.assign(n, none);
    std::size_t next_index = 0;
    std::vector<std::pair<node, std::size_t>> call;
    for (node root = 0; root < n; ++root) {
        if (index[root] != none)
            continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto &[u, pos] = call.back();
            if (pos == 0 && index[u] == none) {
                index[u] = low[u] = next_index++;
                stack.push_back(u);
                on_stack[u] = 1;
            }
            auto arcs = g.out_arcs(u);
            if (pos < arcs.size()) {
                node w = arcs[pos++].target;
                if (index[w] == none) {
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[u] = std::min(low[u], index[w]);
                }
                continue;
            }
            if (low[u] == index[u]) {
                node w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    c.label[w] = c.count;
                } while (w != u);
                ++c.count;
            }
            node finished = u;
            call.pop_back();
            if (!call.empty()) {
                node parent = call.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
        }
    }
    return c;
}

bool is_connected(const Graph &g) {
    if (g.node_count() == 0)
        return true;
    return connected_components(g).count == 1;
}

bool is_tree(const Graph &g) {
    return !g.directed() && g.node_count() > 0 && g.edge_count() + 1 == g.node_count() &&
           is_connected(g);
}

std::optional<Bipartition> bipartition(const Graph &g) {
    const count n = g.node_count();
    std::vector<int> colour(n, -1);
    for (node s = 0; s < n; ++s) {
        if (colour[s] >= 0)
            continue;
        colour[s] = 0;
        std::queue<node> q;
        q.push(s);
        while (!q.empty()) {
            node u = q.front();
            q.pop();
            for (const Arc &a : g.arcs(u)) {
                if (colour[a.target] < 0) {
                    colour[a.target] = 1 - colour[u];
                    q.push(a.target);
                } else if (colour[a.target] == colour[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (node u = 0; u < n; ++u)
        (colour[u] == 0 ? parts.first : parts.second).push_back(u);
    if (parts.first.size() > parts.second.size())
        std::swap(parts.first, parts.second);
    return parts;
}

bool is_bipartite(const Graph &g) { return bipartition(g).has_value(); }

Eigen::MatrixXd biadjacency_matrix(const Graph &g, const Bipartition &parts) {
    const Eigen::MatrixXd a = adjacency_matrix(g);
    Eigen::MatrixXd b(static_cast<Eigen::Index>(parts.first.size()),
                      static_cast<Eigen::Index>(parts.second.size()));
    for (std::size_t i = 0; i < parts.first.size(); ++i)
        for (std::size_t j = 0; j < parts.second.size(); ++j)
            b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                a(static_cast<Eigen::Index>(parts.first[i]), static_cast<Eigen::Index>(parts.second[j]));
    return b;
}

Matching maximum_matching_bipartite(const Graph &g) {
    auto parts = bipartition(g);
    if (!parts)
        fail(ErrorCode::NotBipartite, "maximum matching is implemented for bipartite graphs");
    const count n = g.node_count();
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<char> left(n, 0);
    for (node u : parts->first)
        left[u] = 1;
    std::vector<std::size_t> mate(n, none), layer(n, 0);
    const auto &lhs = parts->first;

    auto bfs = [&]() {
        std::queue<node> q;
        bool found = false;
        for (node u : lhs) {
            if (mate[u] == none) {
                layer[u] = 0;
                q.push(u);
            } else {
                layer[u] = none;
            }
        }
        while (!q.empty()) {
            node u = q.front();
            q.pop();
            for (const Arc &a : g.arcs(u)) {
                std::size_t w = mate[a.target];
                if (w == none) {
                    found = true;
                } else if (layer[w] == none) {
                    layer[w] = layer[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    };

    // Recursion depth is bounded by the augmenting path length.
    auto dfs = [&](auto &&self, node u) -> bool {
        for (const Arc &a : g.arcs(u)) {
            std::size_t w = mate[a.target];
            if (w == none || (layer[w] == layer[u] + 1 && self(self, w))) {
                mate[u] = a.target;
                mate[a.target] = u;
                return true;
            }
        }
        layer[u] = none;
        return false;
    };

    Matching result;
    while (bfs())
        for (node u : lhs)
            if (mate[u] == none && dfs(dfs, u))
                ++result.size;
    for (node u : lhs)
        if (mate[u] != none)
            result.edges.emplace_back(std::min<node>(u, mate[u]), std::max<node>(u, mate[u]));
    std::sort(result.edges.begin(), result.edges.end());
    (void)left;
    return result;
}

} // namespace graphphys
