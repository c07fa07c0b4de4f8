#include <graphphys/tight_binding.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <string>

#include <graphphys/error.hpp>

namespace graphphys {

HuckelResult huckel_spectrum(const Graph &g, double alpha, double beta,
                             std::optional<std::size_t> electrons) {
    if (g.directed())
        fail(ErrorCode::DirectedUnsupported, "Huckel model needs an undirected graph");
    const std::size_t n = g.node_count();
    const std::size_t ne = electrons.value_or(n);
    if (ne > 2 * n)
        fail(ErrorCode::InvalidArgument, "more electrons than spin orbitals");
    const Spectrum s = eig_symmetric(adjacency_matrix(g));
    HuckelResult r;
    r.alpha = alpha;
    r.beta = beta;
    for (Eigen::Index j = 0; j < s.values.size(); ++j)
        r.orbital_energies.push_back(alpha + beta * s.values[j]);
    std::sort(r.orbital_energies.begin(), r.orbital_energies.end());
    std::size_t left = ne;
    for (double e : r.orbital_energies) {
        int occ = static_cast<int>(std::min<std::size_t>(2, left));
        left -= static_cast<std::size_t>(occ);
        r.occupations.push_back(occ);
        r.total_energy += occ * e;
    }
    return r;
}

double total_pi_energy(const Eigen::VectorXd &descending, std::size_t n) {
    if (static_cast<std::size_t>(descending.size()) != n)
        fail(ErrorCode::InvalidArgument, "eigenvalue count differs from n");
    double e = 0.0;
    for (std::size_t j = 0; j < n / 2; ++j)
        e += 2.0 * descending[static_cast<Eigen::Index>(j)];
    if (n % 2 == 1)
        e += descending[static_cast<Eigen::Index>(n / 2)];
    return e;
}

double total_pi_energy(const Graph &g) {
    return total_pi_energy(eig_symmetric(adjacency_matrix(g)).values, g.node_count());
}

double graph_energy(const Eigen::VectorXd &values) { return values.cwiseAbs().sum(); }

EnergyBounds energy_bounds(const Graph &g) {
    const double n = static_cast<double>(g.node_count());
    const double m = static_cast<double>(g.edge_count());
    EnergyBounds b;
    if (g.node_count() == 0)
        return b;
    const double det = std::abs(adjacency_matrix(g).determinant());
    b.lower = std::sqrt(2.0 * m + n * (n - 1.0) * std::pow(det, 2.0 / n));
    b.upper = std::sqrt(2.0 * m * n);
    if (is_bipartite(g) && m > 0) {
        const double q = 2.0 * m - 8.0 * m * m / (n * n);
        b.bipartite_upper = 4.0 * m / n + std::sqrt(std::max(0.0, (n - 2.0) * q));
    }
    return b;
}

std::vector<double> closed_form_spectrum(SpectrumFamily family, std::size_t size) {
    if (size == 0)
        fail(ErrorCode::InvalidArgument, "family size must be positive");
    std::vector<double> v;
    const double pi = std::numbers::pi;
    const double n = static_cast<double>(size);
    switch (family) {
    case SpectrumFamily::Path:
        for (std::size_t j = 1; j <= size; ++j)
            v.push_back(2.0 * std::cos(pi * static_cast<double>(j) / (n + 1.0)));
        break;
    case SpectrumFamily::Cycle:
        if (size < 3)
            fail(ErrorCode::InvalidArgument, "cycle needs at least 3 nodes");
        for (std::size_t j = 1; j <= size; ++j)
            v.push_back(2.0 * std::cos(2.0 * pi * static_cast<double>(j) / n));
        break;
    case SpectrumFamily::Polyacene:
        v.push_back(1.0);
        v.push_back(-1.0);
        for (std::size_t k = 1; k <= size; ++k) {
            const double r = std::sqrt(9.0 + 8.0 * std::cos(static_cast<double>(k) * pi / (n + 1.0)));
            for (double outer : {1.0, -1.0})
                for (double inner : {1.0, -1.0})
                    v.push_back(outer * 0.5 * (1.0 + inner * r));
        }
        break;
    }
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

Graph benzenoid_graph(const std::vector<std::pair<int, int>> &cells) {
    std::map<std::pair<int, int>, node> index;
    std::set<std::pair<node, node>> edges;
    auto id = [&](int i, int j) {
        auto [it, inserted] = index.try_emplace({i, j}, index.size());
        return it->second;
    };
    for (auto [x, y] : cells) {
        if ((x + y) % 2 != 0)
            fail(ErrorCode::InvalidArgument, "hexagon cell needs x + y even");
        for (int j = y; j <= y + 1; ++j)
            for (int i = x; i < x + 2; ++i) {
                node a = id(i, j), b = id(i + 1, j);
                edges.insert(std::minmax(a, b));
            }
        for (int i : {x, x + 2}) {
            node a = id(i, y), b = id(i, y + 1);
            edges.insert(std::minmax(a, b));
        }
    }
    std::vector<Edge> list;
    for (auto [a, b] : edges)
        list.push_back({a, b});
    return build_graph(index.size(), std::move(list));
}

Graph polyacene_graph(std::size_t hexagons) {
    std::vector<std::pair<int, int>> cells;
    for (std::size_t k = 0; k < hexagons; ++k)
        cells.emplace_back(static_cast<int>(2 * k), 0);
    return benzenoid_graph(cells);
}

Graph pyrene_graph() { return benzenoid_graph({{0, 0}, {2, 0}, {1, 1}, {3, 1}}); }

Graph triangulene_graph() {
    return benzenoid_graph({{0, 0}, {2, 0}, {4, 0}, {1, 1}, {3, 1}, {2, 2}});
}

std::size_t nullity(const Graph &g) {
    if (g.directed())
        fail(ErrorCode::DirectedUnsupported, "nullity of a directed graph");
    if (g.node_count() == 0)
        return 0;
    return eig_symmetric(adjacency_matrix(g)).multiplicity_of(0.0);
}

bool has_cycle_length_multiple_of_four(const Graph &g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<node>> nb(n);
    for (const Edge &e : g.edges())
        if (e.source != e.target) {
            nb[e.source].push_back(e.target);
            nb[e.target].push_back(e.source);
        }
    constexpr std::size_t budget = 20'000'000;
    std::size_t work = 0;
    std::vector<char> on_path(n, 0);
    bool found = false;
    // Simple cycles whose smallest node is `start`.
    auto dfs = [&](auto &&self, node start, node u, std::size_t length) -> void {
        if (found)
            return;
        if (++work > budget)
            fail(ErrorCode::TooLarge, "cycle enumeration exceeded its work budget");
        for (node w : nb[u]) {
            if (w == start && length >= 3) {
                if (length % 4 == 0) {
                    found = true;
                    return;
                }
            } else if (w > start && !on_path[w]) {
                on_path[w] = 1;
                self(self, start, w, length + 1);
                on_path[w] = 0;
            }
        }
    };
    for (node s = 0; s < n && !found; ++s) {
        on_path[s] = 1;
        dfs(dfs, s, s, 1);
        on_path[s] = 0;
    }
    return found;
}

std::size_t nullity_via_matching(const Graph &g, bool benzenoid) {
    if (g.directed())
        fail(ErrorCode::DirectedUnsupported, "nullity of a directed graph");
    if (!is_bipartite(g))
        fail(ErrorCode::NotBipartite, "matching formula needs a bipartite graph");
    if (!is_tree(g) && !benzenoid && has_cycle_length_multiple_of_four(g))
        fail(ErrorCode::FormulaNotApplicable, "graph has a cycle of length divisible by 4");
    const Matching m = maximum_matching_bipartite(g);
    return g.node_count() - 2 * m.size;
}

std::size_t nullity_via_rank(const Graph &g) {
    auto parts = bipartition(g);
    if (!parts)
        fail(ErrorCode::NotBipartite, "rank formula needs a bipartite graph");
    const Eigen::MatrixXd b = biadjacency_matrix(g, *parts);
    std::size_t rank = 0;
    if (b.size() > 0) {
        Eigen::FullPivLU<Eigen::MatrixXd> lu(b);
        lu.setThreshold(1e-10);
        rank = static_cast<std::size_t>(lu.rank());
    }
    return g.node_count() - 2 * rank;
}

long path_nullity_bound(std::size_t n, std::int64_t distance) {
    const long nn = static_cast<long>(n);
    return distance % 2 == 0 ? nn - distance : nn - distance - 1;
}

long girth_nullity_bound(const Graph &g, bool printed) {
    const auto gr = girth(g);
    if (!gr)
        fail(ErrorCode::Acyclic, "girth bound needs at least one cycle");
    const long n = static_cast<long>(g.node_count());
    const long k = static_cast<long>(*gr);
    const bool mod4 = k % 4 == 0;
    if (printed)
        return mod4 ? n - 2 * k + 2 : n - 2 * k;
    return mod4 ? n - k + 2 : n - k;
}

NullityBounds nullity_bounds(const Graph &g) {
    NullityBounds b;
    const std::size_t n = g.node_count();
    if (girth(g)) {
        b.girth_printed = girth_nullity_bound(g, true);
        b.girth = girth_nullity_bound(g, false);
    }
    const DistanceMatrix d = shortest_path_distances(g);
    b.path = static_cast<long>(n);
    for (node p = 0; p < n; ++p)
        for (node q = 0; q < n; ++q)
            if (d.reachable(p, q))
                b.path = std::min(b.path, path_nullity_bound(n, d(p, q)));
    if (auto diam = diameter(g))
        b.diameter = path_nullity_bound(n, *diam);
    return b;
}

double lieb_total_spin(std::size_t first, std::size_t second) {
    const double a = static_cast<double>(first), b = static_cast<double>(second);
    return std::abs(a - b) / 2.0;
}

double lieb_total_spin(const Graph &g) {
    auto parts = bipartition(g);
    if (!parts)
        fail(ErrorCode::NotBipartite, "Lieb's theorem needs a bipartite graph");
    if (g.node_count() % 2 != 0)
        fail(ErrorCode::OddNodeCount, "Lieb's theorem needs an even number of sites");
    if (!is_connected(g))
        fail(ErrorCode::Disconnected, "Lieb's theorem needs a connected graph");
    return lieb_total_spin(parts->first.size(), parts->second.size());
}

} // namespace graphphys
