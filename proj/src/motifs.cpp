#include <graphphys/motifs.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_set>

#include <graphphys/ensembles.hpp>
#include <graphphys/error.hpp>

namespace graphphys {

namespace {

using TriadCode = unsigned;

/// Bit index of the arc i -> j among three positions.
constexpr unsigned arc_bit(unsigned i, unsigned j) { return i * 2 + (j > i ? j - 1 : j); }

TriadCode canonical(TriadCode code) {
    static constexpr std::array<std::array<unsigned, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    TriadCode best = ~0u;
    for (const auto &p : perms) {
        TriadCode c = 0;
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned j = 0; j < 3; ++j)
                if (i != j && (code >> arc_bit(i, j) & 1u))
                    c |= 1u << arc_bit(p[i], p[j]);
        best = std::min(best, c);
    }
    return best;
}

struct TriadClass {
    const char *name;
    std::vector<std::pair<unsigned, unsigned>> arcs;
};

const std::vector<TriadClass> &directed_classes() {
    static const std::vector<TriadClass> classes{
        {"fan_out", {{1, 0}, {1, 2}}},
        {"fan_in", {{0, 1}, {2, 1}}},
        {"three_chain", {{0, 1}, {1, 2}}},
        {"mutual_out", {{0, 1}, {1, 0}, {1, 2}}},
        {"mutual_in", {{0, 1}, {1, 0}, {2, 1}}},
        {"double_mutual", {{0, 1}, {1, 0}, {1, 2}, {2, 1}}},
        {"feedforward_loop", {{0, 1}, {0, 2}, {1, 2}}},
        {"feedback_loop", {{0, 1}, {1, 2}, {2, 0}}},
        {"mutual_common_source", {{0, 1}, {1, 0}, {2, 0}, {2, 1}}},
        {"mutual_common_target", {{0, 1}, {1, 0}, {0, 2}, {1, 2}}},
        {"mutual_cycle", {{0, 1}, {1, 0}, {1, 2}, {2, 0}}},
        {"two_mutual_arc", {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}}},
        {"complete_mutual", {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}}},
    };
    return classes;
}

/// Class index for every canonical code of a connected triad.
const std::array<int, 64> &class_table() {
    static const std::array<int, 64> table = [] {
        std::array<int, 64> t{};
        t.fill(-1);
        const auto &classes = directed_classes();
        for (std::size_t k = 0; k < classes.size(); ++k) {
            TriadCode c = 0;
            for (auto [i, j] : classes[k].arcs)
                c |= 1u << arc_bit(i, j);
            t[canonical(c)] = static_cast<int>(k);
        }
        return t;
    }();
    return table;
}

struct Adjacency {
    std::vector<std::vector<node>> undirected;
    std::vector<std::vector<node>> out;

    bool linked(node u, node v) const { return std::binary_search(undirected[u].begin(), undirected[u].end(), v); }
    bool arc(node u, node v) const { return std::binary_search(out[u].begin(), out[u].end(), v); }
};

Adjacency build_adjacency(const Graph &g) {
    Adjacency a;
    a.undirected.resize(g.node_count());
    a.out.resize(g.node_count());
    for (const Edge &e : g.edges()) {
        if (e.source == e.target)
            continue;
        a.undirected[e.source].push_back(e.target);
        a.undirected[e.target].push_back(e.source);
        a.out[e.source].push_back(e.target);
        if (!g.directed())
            a.out[e.target].push_back(e.source);
    }
    for (auto *lists : {&a.undirected, &a.out})
        for (auto &l : *lists) {
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
        }
    return a;
}

Graph directed_erdos_renyi(count n, double p, Rng &rng) {
    std::vector<Edge> edges;
    for (node u = 0; u < n; ++u)
        for (node v = 0; v < n; ++v)
            if (u != v && rng.bernoulli(p))
                edges.push_back({u, v});
    return Graph(n, std::move(edges), true, true);
}

} // namespace

count MotifCensus::operator[](const std::string &name) const {
    auto it = counts.find(name);
    if (it == counts.end())
        fail(ErrorCode::InvalidArgument, "unknown motif '" + name + "'");
    return it->second;
}

count MotifCensus::total() const {
    count t = 0;
    for (const auto &[name, c] : counts)
        t += c;
    return t;
}

std::vector<std::string> motif_names(bool directed) {
    if (!directed)
        return {"path", "triangle"};
    std::vector<std::string> names;
    for (const TriadClass &c : directed_classes())
        names.emplace_back(c.name);
    return names;
}

MotifCensus motif_census(const Graph &g) {
    MotifCensus census;
    census.directed = g.directed();
    for (const std::string &name : motif_names(g.directed()))
        census.counts[name] = 0;
    const Adjacency adj = build_adjacency(g);
    const auto &table = class_table();
    const auto &classes = directed_classes();
    std::vector<count> tally(g.directed() ? classes.size() : 2, 0);
    for (node v = 0; v < g.node_count(); ++v) {
        const auto &nb = adj.undirected[v];
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const node u = nb[i], w = nb[j];
                const bool closed = adj.linked(u, w);
                // A triangle is seen from all three corners; keep the smallest.
                if (closed && (v > u || v > w))
                    continue;
                if (!g.directed()) {
                    ++tally[closed ? 1 : 0];
                    continue;
                }
                const std::array<node, 3> t{v, u, w};
                TriadCode code = 0;
                for (unsigned a = 0; a < 3; ++a)
                    for (unsigned b = 0; b < 3; ++b)
                        if (a != b && adj.arc(t[a], t[b]))
                            code |= 1u << arc_bit(a, b);
                ++tally[static_cast<std::size_t>(table[canonical(code)])];
            }
    }
    const auto names = motif_names(g.directed());
    for (std::size_t k = 0; k < names.size(); ++k)
        census.counts[names[k]] = tally[k];
    return census;
}

Graph degree_preserving_rewire(const Graph &g, std::size_t attempts, Seed seed) {
    if (!g.simple())
        fail(ErrorCode::InvalidArgument, "degree-preserving rewiring needs a simple graph");
    const count n = g.node_count();
    std::vector<std::pair<node, node>> edges;
    std::unordered_set<std::uint64_t> present;
    auto key = [&](node a, node b) {
        if (!g.directed() && a > b)
            std::swap(a, b);
        return static_cast<std::uint64_t>(a) * n + b;
    };
    for (const Edge &e : g.edges()) {
        edges.emplace_back(e.source, e.target);
        present.insert(key(e.source, e.target));
    }
    Rng rng(seed);
    if (edges.size() >= 2) {
        for (std::size_t t = 0; t < attempts; ++t) {
            const std::size_t i = rng.below(edges.size());
            const std::size_t j = rng.below(edges.size());
            if (i == j)
                continue;
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (!g.directed() && rng.bernoulli(0.5))
                std::swap(c, d);
            if (a == d || c == b || present.contains(key(a, d)) || present.contains(key(c, b)))
                continue;
            present.erase(key(a, b));
            present.erase(key(c, d));
            present.insert(key(a, d));
            present.insert(key(c, b));
            edges[i] = {a, d};
            edges[j] = {c, b};
        }
    }
    std::vector<Edge> out;
    for (auto [a, b] : edges)
        out.push_back({a, b});
    return Graph(n, std::move(out), g.directed(), true);
}

double motif_zscore_value(double real, double mean, double sigma) {
    if (!(sigma > 0.0))
        fail(ErrorCode::DegenerateEnsemble, "ensemble standard deviation is zero");
    return (real - mean) / sigma;
}

MotifReport motif_zscore(const Graph &g, const std::string &motif, std::size_t ensemble_size, Seed seed,
                         NullModel model) {
    if (ensemble_size < 20)
        fail(ErrorCode::InvalidArgument, "ensemble size must be at least 20");
    const MotifCensus real = motif_census(g);
    MotifReport r;
    r.motif = motif;
    r.real = static_cast<double>(real[motif]);
    r.ensemble_size = ensemble_size;
    const count n = g.node_count();
    const double pairs = static_cast<double>(n) * static_cast<double>(n > 0 ? n - 1 : 0) / (g.directed() ? 1.0 : 2.0);
    const double p = pairs > 0 ? static_cast<double>(g.edge_count()) / pairs : 0.0;
    std::vector<double> samples;
    for (std::size_t i = 0; i < ensemble_size; ++i) {
        const Seed s = replica_seed(seed, i);
        Graph h;
        if (model == NullModel::DegreePreserving) {
            h = degree_preserving_rewire(g, 100 * g.edges().size(), s);
        } else if (g.directed()) {
            Rng rng(s);
            h = directed_erdos_renyi(n, p, rng);
        } else {
            h = erdos_renyi(n, p, s);
        }
        samples.push_back(static_cast<double>(motif_census(h)[motif]));
    }
    double sum = 0.0;
    for (double x : samples)
        sum += x;
    r.mean = sum / static_cast<double>(ensemble_size);
    double ss = 0.0;
    for (double x : samples)
        ss += (x - r.mean) * (x - r.mean);
    r.stddev = std::sqrt(ss / static_cast<double>(ensemble_size - 1));
    r.z = motif_zscore_value(r.real, r.mean, r.stddev);
    return r;
}

} // namespace graphphys
