#include <graphphys/tutte.hpp>

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>

#include <graphphys/error.hpp>

namespace graphphys {

Multigraph to_multigraph(const Graph &g) {
    if (g.directed())
        fail(ErrorCode::DirectedUnsupported, "Tutte polynomial of a directed graph");
    Multigraph mg;
    mg.n = g.node_count();
    for (const Edge &e : g.edges())
        for (count k = 0; k < e.multiplicity; ++k)
            mg.edges.emplace_back(e.source, e.target);
    return mg;
}

Multigraph delete_edge(const Multigraph &g, std::size_t e) {
    if (e >= g.edges.size())
        fail(ErrorCode::NoSuchEdge, "edge index " + std::to_string(e));
    Multigraph r = g;
    r.edges.erase(r.edges.begin() + static_cast<std::ptrdiff_t>(e));
    return r;
}

Multigraph contract_edge(const Multigraph &g, std::size_t e) {
    if (e >= g.edges.size())
        fail(ErrorCode::NoSuchEdge, "edge index " + std::to_string(e));
    auto [a, b] = g.edges[e];
    if (a == b)
        fail(ErrorCode::InvalidArgument, "contracting a loop is not supported");
    const node keep = std::min(a, b), gone = std::max(a, b);
    auto map = [&](node u) {
        if (u == gone)
            return keep;
        return u > gone ? u - 1 : u;
    };
    Multigraph r;
    r.n = g.n - 1;
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (i != e)
            r.edges.emplace_back(map(g.edges[i].first), map(g.edges[i].second));
    return r;
}

std::size_t component_count(const Multigraph &g) {
    std::vector<std::size_t> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t u) {
        while (parent[u] != u)
            u = parent[u] = parent[parent[u]];
        return u;
    };
    std::size_t c = g.n;
    for (auto [u, v] : g.edges) {
        auto a = find(u), b = find(v);
        if (a != b) {
            parent[a] = b;
            --c;
        }
    }
    return c;
}

namespace {

/// Parallel class of k edges between u < v.
struct Bundle {
    std::size_t u, v;
    int k;
};

/// Loopless multigraph with parallel edges grouped.
struct Core {
    std::size_t n = 0;
    std::vector<Bundle> bundles;
};

/// 1 + y + ... + y^{k-1}
BivariatePolynomial y_series(int k) {
    BivariatePolynomial p;
    for (int j = 0; j < k; ++j)
        p += BivariatePolynomial::monomial(0, static_cast<unsigned>(j));
    return p;
}

Core normalise(std::size_t n, const std::vector<Bundle> &raw) {
    std::map<std::pair<std::size_t, std::size_t>, int> merged;
    for (const Bundle &b : raw)
        merged[std::minmax(b.u, b.v)] += b.k;
    Core c;
    c.n = n;
    for (const auto &[key, k] : merged)
        c.bundles.push_back({key.first, key.second, k});
    return c;
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t u) {
        while (parent_[u] != u)
            u = parent_[u] = parent_[parent_[u]];
        return u;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

/// Bridges of the underlying simple graph (one edge per bundle).
std::vector<char> bridge_flags(const Core &c) {
    constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(c.n);
    for (std::size_t i = 0; i < c.bundles.size(); ++i) {
        adj[c.bundles[i].u].emplace_back(c.bundles[i].v, i);
        adj[c.bundles[i].v].emplace_back(c.bundles[i].u, i);
    }
    std::vector<std::size_t> disc(c.n, unseen), low(c.n, 0);
    std::vector<char> bridge(c.bundles.size(), 0);
    std::size_t timer = 0;
    auto dfs = [&](auto &&self, std::size_t u, std::size_t via) -> void {
        disc[u] = low[u] = timer++;
        for (auto [w, id] : adj[u]) {
            if (id == via)
                continue;
            if (disc[w] == unseen) {
                self(self, w, id);
                low[u] = std::min(low[u], low[w]);
                if (low[w] > disc[u])
                    bridge[id] = 1;
            } else {
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };
    for (std::size_t u = 0; u < c.n; ++u)
        if (disc[u] == unseen)
            dfs(dfs, u, unseen);
    return bridge;
}

class TutteSolver {
public:
    /// Any loopless core: bridges are factored out, then each component solved.
    BivariatePolynomial solve_reduced(const Core &c) {
        BivariatePolynomial factor = BivariatePolynomial::constant(1);
        const auto bridge = bridge_flags(c);
        UnionFind merged(c.n);
        std::vector<Bundle> rest;
        for (std::size_t i = 0; i < c.bundles.size(); ++i) {
            const Bundle &b = c.bundles[i];
            if (bridge[i]) {
                // k parallel edges forming a bridge contribute x + y + ... + y^{k-1}.
                BivariatePolynomial f = BivariatePolynomial::monomial(1, 0);
                if (b.k > 1)
                    f += y_series(b.k) + BivariatePolynomial::constant(-1);
                factor = factor * f;
                merged.unite(b.u, b.v);
            } else {
                rest.push_back(b);
            }
        }
        if (rest.empty())
            return factor;

        UnionFind components(c.n);
        for (Bundle &b : rest) {
            b.u = merged.find(b.u);
            b.v = merged.find(b.v);
            components.unite(b.u, b.v);
        }
        std::map<std::size_t, std::vector<Bundle>> groups;
        for (const Bundle &b : rest)
            groups[components.find(b.u)].push_back(b);
        for (auto &[root, list] : groups) {
            std::map<std::size_t, std::size_t> local;
            for (const Bundle &b : list) {
                local.try_emplace(b.u, local.size());
                local.try_emplace(b.v, local.size());
            }
            for (Bundle &b : list) {
                b.u = local[b.u];
                b.v = local[b.v];
            }
            factor = factor * solve(normalise(local.size(), list));
        }
        return factor;
    }

private:
    /// Connected, bridgeless, loopless core with at least one bundle.
    BivariatePolynomial solve(const Core &c) {
        const std::string key = canonical_key(c);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        std::vector<std::size_t> degree(c.n, 0);
        for (const Bundle &b : c.bundles) {
            ++degree[b.u];
            ++degree[b.v];
        }
        std::size_t pick = 0;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < c.bundles.size(); ++i) {
            const std::size_t score = std::min(degree[c.bundles[i].u], degree[c.bundles[i].v]);
            if (score < best) {
                best = score;
                pick = i;
            }
        }
        const Bundle e = c.bundles[pick];
        auto map = [&](std::size_t u) {
            if (u == e.v)
                return e.u;
            return u > e.v ? u - 1 : u;
        };
        std::vector<Bundle> deleted, contracted;
        for (std::size_t i = 0; i < c.bundles.size(); ++i) {
            if (i == pick)
                continue;
            const Bundle &b = c.bundles[i];
            deleted.push_back(b);
            contracted.push_back({map(b.u), map(b.v), b.k});
        }

        // Delete the whole bundle, or contract one edge and turn the other k-1 into loops.
        BivariatePolynomial r = solve_reduced(normalise(c.n, deleted));
        r += y_series(e.k) * solve_reduced(normalise(c.n - 1, contracted));
        memo_.emplace(key, r);
        return r;
    }

    /// Encoding of the core after a degree-refinement relabelling.
    static std::string canonical_key(const Core &c) {
        const std::size_t n = c.n;
        std::vector<std::vector<std::pair<std::size_t, int>>> adj(n);
        for (const Bundle &b : c.bundles) {
            adj[b.u].emplace_back(b.v, b.k);
            adj[b.v].emplace_back(b.u, b.k);
        }
        std::vector<long> colour(n, 0);
        for (std::size_t u = 0; u < n; ++u)
            for (auto [w, k] : adj[u])
                colour[u] += k;
        for (int round = 0; round < 3; ++round) {
            std::vector<std::vector<long>> sig(n);
            for (std::size_t u = 0; u < n; ++u) {
                std::vector<long> s;
                for (auto [w, k] : adj[u])
                    s.push_back(colour[w] * 64 + k);
                std::sort(s.begin(), s.end());
                s.insert(s.begin(), colour[u]);
                sig[u] = std::move(s);
            }
            std::vector<std::vector<long>> sorted = sig;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            for (std::size_t u = 0; u < n; ++u)
                colour[u] = std::lower_bound(sorted.begin(), sorted.end(), sig[u]) - sorted.begin();
        }
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return colour[a] < colour[b]; });
        std::vector<std::size_t> label(n);
        for (std::size_t i = 0; i < n; ++i)
            label[order[i]] = i;
        std::vector<std::array<std::size_t, 3>> enc;
        for (const Bundle &b : c.bundles) {
            auto [lo, hi] = std::minmax(label[b.u], label[b.v]);
            enc.push_back({lo, hi, static_cast<std::size_t>(b.k)});
        }
        std::sort(enc.begin(), enc.end());
        std::string key = std::to_string(n) + ":";
        for (const auto &t : enc)
            key += std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ";";
        return key;
    }

    std::unordered_map<std::string, BivariatePolynomial> memo_;
};

Coefficient ipow(Coefficient b, std::size_t e) {
    Coefficient r = 1;
    for (std::size_t i = 0; i < e; ++i)
        r = checked_mul(r, b);
    return r;
}

} // namespace

BivariatePolynomial tutte_polynomial(const Multigraph &g) {
    std::vector<Bundle> raw;
    unsigned loops = 0;
    for (auto [u, v] : g.edges) {
        if (u >= g.n || v >= g.n)
            fail(ErrorCode::OutOfRange, "edge endpoint outside the node range");
        if (u == v)
            ++loops;
        else
            raw.push_back({u, v, 1});
    }
    TutteSolver solver;
    BivariatePolynomial t = solver.solve_reduced(normalise(g.n, raw));
    return t * BivariatePolynomial::monomial(0, loops);
}

BivariatePolynomial tutte_polynomial(const Graph &g) { return tutte_polynomial(to_multigraph(g)); }

TutteEvaluations tutte_evaluations(const BivariatePolynomial &t) {
    return {t.evaluate(Coefficient{1}, Coefficient{1}), t.evaluate(Coefficient{2}, Coefficient{1}),
            t.evaluate(Coefficient{1}, Coefficient{2}), t.evaluate(Coefficient{2}, Coefficient{2})};
}

UnivariatePolynomial chromatic_polynomial(const Multigraph &g) {
    const BivariatePolynomial t = tutte_polynomial(g);
    const std::size_t k = component_count(g);
    // T(1 - q, 0) as a polynomial in q.
    const UnivariatePolynomial one_minus_q(std::vector<Coefficient>{1, -1});
    UnivariatePolynomial r;
    for (const auto &[e, c] : t.terms())
        if (e.second == 0)
            r += UnivariatePolynomial::constant(c) * one_minus_q.pow(e.first);
    const Coefficient sign = (g.n - k) % 2 == 0 ? 1 : -1;
    return UnivariatePolynomial::monomial(k, sign) * r;
}

UnivariatePolynomial chromatic_polynomial(const Graph &g) { return chromatic_polynomial(to_multigraph(g)); }

double PottsPolynomial::evaluate(double K) const {
    return std::exp(static_cast<double>(shift) * K) * in_w.evaluate(std::exp(K));
}

std::string PottsPolynomial::to_string() const {
    std::ostringstream out;
    bool first = true;
    const auto &c = in_w.coefficients();
    for (std::size_t j = c.size(); j-- > 0;) {
        if (c[j] == 0)
            continue;
        const long e = static_cast<long>(j) + shift;
        const Coefficient mag = c[j] < 0 ? -c[j] : c[j];
        out << (first ? (c[j] < 0 ? "-" : "") : (c[j] < 0 ? " - " : " + "));
        first = false;
        if (e == 0) {
            out << mag;
            continue;
        }
        if (mag != 1)
            out << mag << '*';
        out << "exp(";
        if (e == -1)
            out << '-';
        else if (e != 1)
            out << e;
        out << "K)";
    }
    return first ? "0" : out.str();
}

PottsPolynomial potts_polynomial(const Multigraph &g, unsigned q, PottsHamiltonian h) {
    if (q == 0)
        fail(ErrorCode::InvalidArgument, "Potts model needs q >= 1");
    const BivariatePolynomial t = tutte_polynomial(g);
    const std::size_t k = component_count(g);
    const std::size_t rank = g.n - k;
    const auto qc = static_cast<Coefficient>(q);
    const UnivariatePolynomial q_plus_v(std::vector<Coefficient>{qc, 1});
    const UnivariatePolynomial one_plus_v(std::vector<Coefficient>{1, 1});
    // q^k v^{n-k} T((q+v)/v, 1+v) with the v^{-i} cleared term by term.
    UnivariatePolynomial in_v;
    for (const auto &[e, c] : t.terms()) {
        if (e.first > rank)
            fail(ErrorCode::InvalidArgument, "Tutte x-degree exceeds the graph rank");
        in_v += UnivariatePolynomial::monomial(rank - e.first, c) * q_plus_v.pow(e.first) *
                one_plus_v.pow(e.second);
    }
    in_v = UnivariatePolynomial::constant(ipow(qc, k)) * in_v;
    PottsPolynomial p;
    p.in_v = in_v;
    p.in_w = in_v.substitute_linear(1, -1);
    p.shift = h == PottsHamiltonian::H2 ? -static_cast<long>(g.edges.size()) : 0;
    return p;
}

double potts_partition(const Graph &g, unsigned q, double K, PottsHamiltonian h) {
    return potts_polynomial(to_multigraph(g), q, h).evaluate(K);
}

namespace {

double configuration_weight(const Multigraph &mg, const std::vector<unsigned> &spins, double K,
                            PottsHamiltonian h) {
    double energy_k = 0.0; // -βH
    for (auto [u, v] : mg.edges) {
        const bool same = spins[u] == spins[v];
        if (h == PottsHamiltonian::H1)
            energy_k += same ? K : 0.0;
        else
            energy_k -= same ? 0.0 : K;
    }
    return std::exp(energy_k);
}

} // namespace

double enumerate_states(const Graph &g, unsigned q, double K, PottsHamiltonian h) {
    if (q == 0)
        fail(ErrorCode::InvalidArgument, "Potts model needs q >= 1");
    const Multigraph mg = to_multigraph(g);
    double states = std::pow(static_cast<double>(q), static_cast<double>(mg.n));
    if (states > 1e7)
        fail(ErrorCode::TooLarge, "q^n exceeds 10^7 configurations");
    std::vector<unsigned> spins(mg.n, 0);
    double z = 0.0;
    while (true) {
        z += configuration_weight(mg, spins, K, h);
        std::size_t i = 0;
        while (i < mg.n && ++spins[i] == q)
            spins[i++] = 0;
        if (i == mg.n)
            break;
    }
    return z;
}

double state_probability(const Graph &g, unsigned q, double K, PottsHamiltonian h,
                         const std::vector<unsigned> &spins) {
    const Multigraph mg = to_multigraph(g);
    if (spins.size() != mg.n)
        fail(ErrorCode::InvalidArgument, "configuration size differs from n");
    for (unsigned s : spins)
        if (s >= q)
            fail(ErrorCode::OutOfRange, "spin value outside 0..q-1");
    return configuration_weight(mg, spins, K, h) / potts_polynomial(mg, q, h).evaluate(K);
}

Coefficient chromatic_from_zero_T_limit(const Graph &g, unsigned q) {
    // K -> -inf sends w = e^K to 0, leaving configurations with no monochromatic edge.
    return potts_polynomial(to_multigraph(g), q, PottsHamiltonian::H1).in_w.coefficient(0);
}

} // namespace graphphys
