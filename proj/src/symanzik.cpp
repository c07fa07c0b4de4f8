#include <graphphys/symanzik.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include <graphphys/error.hpp>

namespace graphphys {

FeynmanGraph FeynmanGraph::from_edges(std::size_t n, const std::vector<std::pair<node, node>> &edges) {
    FeynmanGraph fg;
    fg.n = n;
    unsigned j = 1;
    for (auto [u, v] : edges)
        fg.edges.push_back({u, v, j++, std::nullopt});
    return fg;
}

unsigned FeynmanGraph::max_parameter() const {
    unsigned m = 0;
    for (const auto &e : edges)
        m = std::max(m, e.parameter);
    return m;
}

namespace {

std::vector<std::pair<node, node>> endpoints(const FeynmanGraph &fg) {
    std::vector<std::pair<node, node>> r;
    for (const auto &e : fg.edges)
        r.emplace_back(e.u, e.v);
    return r;
}

std::size_t components(std::size_t n, const std::vector<std::pair<node, node>> &edges) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t u) {
        while (parent[u] != u)
            u = parent[u] = parent[parent[u]];
        return u;
    };
    std::size_t c = n;
    for (auto [u, v] : edges) {
        auto a = find(u), b = find(v);
        if (a != b) {
            parent[a] = b;
            --c;
        }
    }
    return c;
}

/// Union-find with undo, for backtracking over edge subsets.
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    std::size_t find(std::size_t u) const {
        while (parent_[u] != u)
            u = parent_[u];
        return u;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        history_.push_back(b);
        return true;
    }
    void undo() {
        std::size_t b = history_.back();
        history_.pop_back();
        size_[parent_[b]] -= size_[b];
        parent_[b] = b;
    }

private:
    std::vector<std::size_t> parent_, size_, history_;
};

constexpr std::size_t kMaxEnumerationEdges = 30;

/// Every acyclic subset with exactly `need` edges (spanning forests with n - need trees).
template <class Visit>
void enumerate_forests(std::size_t n, const std::vector<std::pair<node, node>> &edges, std::size_t need,
                       Visit &&visit) {
    if (edges.size() > kMaxEnumerationEdges)
        fail(ErrorCode::TooLarge, "spanning-forest enumeration is limited to " +
                                      std::to_string(kMaxEnumerationEdges) + " edges");
    for (auto [u, v] : edges)
        if (u >= n || v >= n)
            fail(ErrorCode::OutOfRange, "edge endpoint outside the node range");
    RollbackUnionFind uf(n);
    std::vector<std::size_t> chosen;
    auto rec = [&](auto &&self, std::size_t i) -> void {
        if (chosen.size() == need) {
            visit(chosen, uf);
            return;
        }
        if (edges.size() - i < need - chosen.size())
            return;
        if (uf.unite(edges[i].first, edges[i].second)) {
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
            uf.undo();
        }
        self(self, i + 1);
    };
    rec(rec, 0);
}

void require_connected(std::size_t n, const std::vector<std::pair<node, node>> &edges) {
    if (n == 0 || components(n, edges) != 1)
        fail(ErrorCode::Disconnected, "Feynman graph must be connected");
}

/// Leg momenta in the basis p_1..p_{t-1} after eliminating p_t = -(p_1 + ... + p_{t-1}).
std::vector<std::vector<Coefficient>> leg_basis(std::size_t t) {
    std::vector<std::vector<Coefficient>> b(t, std::vector<Coefficient>(t == 0 ? 0 : t - 1, 0));
    for (std::size_t k = 0; k + 1 < t; ++k)
        b[k][k] = 1;
    if (t > 0)
        for (std::size_t k = 0; k + 1 < t; ++k)
            b[t - 1][k] = -1;
    return b;
}

MultivariatePolynomial x_product_outside(const FeynmanGraph &fg, const std::vector<std::size_t> &inside) {
    std::vector<char> in(fg.edges.size(), 0);
    for (std::size_t i : inside)
        in[i] = 1;
    Monomial m;
    for (std::size_t i = 0; i < fg.edges.size(); ++i)
        if (!in[i])
            m.emplace_back(Variable::x(fg.edges[i].parameter), 1);
    return MultivariatePolynomial::monomial(m);
}

} // namespace

std::size_t FeynmanGraph::loop_count() const {
    return edges.size() + components(n, endpoints(*this)) - n;
}

void validate(const FeynmanGraph &fg) {
    std::set<unsigned> params;
    for (const auto &e : fg.edges) {
        if (e.u >= fg.n || e.v >= fg.n)
            fail(ErrorCode::OutOfRange, "internal edge endpoint outside the node range");
        if (e.parameter == 0 || !params.insert(e.parameter).second)
            fail(ErrorCode::InvalidArgument, "Feynman parameters must be distinct positive indices");
    }
    std::set<std::string> labels;
    for (const auto &leg : fg.legs) {
        if (leg.attach >= fg.n)
            fail(ErrorCode::OutOfRange, "external leg attached outside the node range");
        if (!labels.insert(leg.label).second)
            fail(ErrorCode::InvalidArgument, "duplicate momentum label " + leg.label);
    }
}

std::vector<std::vector<std::size_t>> spanning_trees(std::size_t n, const std::vector<std::pair<node, node>> &edges) {
    require_connected(n, edges);
    std::vector<std::vector<std::size_t>> out;
    enumerate_forests(n, edges, n - 1, [&](const std::vector<std::size_t> &chosen, const RollbackUnionFind &) {
        out.push_back(chosen);
    });
    return out;
}

std::vector<TwoForest> spanning_2forests(std::size_t n, const std::vector<std::pair<node, node>> &edges) {
    require_connected(n, edges);
    std::vector<TwoForest> out;
    if (n < 2)
        return out;
    enumerate_forests(n, edges, n - 2, [&](const std::vector<std::size_t> &chosen, const RollbackUnionFind &uf) {
        TwoForest f;
        f.edges = chosen;
        const std::size_t root = uf.find(0);
        for (node u = 0; u < n; ++u)
            (uf.find(u) == root ? f.first : f.second).push_back(u);
        out.push_back(std::move(f));
    });
    return out;
}

namespace {

std::vector<std::pair<node, node>> graph_edges(const Graph &g) {
    if (g.directed())
        fail(ErrorCode::DirectedUnsupported, "spanning forests of a directed graph");
    std::vector<std::pair<node, node>> r;
    for (const Edge &e : g.edges())
        for (count k = 0; k < e.multiplicity; ++k)
            r.emplace_back(e.source, e.target);
    return r;
}

} // namespace

std::vector<std::vector<std::size_t>> spanning_trees(const Graph &g) {
    return spanning_trees(g.node_count(), graph_edges(g));
}

std::vector<TwoForest> spanning_2forests(const Graph &g) {
    return spanning_2forests(g.node_count(), graph_edges(g));
}

MultivariatePolynomial first_symanzik_trees(const FeynmanGraph &fg) {
    validate(fg);
    MultivariatePolynomial u;
    for (const auto &tree : spanning_trees(fg.n, endpoints(fg)))
        u += x_product_outside(fg, tree);
    return u;
}

SecondSymanzik second_symanzik(const FeynmanGraph &fg) {
    validate(fg);
    const std::size_t t = fg.legs.size();
    const auto basis = leg_basis(t);
    SecondSymanzik r;
    for (const auto &forest : spanning_2forests(fg.n, endpoints(fg))) {
        std::vector<char> in_first(fg.n, 0);
        for (node u : forest.first)
            in_first[u] = 1;
        // Momentum flowing through the cut, split by side.
        std::vector<Coefficient> a(t > 0 ? t - 1 : 0, 0), b = a;
        for (std::size_t k = 0; k < t; ++k) {
            auto &side = in_first[fg.legs[k].attach] ? a : b;
            for (std::size_t j = 0; j < side.size(); ++j)
                side[j] += basis[k][j];
        }
        MultivariatePolynomial cut;
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t l = j; l < a.size(); ++l) {
                const Coefficient c = j == l ? a[j] * b[j] : a[j] * b[l] + a[l] * b[j];
                if (c != 0)
                    cut += MultivariatePolynomial::monomial(
                        {{Variable::s(static_cast<unsigned>(j + 1), static_cast<unsigned>(l + 1)), 1}}, c);
            }
        if (cut.is_zero())
            continue;
        r.f0 += cut * x_product_outside(fg, forest.edges);
    }
    MultivariatePolynomial masses;
    for (const auto &e : fg.edges)
        if (e.mass)
            masses += MultivariatePolynomial::monomial({{Variable::x(e.parameter), 1}, {Variable::mass(e.parameter), 1}});
    r.f = r.f0;
    if (!masses.is_zero())
        r.f += first_symanzik_trees(fg) * masses;
    return r;
}

namespace {

using PolyMatrix = std::vector<std::vector<MultivariatePolynomial>>;

PolyMatrix symbolic_laplacian(const FeynmanGraph &fg) {
    PolyMatrix l(fg.n, std::vector<MultivariatePolynomial>(fg.n));
    for (const auto &e : fg.edges) {
        if (e.u == e.v)
            continue;
        const auto x = MultivariatePolynomial::variable(Variable::x(e.parameter));
        l[e.u][e.u] += x;
        l[e.v][e.v] += x;
        l[e.u][e.v] -= x;
        l[e.v][e.u] -= x;
    }
    return l;
}

} // namespace

MultivariatePolynomial kirchhoff_polynomial(const FeynmanGraph &fg, node drop) {
    validate(fg);
    if (drop >= fg.n)
        fail(ErrorCode::OutOfRange, "dropped row outside the node range");
    require_connected(fg.n, endpoints(fg));
    const PolyMatrix l = symbolic_laplacian(fg);
    PolyMatrix minor;
    for (node i = 0; i < fg.n; ++i) {
        if (i == drop)
            continue;
        std::vector<MultivariatePolynomial> row;
        for (node j = 0; j < fg.n; ++j)
            if (j != drop)
                row.push_back(l[i][j]);
        minor.push_back(std::move(row));
    }
    return determinant(minor);
}

MultivariatePolynomial first_symanzik_from_kirchhoff(const MultivariatePolynomial &k, unsigned m) {
    return k.invert_x(m);
}

MultivariatePolynomial apply_momentum_conservation(const MultivariatePolynomial &p, unsigned legs) {
    if (legs == 0)
        return p;
    const unsigned t = legs;
    // p_t.p_t = (Σ_{l<t} p_l)^2
    MultivariatePolynomial tt;
    for (unsigned a = 1; a < t; ++a)
        for (unsigned b = a; b < t; ++b)
            tt += MultivariatePolynomial::monomial({{Variable::s(a, b), 1}}, a == b ? 1 : 2);
    MultivariatePolynomial r = p.substitute(Variable::s(t, t), tt);
    for (unsigned j = 1; j < t; ++j) {
        MultivariatePolynomial jt;
        for (unsigned l = 1; l < t; ++l)
            jt -= MultivariatePolynomial::variable(Variable::s(j, l));
        r = r.substitute(Variable::s(j, t), jt);
    }
    return r;
}

ModifiedLaplacian modified_laplacian_expansion(const FeynmanGraph &fg) {
    validate(fg);
    if (fg.legs.empty())
        fail(ErrorCode::NoExternalLegs, "modified Laplacian needs at least one external leg");
    require_connected(fg.n, endpoints(fg));
    PolyMatrix l = symbolic_laplacian(fg);
    for (std::size_t k = 0; k < fg.legs.size(); ++k)
        l[fg.legs[k].attach][fg.legs[k].attach] += MultivariatePolynomial::variable(Variable::z(static_cast<unsigned>(k + 1)));
    ModifiedLaplacian r;
    r.w = determinant(l);
    const unsigned t = static_cast<unsigned>(fg.legs.size());
    for (unsigned k = 0; k <= t; ++k)
        r.parts.push_back(r.w.part_of_degree(VarKind::Z, k));
    const unsigned m = fg.max_parameter();
    // W^(1) = (z_1 + ... + z_t) K.
    r.u = r.parts[1].coefficient_of(VarKind::Z, {{Variable::z(1), 1}}).invert_x(m);
    MultivariatePolynomial f0;
    for (unsigned j = 1; j <= t; ++j)
        for (unsigned k = j + 1; k <= t; ++k) {
            const MultivariatePolynomial w2 =
                r.parts.size() > 2 ? r.parts[2].coefficient_of(VarKind::Z, {{Variable::z(j), 1}, {Variable::z(k), 1}})
                                   : MultivariatePolynomial{};
            if (!w2.is_zero())
                f0 += MultivariatePolynomial::variable(Variable::s(j, k)) * w2.invert_x(m);
        }
    r.f0 = apply_momentum_conservation(f0, t);
    return r;
}

FeynmanGraph delete_edge(const FeynmanGraph &fg, std::size_t e) {
    if (e >= fg.edges.size())
        fail(ErrorCode::NoSuchEdge, "edge index " + std::to_string(e));
    FeynmanGraph r = fg;
    r.edges.erase(r.edges.begin() + static_cast<std::ptrdiff_t>(e));
    return r;
}

FeynmanGraph contract_edge(const FeynmanGraph &fg, std::size_t e) {
    if (e >= fg.edges.size())
        fail(ErrorCode::NoSuchEdge, "edge index " + std::to_string(e));
    const auto [a, b] = std::minmax(fg.edges[e].u, fg.edges[e].v);
    if (a == b)
        fail(ErrorCode::BridgeOrLoop, "cannot contract a loop");
    auto map = [&](node u) {
        if (u == b)
            return a;
        return u > b ? u - 1 : u;
    };
    FeynmanGraph r;
    r.n = fg.n - 1;
    for (std::size_t i = 0; i < fg.edges.size(); ++i) {
        if (i == e)
            continue;
        InternalEdge ie = fg.edges[i];
        ie.u = map(ie.u);
        ie.v = map(ie.v);
        r.edges.push_back(ie);
    }
    for (ExternalLeg leg : fg.legs) {
        leg.attach = map(leg.attach);
        r.legs.push_back(leg);
    }
    return r;
}

DeletionContractionCheck symanzik_deletion_contraction_check(const FeynmanGraph &fg, std::size_t e) {
    validate(fg);
    if (e >= fg.edges.size())
        fail(ErrorCode::NoSuchEdge, "edge index " + std::to_string(e));
    const auto &edge = fg.edges[e];
    if (edge.u == edge.v)
        fail(ErrorCode::BridgeOrLoop, "edge is a loop");
    const FeynmanGraph deleted = delete_edge(fg, e);
    if (components(deleted.n, endpoints(deleted)) != components(fg.n, endpoints(fg)))
        fail(ErrorCode::BridgeOrLoop, "edge is a bridge");
    const FeynmanGraph contracted = contract_edge(fg, e);
    const auto x = MultivariatePolynomial::variable(Variable::x(edge.parameter));
    DeletionContractionCheck r;
    r.first = first_symanzik_trees(fg) == first_symanzik_trees(contracted) + x * first_symanzik_trees(deleted);
    r.second = second_symanzik(fg).f0 == second_symanzik(contracted).f0 + x * second_symanzik(deleted).f0;
    return r;
}

} // namespace graphphys
