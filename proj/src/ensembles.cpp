#include <graphphys/ensembles.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <utility>

#include <graphphys/error.hpp>

namespace graphphys {

namespace {

void check_probability(double p, const char *what) {
    if (!(p >= 0.0 && p <= 1.0))
        fail(ErrorCode::BadProbability, std::string(what) + " must lie in [0, 1]");
}

/// Connected ER graph on m nodes with p = 1/2, resampled until connected.
std::vector<Edge> connected_seed(count m, Rng &rng) {
    for (;;) {
        std::vector<Edge> edges;
        for (node u = 0; u < m; ++u)
            for (node v = u + 1; v < m; ++v)
                if (rng.bernoulli(0.5))
                    edges.push_back({u, v});
        if (is_connected(Graph(m, edges, false, true)))
            return edges;
    }
}

Graph ba_growth(count n, count d, Rng &rng) {
    const count m0 = d + 1;
    std::vector<Edge> edges = connected_seed(m0, rng);
    std::vector<node> endpoints;
    endpoints.reserve(2 * (edges.size() + d * (n - m0)));
    for (const Edge &e : edges) {
        endpoints.push_back(e.source);
        endpoints.push_back(e.target);
    }
    std::vector<node> targets;
    for (node u = m0; u < n; ++u) {
        targets.clear();
        while (targets.size() < d) {
            const node t = endpoints[rng.below(endpoints.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
        for (node t : targets) {
            edges.push_back({t, u});
            endpoints.push_back(t);
            endpoints.push_back(u);
        }
    }
    return Graph(n, std::move(edges), false, true);
}

Graph ba_bollobas_riordan(count n, count d, Rng &rng, bool simplify) {
    const count total = n * d;
    std::vector<node> endpoints;
    endpoints.reserve(2 * total);
    std::map<std::pair<node, node>, count> merged;
    for (node i = 0; i < total; ++i) {
        // The new half-edge itself is one of the candidates, which yields a loop.
        const std::uint64_t r = rng.below(endpoints.size() + 1);
        const node t = r == endpoints.size() ? i : endpoints[r];
        endpoints.push_back(i);
        endpoints.push_back(t);
        node a = t / d, b = i / d;
        if (a > b)
            std::swap(a, b);
        if (simplify && a == b)
            continue;
        ++merged[{a, b}];
    }
    std::vector<Edge> edges;
    for (const auto &[key, mult] : merged)
        edges.push_back({key.first, key.second, 1.0, simplify ? 1 : mult});
    return Graph(n, std::move(edges), false, simplify);
}

DegreeDistribution from_counts(const std::vector<double> &counts, count samples) {
    DegreeDistribution dd;
    double total = 0.0;
    for (double c : counts)
        total += c;
    if (!(total > 0.0))
        fail(ErrorCode::EmptyGraph, "degree distribution needs at least one node");
    dd.samples = samples;
    dd.pk.resize(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k)
        dd.pk[k] = counts[k] / total;
    dd.ccdf.assign(counts.size(), 0.0);
    double tail = 0.0;
    for (std::size_t k = counts.size(); k-- > 0;) {
        tail += dd.pk[k];
        dd.ccdf[k] = tail;
    }
    // Guard the head against rounding so that P(0) is exactly one.
    if (!dd.ccdf.empty())
        dd.ccdf[0] = 1.0;
    return dd;
}

void add_degrees(const Graph &g, std::vector<double> &counts) {
    for (count k : degrees(g)) {
        if (k >= counts.size())
            counts.resize(k + 1, 0.0);
        counts[k] += 1.0;
    }
}

} // namespace

Graph erdos_renyi(count n, double p, Seed seed) {
    check_probability(p, "edge probability");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (node u = 0; u < n; ++u)
        for (node v = u + 1; v < n; ++v)
            if (rng.bernoulli(p))
                edges.push_back({u, v});
    return Graph(n, std::move(edges), false, true);
}

std::string to_string(ErRegime r) {
    switch (r) {
    case ErRegime::Subcritical:
        return "subcritical";
    case ErRegime::Critical:
        return "critical";
    case ErRegime::Supercritical:
        return "supercritical";
    }
    return "unknown";
}

double giant_component_fraction(double k) {
    if (k <= 1.0)
        return 0.0;
    // h(f) = 1 - f - e^{-kf} is positive just above 0 and negative at 1.
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (1.0 - mid - std::exp(-k * mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

ErTheory er_theory(count n, double p) {
    check_probability(p, "edge probability");
    if (n < 2)
        fail(ErrorCode::InvalidArgument, "ER theory needs n >= 2");
    const double nn = static_cast<double>(n);
    ErTheory t;
    t.expected_edges = nn * (nn - 1.0) * p / 2.0;
    t.expected_degree = (nn - 1.0) * p;
    t.avg_path_estimate = (std::log(nn) - std::numbers::egamma) / std::log(p * nn) + 0.5;
    const double k = t.expected_degree;
    t.regime = k < 1.0 ? ErRegime::Subcritical : (k > 1.0 ? ErRegime::Supercritical : ErRegime::Critical);
    t.giant_fraction = giant_component_fraction(k);
    return t;
}

double wigner_density(double lambda, count n, double p) {
    if (!(p > 0.0 && p < 1.0))
        fail(ErrorCode::BadProbability, "semicircle law needs 0 < p < 1");
    const double r = std::sqrt(static_cast<double>(n) * p * (1.0 - p));
    const double x = lambda / r;
    if (x <= -2.0 || x >= 2.0)
        return 0.0;
    return std::sqrt(4.0 - x * x) / (2.0 * std::numbers::pi * r);
}

double wigner_cdf(double lambda, count n, double p) {
    if (!(p > 0.0 && p < 1.0))
        fail(ErrorCode::BadProbability, "semicircle law needs 0 < p < 1");
    const double r = std::sqrt(static_cast<double>(n) * p * (1.0 - p));
    const double x = lambda / r;
    if (x <= -2.0)
        return 0.0;
    if (x >= 2.0)
        return 1.0;
    return 0.5 + (x * std::sqrt(4.0 - x * x) / 4.0 + std::asin(x / 2.0)) / std::numbers::pi;
}

SpectralHistogram empirical_spectral_density(std::span<const Graph> graphs, std::size_t bins,
                                             bool exclude_largest) {
    if (bins == 0)
        fail(ErrorCode::InvalidArgument, "histogram needs at least one bin");
    SpectralHistogram h;
    for (const Graph &g : graphs) {
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency_matrix(g), Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            fail(ErrorCode::NoConvergence, "eigensolver failed");
        // Ascending order: the largest eigenvalue is last.
        const Eigen::Index keep = es.eigenvalues().size() - (exclude_largest ? 1 : 0);
        for (Eigen::Index i = 0; i < keep; ++i)
            h.eigenvalues.push_back(es.eigenvalues()[i]);
    }
    if (h.eigenvalues.empty())
        fail(ErrorCode::EmptyGraph, "no eigenvalues to histogram");
    std::sort(h.eigenvalues.begin(), h.eigenvalues.end());
    h.lower = h.eigenvalues.front();
    h.upper = h.eigenvalues.back();
    if (h.upper == h.lower)
        h.upper = h.lower + 1.0;
    const double width = (h.upper - h.lower) / static_cast<double>(bins);
    h.density.assign(bins, 0.0);
    for (double x : h.eigenvalues) {
        auto b = static_cast<std::size_t>((x - h.lower) / width);
        h.density[std::min(b, bins - 1)] += 1.0;
    }
    for (double &d : h.density)
        d /= static_cast<double>(h.eigenvalues.size()) * width;
    return h;
}

double wigner_ks_distance(std::vector<double> eigenvalues, count n, double p) {
    if (eigenvalues.empty())
        fail(ErrorCode::InvalidArgument, "empty sample");
    std::sort(eigenvalues.begin(), eigenvalues.end());
    const double m = static_cast<double>(eigenvalues.size());
    double d = 0.0;
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        const double f = wigner_cdf(eigenvalues[i], n, p);
        d = std::max({d, std::abs(f - static_cast<double>(i) / m), std::abs(static_cast<double>(i + 1) / m - f)});
    }
    return d;
}

Graph watts_strogatz(count n, count k, double p_rewire, Seed seed) {
    if (k < 2 || k % 2 != 0 || k >= n)
        fail(ErrorCode::BadK, "k must be even with 2 <= k < n");
    check_probability(p_rewire, "rewiring probability");
    std::vector<std::set<node>> adj(n);
    for (node u = 0; u < n; ++u)
        for (count j = 1; j <= k / 2; ++j) {
            const node v = (u + j) % n;
            adj[u].insert(v);
            adj[v].insert(u);
        }
    Rng rng(seed);
    if (p_rewire > 0.0) {
        for (count j = 1; j <= k / 2; ++j)
            for (node u = 0; u < n; ++u) {
                const node v = (u + j) % n;
                if (!rng.bernoulli(p_rewire) || adj[u].size() + 1 >= n)
                    continue;
                node w = u;
                while (w == u || adj[u].contains(w))
                    w = rng.below(n);
                adj[u].erase(v);
                adj[v].erase(u);
                adj[u].insert(w);
                adj[w].insert(u);
            }
    }
    std::vector<Edge> edges;
    for (node u = 0; u < n; ++u)
        for (node v : adj[u])
            if (u < v)
                edges.push_back({u, v});
    return Graph(n, std::move(edges), false, true);
}

WsTheory ws_theory(count n, count k) {
    if (k < 2 || k % 2 != 0 || k >= n)
        fail(ErrorCode::BadK, "k must be even with 2 <= k < n");
    const double nn = static_cast<double>(n), kk = static_cast<double>(k);
    return {3.0 * (kk - 2.0) / (4.0 * (kk - 1.0)), (nn - 1.0) * (nn + kk - 1.0) / (2.0 * kk * nn)};
}

Graph barabasi_albert(count n, count d, Seed seed, BaVariant variant, bool simplify) {
    if (d < 1 || n <= d)
        fail(ErrorCode::BadParams, "need n > d >= 1");
    Rng rng(seed);
    if (variant == BaVariant::Growth)
        return ba_growth(n, d, rng);
    return ba_bollobas_riordan(n, d, rng, simplify);
}

double BaTheory::pk(count k) const {
    if (k < d)
        return 0.0;
    const double kk = static_cast<double>(k), dd = static_cast<double>(d);
    return 2.0 * dd * (dd + 1.0) / (kk * (kk + 1.0) * (kk + 2.0));
}

double BaTheory::pk_printed(count k) const {
    if (k < d)
        return 0.0;
    const double kk = static_cast<double>(k), dd = static_cast<double>(d);
    return 2.0 * dd * (dd - 1.0) / (kk * (kk + 1.0) * (kk + 2.0));
}

double BaTheory::ccdf(count k) const {
    if (k <= d)
        return 1.0;
    const double kk = static_cast<double>(k), dd = static_cast<double>(d);
    return dd * (dd + 1.0) / (kk * (kk + 1.0));
}

BaTheory ba_theory(count n, count d) {
    if (d < 1)
        fail(ErrorCode::BadParams, "need d >= 1");
    BaTheory t;
    t.n = n;
    t.d = d;
    const double nn = static_cast<double>(n), dd = static_cast<double>(d);
    const double ln = std::log(nn);
    t.clustering_estimate = (dd - 1.0) / 8.0 * ln * ln / nn;
    t.path_length_estimate =
        (ln - std::log(dd / 2.0) - 1.0 - std::numbers::egamma) / (std::log(ln) + std::log(dd / 2.0)) + 1.5;
    return t;
}

DegreeDistribution degree_distribution(const Graph &g) {
    std::vector<double> counts;
    add_degrees(g, counts);
    return from_counts(counts, g.node_count());
}

DegreeDistribution degree_distribution(std::span<const Graph> graphs) {
    std::vector<double> counts;
    count samples = 0;
    for (const Graph &g : graphs) {
        add_degrees(g, counts);
        samples += g.node_count();
    }
    return from_counts(counts, samples);
}

DegreeDistribution distribution_from_weights(std::vector<double> weights) {
    for (double w : weights)
        if (!(w >= 0.0) || !std::isfinite(w))
            fail(ErrorCode::InvalidArgument, "weights must be finite and nonnegative");
    return from_counts(weights, 0);
}

PowerLawFit fit_power_law(const DegreeDistribution &dd, count k_min, std::optional<count> k_max) {
    PowerLawFit fit;
    fit.k_min = std::max<count>(k_min, 1);
    fit.k_max = std::min<count>(k_max.value_or(dd.pk.size()), dd.pk.empty() ? 0 : dd.pk.size() - 1);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (count k = fit.k_min; k <= fit.k_max && k < dd.pk.size(); ++k) {
        if (!(dd.pk[k] > 0.0))
            continue;
        const double x = std::log(static_cast<double>(k)), y = std::log(dd.ccdf[k]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++fit.points;
    }
    if (fit.points < 3)
        fail(ErrorCode::DegenerateFit, "power-law fit needs at least 3 support points, got " +
                                           std::to_string(fit.points));
    const double m = static_cast<double>(fit.points);
    const double denom = m * sxx - sx * sx;
    fit.ccdf_slope = (m * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.ccdf_slope * sx) / m;
    fit.gamma = 1.0 - fit.ccdf_slope;
    return fit;
}

} // namespace graphphys
