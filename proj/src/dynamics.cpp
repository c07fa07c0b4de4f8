#include <graphphys/dynamics.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>
#include <json.hpp>

#include <graphphys/error.hpp>
#include <graphphys/spectral.hpp>

namespace graphphys {

namespace {

using Vec = Eigen::VectorXd;

std::vector<double> to_std(const Vec &v) { return std::vector<double>(v.data(), v.data() + v.size()); }

Vec to_vec(const std::vector<double> &v) { return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size())); }

void check_size(const Graph &g, const std::vector<double> &v, const char *what) {
    if (v.size() != g.node_count())
        fail(ErrorCode::InvalidArgument, std::string(what) + " needs one value per node");
}

/// Uniform grid 0 = t_0 < ... < t_N = t_end with spacing at most dt.
std::vector<double> time_grid(double t_end, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt))
        fail(ErrorCode::InvalidArgument, "time step must be positive");
    if (!(t_end >= 0.0) || !std::isfinite(t_end))
        fail(ErrorCode::InvalidArgument, "end time must be nonnegative");
    if (t_end == 0.0)
        return {0.0};
    const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(t_end / dt - 1e-12)));
    std::vector<double> t(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k)
        t[k] = t_end * static_cast<double>(k) / static_cast<double>(steps);
    return t;
}

Eigen::MatrixXd undirected_laplacian(const Graph &g) {
    if (g.directed())
        fail(ErrorCode::DirectedUnsupported, "consensus needs an undirected graph");
    return laplacian_matrix(g);
}

void check_probability_vector(const std::vector<double> &v) {
    for (double x : v)
        if (!(x >= 0.0 && x <= 1.0))
            fail(ErrorCode::BadInitialState, "initial states must lie in [0, 1]");
}

/// Classical RK4 on a stacked state y with right-hand side f.
template <typename F>
Trajectory integrate(const std::vector<double> &times, Vec y, std::size_t n, F f) {
    Trajectory tr;
    tr.times = times;
    const auto record = [&](const Vec &state) {
        std::vector<std::vector<double>> parts;
        for (Eigen::Index c = 0; c < state.size() / static_cast<Eigen::Index>(std::max<std::size_t>(n, 1)); ++c)
            parts.push_back(to_std(state.segment(c * static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n))));
        tr.states.push_back(std::move(parts));
    };
    record(y);
    for (std::size_t k = 1; k < times.size(); ++k) {
        const double h = times[k] - times[k - 1];
        const Vec k1 = f(y);
        const Vec k2 = f(y + 0.5 * h * k1);
        const Vec k3 = f(y + 0.5 * h * k2);
        const Vec k4 = f(y + h * k3);
        y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        record(y);
    }
    tr.step = times.size() > 1 ? times[1] - times[0] : 0.0;
    return tr;
}

} // namespace

const std::vector<double> &Trajectory::final_state(std::size_t component) const {
    if (states.empty() || component >= states.back().size())
        fail(ErrorCode::OutOfRange, "trajectory has no such component");
    return states.back()[component];
}

Trajectory consensus_continuous(const Graph &g, const std::vector<double> &phi0, double t_end, double dt) {
    check_size(g, phi0, "initial state");
    const Spectrum s = eig_symmetric(undirected_laplacian(g));
    const std::vector<double> times = time_grid(t_end, dt);
    const Vec coeff = s.vectors.transpose() * to_vec(phi0);
    Trajectory tr;
    tr.model = "consensus_continuous";
    tr.components = {"phi"};
    tr.times = times;
    tr.step = times.size() > 1 ? times[1] - times[0] : 0.0;
    for (double t : times) {
        Vec decay(coeff.size());
        for (Eigen::Index k = 0; k < coeff.size(); ++k)
            decay[k] = std::exp(-s.values[k] * t) * coeff[k];
        tr.states.push_back({to_std(s.vectors * decay)});
    }
    return tr;
}

Trajectory consensus_discrete(const Graph &g, const std::vector<double> &phi0, double epsilon, std::size_t steps) {
    check_size(g, phi0, "initial state");
    const Eigen::MatrixXd l = undirected_laplacian(g);
    const double delta_max = l.size() == 0 ? 0.0 : l.diagonal().maxCoeff();
    if (!(epsilon > 0.0) || !(epsilon * delta_max < 1.0))
        fail(ErrorCode::BadEpsilon, "epsilon must satisfy 0 < epsilon < 1/delta_max");
    const Eigen::MatrixXd p = Eigen::MatrixXd::Identity(l.rows(), l.cols()) - epsilon * l;
    Trajectory tr;
    tr.model = "consensus_discrete";
    tr.components = {"phi"};
    tr.parameters = {{"epsilon", epsilon}};
    tr.step = 1.0;
    Vec phi = to_vec(phi0);
    for (std::size_t k = 0; k <= steps; ++k) {
        if (k > 0)
            phi = p * phi;
        tr.times.push_back(static_cast<double>(k));
        tr.states.push_back({to_std(phi)});
    }
    return tr;
}

double sync_eigenratio(const Graph &g) {
    if (g.node_count() < 2 || !is_connected(g))
        fail(ErrorCode::Disconnected, "eigenratio needs a connected graph with two or more nodes");
    const Spectrum s = eig_symmetric(undirected_laplacian(g));
    return s.values[0] / s.values[s.values.size() - 2];
}

bool sync_verdict(const Graph &g, double alpha1, double alpha2, double c) {
    if (!(alpha1 > 0.0 && alpha2 > alpha1))
        fail(ErrorCode::InvalidArgument, "need alpha2 > alpha1 > 0");
    if (g.node_count() < 2 || !is_connected(g))
        fail(ErrorCode::Disconnected, "synchronization criterion needs a connected graph");
    const Spectrum s = eig_symmetric(undirected_laplacian(g));
    const double mu_max = s.values[0], mu2 = s.values[s.values.size() - 2];
    return c * mu2 > alpha1 && c * mu_max < alpha2;
}

Trajectory sir_integrate(const Graph &g, const EpidemicParams &params, const std::vector<double> &s0,
                         const std::vector<double> &x0, const std::vector<double> &r0, double t_end, double dt) {
    const count n = g.node_count();
    if (s0.size() != n || x0.size() != n || r0.size() != n)
        fail(ErrorCode::BadInitialState, "initial states need one value per node");
    for (const auto *v : {&s0, &x0, &r0})
        check_probability_vector(*v);
    for (node i = 0; i < n; ++i)
        if (std::abs(s0[i] + x0[i] + r0[i] - 1.0) > 1e-12)
            fail(ErrorCode::BadInitialState, "s + x + r must equal 1 at node " + std::to_string(i));
    if (!(params.beta_spread >= 0.0 && params.gamma_recover >= 0.0))
        fail(ErrorCode::InvalidArgument, "epidemic rates must be nonnegative");
    const Eigen::MatrixXd a = adjacency_matrix(g);
    const Eigen::Index nn = static_cast<Eigen::Index>(n);
    Vec y(3 * nn);
    y << to_vec(s0), to_vec(x0), to_vec(r0);
    const double beta = params.beta_spread, gamma = params.gamma_recover;
    auto f = [&](const Vec &state) {
        const Vec s = state.segment(0, nn), x = state.segment(nn, nn);
        const Vec force = beta * s.cwiseProduct(a * x);
        Vec d(3 * nn);
        d << -force, force - gamma * x, gamma * x;
        return d;
    };
    Trajectory tr = integrate(time_grid(t_end, dt), y, n, f);
    tr.model = "sir";
    tr.components = {"s", "x", "r"};
    tr.parameters = {{"beta", beta}, {"gamma", gamma}};
    return tr;
}

Trajectory sis_integrate(const Graph &g, const EpidemicParams &params, const std::vector<double> &s0,
                         const std::vector<double> &x0, double t_end, double dt) {
    const count n = g.node_count();
    if (s0.size() != n || x0.size() != n)
        fail(ErrorCode::BadInitialState, "initial states need one value per node");
    check_probability_vector(s0);
    check_probability_vector(x0);
    for (node i = 0; i < n; ++i)
        if (std::abs(s0[i] + x0[i] - 1.0) > 1e-12)
            fail(ErrorCode::BadInitialState, "s + x must equal 1 at node " + std::to_string(i));
    if (!(params.beta_spread >= 0.0 && params.gamma_recover >= 0.0))
        fail(ErrorCode::InvalidArgument, "epidemic rates must be nonnegative");
    const Eigen::MatrixXd a = adjacency_matrix(g);
    const Eigen::Index nn = static_cast<Eigen::Index>(n);
    Vec y(2 * nn);
    y << to_vec(s0), to_vec(x0);
    const double beta = params.beta_spread, gamma = params.gamma_recover;
    auto f = [&](const Vec &state) {
        const Vec s = state.segment(0, nn), x = state.segment(nn, nn);
        const Vec flow = beta * s.cwiseProduct(a * x) - gamma * x;
        Vec d(2 * nn);
        d << -flow, flow;
        return d;
    };
    Trajectory tr = integrate(time_grid(t_end, dt), y, n, f);
    tr.model = "sis";
    tr.components = {"s", "x"};
    tr.parameters = {{"beta", beta}, {"gamma", gamma}};
    return tr;
}

std::string trajectory_csv(const Trajectory &t) {
    std::ostringstream out;
    out.precision(17);
    out << "time,node";
    for (const std::string &c : t.components)
        out << ',' << c;
    out << '\n';
    for (std::size_t k = 0; k < t.times.size(); ++k) {
        const auto &state = t.states[k];
        const std::size_t n = state.empty() ? 0 : state[0].size();
        for (std::size_t i = 0; i < n; ++i) {
            out << t.times[k] << ',' << i;
            for (const auto &component : state)
                out << ',' << component[i];
            out << '\n';
        }
    }
    return out.str();
}

std::string trajectory_json(const Trajectory &t, double consensus_tol) {
    nlohmann::json j;
    j["schema"] = "graphphys.trajectory/1";
    j["model"] = t.model;
    j["step"] = t.step;
    j["samples"] = t.times.size();
    j["t_end"] = t.times.empty() ? 0.0 : t.times.back();
    nlohmann::json params = nlohmann::json::object();
    for (const auto &[name, value] : t.parameters)
        params[name] = value;
    j["parameters"] = params;
    nlohmann::json final_state = nlohmann::json::object();
    if (!t.states.empty())
        for (std::size_t c = 0; c < t.components.size(); ++c)
            final_state[t.components[c]] = t.states.back()[c];
    j["final_state"] = final_state;
    // Agreement of the first component across nodes.
    nlohmann::json convergence_time = nullptr;
    for (std::size_t k = 0; k < t.states.size(); ++k) {
        const auto &v = t.states[k][0];
        if (v.empty())
            break;
        const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        if (*hi - *lo < consensus_tol) {
            convergence_time = t.times[k];
            break;
        }
    }
    j["converged"] = !convergence_time.is_null();
    j["convergence_time"] = convergence_time;
    return j.dump(2);
}

} // namespace graphphys
