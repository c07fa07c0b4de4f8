#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <graphphys/centrality.hpp>
#include <graphphys/communities.hpp>
#include <graphphys/dynamics.hpp>
#include <graphphys/edgelist.hpp>
#include <graphphys/electrical.hpp>
#include <graphphys/ensembles.hpp>
#include <graphphys/error.hpp>
#include <graphphys/motifs.hpp>
#include <graphphys/spectral.hpp>
#include <graphphys/statmech.hpp>
#include <graphphys/symanzik.hpp>
#include <graphphys/tutte.hpp>

namespace graphphys::cli {

namespace {

using json = nlohmann::json;

constexpr const char *schema_prefix = "graphphys.";

json matrix_json(const Eigen::MatrixXd &m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json partition_json(const Partition &p) {
    return {{"blocks", p.blocks}, {"assignment", p.block}, {"members", p.members()}};
}

json schema(const std::string &name) { return {{"schema", std::string(schema_prefix) + name + "/1"}}; }

struct Options {
    std::uint64_t seed = 1;
    double beta = 1.0;
    bool json_output = false;
    std::string out;

    std::string input;

    std::vector<std::string> centralities{"degree", "betweenness", "subgraph"};
    double alpha = 0.85;
    std::optional<double> eta;

    std::string kind = "tutte";
    unsigned q = 2;
    std::optional<double> K;
    std::string hamiltonian = "H1";
    bool first = false, second = false;
    std::size_t drop = 0;

    std::string model;
    std::size_t n = 100;
    double p = 0.05;
    std::size_t k = 4;
    std::size_t d = 2;
    std::string variant = "growth";
    bool simplify = false;

    double t_end = 20.0, dt = 0.01;
    std::optional<double> epsilon;
    std::size_t steps = 100;
    double spread = 1.0, recover = 0.5;
    std::vector<std::size_t> infected{0};
    std::vector<double> phi0;
    double alpha1 = 1.0, alpha2 = 10.0, coupling = 1.0;
    bool csv = false;

    std::vector<std::size_t> pair;
    bool matrix = false;
    std::string method = "pinv";

    std::string community_method = "girvan-newman";
    std::string bisection = "laplacian";

    std::optional<std::string> zscore;
    std::size_t ensemble = 20;
    std::string null_model = "degree";
};

json analyze(const Options &o) {
    const Graph g = to_graph(read_edge_list(o.input));
    json j = schema("analyze");
    j["n"] = g.node_count();
    j["m"] = g.edge_count();
    j["directed"] = g.directed();
    const DegreeCentrality deg = degree_centrality(g);
    j["degrees"] = deg.total;
    if (g.directed()) {
        j["in_degrees"] = deg.in;
        j["out_degrees"] = deg.out;
    }
    const ClusteringReport c = clustering(g);
    j["clustering"] = {{"local", c.local}, {"average", c.average}, {"transitivity", c.transitivity}};
    const bool connected = g.node_count() > 0 && (g.directed() ? strongly_connected_components(g).count == 1
                                                               : is_connected(g));
    j["connected"] = connected;
    const auto diam = diameter(g);
    j["diameter"] = diam ? json(*diam) : json(nullptr);
    j["average_path_length"] = connected ? json(average_path_length(g)) : json(nullptr);
    if (!g.directed()) {
        const Spectrum s = eig_symmetric(adjacency_matrix(g));
        j["spectrum"] = {{"eigenvalues", std::vector<double>(s.values.data(), s.values.data() + s.values.size())},
                         {"lambda1", s.size() ? s.values[0] : 0.0}};
        const ThermoReport t = thermo_report(g, o.beta);
        j["thermo"] = {{"beta", t.beta},         {"Z", t.partition},   {"log_Z", t.log_partition},
                       {"entropy", t.entropy},   {"energy", t.energy}, {"free_energy", t.free_energy},
                       {"probabilities", t.probabilities}};
    }
    json cent = json::object();
    for (const std::string &name : o.centralities) {
        if (name == "degree") {
            cent["degree"] = deg.total;
        } else if (name == "closeness") {
            cent["closeness"] = connected ? json(closeness(g).scores) : json(nullptr);
        } else if (name == "betweenness") {
            cent["betweenness"] = betweenness(g).scores;
        } else if (name == "eigenvector") {
            const CentralityVector v =
                eigenvector_centrality(g, g.directed() ? EigenDirection::Right : EigenDirection::Undirected);
            cent["eigenvector"] = v.scores;
        } else if (name == "pagerank") {
            cent["pagerank"] = pagerank(g, o.alpha).scores;
        } else if (name == "katz") {
            const double eta = o.eta.value_or(2.0 * spectral_radius(g) + 1.0);
            const KatzCentrality kc = katz(g, eta);
            cent["katz"] = {{"eta", eta}, {"in", kc.in.scores}, {"out", kc.out.scores}};
        } else if (name == "subgraph") {
            cent["subgraph"] = subgraph_centrality(g).scores;
        } else {
            fail(ErrorCode::InvalidArgument, "unknown centrality '" + name + "'");
        }
    }
    j["centrality"] = cent;
    return j;
}

PottsHamiltonian parse_hamiltonian(const std::string &h) {
    if (h == "H1" || h == "h1")
        return PottsHamiltonian::H1;
    if (h == "H2" || h == "h2")
        return PottsHamiltonian::H2;
    fail(ErrorCode::InvalidArgument, "unknown Hamiltonian '" + h + "'");
}

/// Returns the JSON report and the plain-text form.
std::pair<json, std::string> polynomial(const Options &o) {
    const EdgeListDocument doc = read_edge_list(o.input);
    json j = schema("polynomial");
    j["kind"] = o.kind;
    std::string text;
    if (o.kind == "tutte") {
        text = tutte_polynomial(to_graph(doc)).to_string();
    } else if (o.kind == "chromatic") {
        text = chromatic_polynomial(to_graph(doc)).to_string("q");
    } else if (o.kind == "potts") {
        const Graph g = to_graph(doc);
        const PottsHamiltonian h = parse_hamiltonian(o.hamiltonian);
        const PottsPolynomial pp = potts_polynomial(to_multigraph(g), o.q, h);
        text = pp.to_string();
        j["q"] = o.q;
        j["hamiltonian"] = o.hamiltonian;
        if (o.K) {
            j["K"] = *o.K;
            j["value"] = pp.evaluate(*o.K);
            text += "\n" + format_double(pp.evaluate(*o.K));
        }
    } else if (o.kind == "symanzik") {
        const FeynmanGraph fg = to_feynman(doc);
        const bool both = !o.first && !o.second;
        std::vector<std::string> lines;
        if (o.first || both) {
            const std::string u = first_symanzik_trees(fg).to_string();
            j["first"] = u;
            lines.push_back(u);
        }
        if (o.second || both) {
            const SecondSymanzik f = second_symanzik(fg);
            j["second"] = f.f.to_string();
            j["second_massless"] = f.f0.to_string();
            lines.push_back(f.f.to_string());
        }
        for (std::size_t i = 0; i < lines.size(); ++i)
            text += (i ? "\n" : "") + lines[i];
        j["polynomial"] = text;
        return {j, text};
    } else if (o.kind == "kirchhoff") {
        text = kirchhoff_polynomial(to_feynman(doc), o.drop).to_string();
        j["drop"] = o.drop;
    } else {
        fail(ErrorCode::InvalidArgument, "unknown polynomial kind '" + o.kind + "'");
    }
    j["polynomial"] = text.substr(0, text.find('\n'));
    return {j, text};
}

std::string generate(const Options &o) {
    Graph g;
    std::ostringstream params;
    if (o.model == "er") {
        g = erdos_renyi(o.n, o.p, o.seed);
        params << "n=" << o.n << " p=" << format_double(o.p);
    } else if (o.model == "ws") {
        g = watts_strogatz(o.n, o.k, o.p, o.seed);
        params << "n=" << o.n << " k=" << o.k << " p=" << format_double(o.p);
    } else if (o.model == "ba") {
        BaVariant v;
        if (o.variant == "growth")
            v = BaVariant::Growth;
        else if (o.variant == "br" || o.variant == "bollobas-riordan")
            v = BaVariant::BollobasRiordan;
        else
            fail(ErrorCode::InvalidArgument, "unknown BA variant '" + o.variant + "'");
        g = barabasi_albert(o.n, o.d, o.seed, v, o.simplify);
        params << "n=" << o.n << " d=" << o.d << " variant=" << o.variant;
        if (o.simplify)
            params << " simplify=true";
    } else {
        fail(ErrorCode::InvalidArgument, "unknown model '" + o.model + "'");
    }
    return format_edge_list(document_from_graph(g, Provenance{o.model, params.str(), std::to_string(o.seed)}));
}

std::vector<double> initial_infection(const Options &o, count n, std::vector<double> &s) {
    std::vector<double> x(n, 0.0);
    for (std::size_t i : o.infected) {
        if (i >= n)
            fail(ErrorCode::BadInitialState, "infected node " + std::to_string(i) + " out of range");
        x[i] = 1.0;
    }
    s.assign(n, 0.0);
    for (count i = 0; i < n; ++i)
        s[i] = 1.0 - x[i];
    return x;
}

std::pair<json, std::string> dynamics(const Options &o) {
    const Graph g = to_graph(read_edge_list(o.input));
    const count n = g.node_count();
    if (o.model == "sync") {
        json j = schema("sync");
        j["eigenratio"] = sync_eigenratio(g);
        j["alpha1"] = o.alpha1;
        j["alpha2"] = o.alpha2;
        j["c"] = o.coupling;
        j["synchronizable"] = sync_verdict(g, o.alpha1, o.alpha2, o.coupling);
        return {j, j.dump(2)};
    }
    Trajectory t;
    std::optional<double> mean;
    if (o.model == "consensus" || o.model == "consensus-discrete") {
        std::vector<double> phi0 = o.phi0;
        if (phi0.empty()) {
            phi0.resize(n);
            std::iota(phi0.begin(), phi0.end(), 0.0);
        }
        if (phi0.size() != n)
            fail(ErrorCode::InvalidArgument, "--phi0 needs one value per node");
        mean = n ? std::accumulate(phi0.begin(), phi0.end(), 0.0) / static_cast<double>(n) : 0.0;
        if (o.model == "consensus") {
            t = consensus_continuous(g, phi0, o.t_end, o.dt);
        } else {
            const Eigen::MatrixXd l = laplacian_matrix(g);
            const double delta = l.size() ? l.diagonal().maxCoeff() : 0.0;
            t = consensus_discrete(g, phi0, o.epsilon.value_or(0.5 / std::max(delta, 1.0)), o.steps);
        }
    } else if (o.model == "sir" || o.model == "sis") {
        std::vector<double> s;
        const std::vector<double> x = initial_infection(o, n, s);
        const EpidemicParams ep{o.spread, o.recover};
        t = o.model == "sir" ? sir_integrate(g, ep, s, x, std::vector<double>(n, 0.0), o.t_end, o.dt)
                             : sis_integrate(g, ep, s, x, o.t_end, o.dt);
    } else {
        fail(ErrorCode::InvalidArgument, "unknown dynamics model '" + o.model + "'");
    }
    if (o.csv)
        return {json(), trajectory_csv(t)};
    json j = json::parse(trajectory_json(t));
    if (mean) {
        j["mean"] = *mean;
        const auto &final_state = t.final_state();
        double value = 0.0;
        for (double v : final_state)
            value += v;
        j["value"] = final_state.empty() ? 0.0 : value / static_cast<double>(final_state.size());
    }
    return {j, j.dump(2)};
}

ResistanceMethod parse_method(const std::string &m) {
    if (m == "pinv" || m == "pseudoinverse")
        return ResistanceMethod::Pseudoinverse;
    if (m == "det" || m == "determinant")
        return ResistanceMethod::Determinant;
    if (m == "spectral")
        return ResistanceMethod::Spectral;
    fail(ErrorCode::InvalidArgument, "unknown resistance method '" + m + "'");
}

json resistance(const Options &o) {
    const Graph g = to_graph(read_edge_list(o.input));
    json j = schema("resistance");
    if (o.matrix || o.pair.empty()) {
        j["matrix"] = matrix_json(resistance_matrix(g));
        return j;
    }
    if (o.pair.size() % 2 != 0)
        fail(ErrorCode::InvalidArgument, "--pair takes node ids in twos");
    const ResistanceMethod method = parse_method(o.method);
    json pairs = json::array();
    for (std::size_t i = 0; i < o.pair.size(); i += 2) {
        const node u = o.pair[i], v = o.pair[i + 1];
        json entry = {{"u", u}, {"v", v}, {"omega", resistance_distance(g, u, v, method)}};
        if (is_connected(g))
            entry["commute_time"] = commute_time(g, u, v);
        pairs.push_back(std::move(entry));
    }
    j["method"] = o.method;
    j["pairs"] = pairs;
    return j;
}

json communities(const Options &o) {
    const Graph g = to_graph(read_edge_list(o.input));
    json j = schema("communities");
    j["method"] = o.community_method;
    if (o.community_method == "girvan-newman") {
        const Dendrogram d = girvan_newman(g);
        json stages = json::array();
        for (const DendrogramStage &s : d.stages) {
            json st = partition_json(s.partition);
            st["removed"] = s.removed ? json({s.removed->first, s.removed->second}) : json(nullptr);
            st["modularity"] = s.modularity;
            stages.push_back(std::move(st));
        }
        j["stages"] = stages;
        j["best"] = partition_json(d.best_stage().partition);
        j["best"]["modularity"] = d.best_stage().modularity;
        j["best"]["stage"] = d.best;
        j["edge_betweenness"] = edge_betweenness(g);
    } else if (o.community_method == "spectral") {
        BisectionMatrix m;
        if (o.bisection == "laplacian")
            m = BisectionMatrix::Laplacian;
        else if (o.bisection == "adjacency")
            m = BisectionMatrix::Adjacency;
        else if (o.bisection == "normalized")
            m = BisectionMatrix::NormalizedLaplacian;
        else
            fail(ErrorCode::InvalidArgument, "unknown bisection matrix '" + o.bisection + "'");
        const Partition p = spectral_bisection(g, m);
        j["matrix"] = o.bisection;
        j["partition"] = partition_json(p);
        j["modularity"] = modularity(g, p);
    } else if (o.community_method == "cosine") {
        j["similarity"] = matrix_json(cosine_similarity(g));
    } else {
        fail(ErrorCode::InvalidArgument, "unknown community method '" + o.community_method + "'");
    }
    return j;
}

json motifs(const Options &o) {
    const Graph g = to_graph(read_edge_list(o.input));
    json j = schema("motifs");
    const MotifCensus c = motif_census(g);
    j["directed"] = c.directed;
    j["census"] = c.counts;
    if (o.zscore) {
        NullModel model;
        if (o.null_model == "degree")
            model = NullModel::DegreePreserving;
        else if (o.null_model == "er")
            model = NullModel::ErdosRenyi;
        else
            fail(ErrorCode::InvalidArgument, "unknown null model '" + o.null_model + "'");
        const MotifReport r = motif_zscore(g, *o.zscore, o.ensemble, o.seed, model);
        j["zscore"] = {{"motif", r.motif},     {"real", r.real}, {"mean", r.mean},
                       {"stddev", r.stddev},   {"z", r.z},       {"ensemble_size", r.ensemble_size},
                       {"null_model", o.null_model}};
    }
    return j;
}

void emit(const Options &o, const std::string &text, std::ostream &out) {
    if (o.out.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n')
            out << '\n';
        return;
    }
    std::ofstream file(o.out);
    if (!file)
        fail(ErrorCode::InvalidArgument, "cannot write " + o.out);
    file << text;
    if (!text.empty() && text.back() != '\n')
        file << '\n';
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Graph physics toolkit", "graphphys"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--seed", o.seed, "Random seed");
    app.add_option("--beta", o.beta, "Inverse temperature");
    app.add_flag("--json", o.json_output, "JSON output where text is the default");
    app.add_option("--out", o.out, "Write the result to this file");

    auto *an = app.add_subcommand("analyze", "Structural, spectral and thermodynamic report");
    an->add_option("input", o.input)->required();
    an->add_option("--centrality", o.centralities, "degree, closeness, betweenness, eigenvector, pagerank, katz, subgraph")
        ->delimiter(',');
    an->add_option("--alpha", o.alpha, "PageRank damping");
    an->add_option("--eta", o.eta, "Katz attenuation");

    auto *po = app.add_subcommand("polynomial", "Graph polynomials");
    po->add_option("input", o.input)->required();
    po->add_option("--kind", o.kind, "tutte, chromatic, potts, symanzik, kirchhoff");
    po->add_option("--q", o.q, "Potts states");
    po->add_option("--K", o.K, "Potts coupling");
    po->add_option("--hamiltonian", o.hamiltonian, "H1 or H2");
    po->add_flag("--first", o.first, "First Symanzik polynomial");
    po->add_flag("--second", o.second, "Second Symanzik polynomial");
    po->add_option("--drop", o.drop, "Node removed from the Kirchhoff Laplacian");

    auto *ge = app.add_subcommand("generate", "Random graph generators");
    ge->add_option("model", o.model, "er, ws, ba")->required();
    ge->add_option("--n", o.n);
    ge->add_option("--p", o.p, "Edge or rewiring probability");
    ge->add_option("--k", o.k, "Ring degree");
    ge->add_option("--d", o.d, "Attachment count");
    ge->add_option("--variant", o.variant, "growth or br");
    ge->add_flag("--simplify", o.simplify);

    auto *dy = app.add_subcommand("dynamics", "Consensus, epidemics and synchronization");
    dy->add_option("model", o.model, "consensus, consensus-discrete, sir, sis, sync")->required();
    dy->add_option("input", o.input)->required();
    dy->add_option("--t-end", o.t_end);
    dy->add_option("--dt", o.dt);
    dy->add_option("--epsilon", o.epsilon);
    dy->add_option("--steps", o.steps);
    dy->add_option("--spread", o.spread, "Transmission rate");
    dy->add_option("--recover", o.recover, "Recovery rate");
    dy->add_option("--infected", o.infected)->delimiter(',');
    dy->add_option("--phi0", o.phi0)->delimiter(',');
    dy->add_option("--alpha1", o.alpha1);
    dy->add_option("--alpha2", o.alpha2);
    dy->add_option("--c", o.coupling);
    dy->add_flag("--csv", o.csv, "Emit the trajectory as CSV");

    auto *re = app.add_subcommand("resistance", "Resistance distances");
    re->add_option("input", o.input)->required();
    re->add_option("--pair", o.pair, "Node pairs u,v[,u,v...]")->delimiter(',');
    re->add_flag("--matrix", o.matrix);
    re->add_option("--method", o.method, "pinv, det, spectral");

    auto *co = app.add_subcommand("communities", "Community detection");
    co->add_option("input", o.input)->required();
    co->add_option("--method", o.community_method, "girvan-newman, spectral, cosine");
    co->add_option("--matrix", o.bisection, "laplacian, adjacency, normalized");

    auto *mo = app.add_subcommand("motifs", "Three-node motif census");
    mo->add_option("input", o.input)->required();
    mo->add_option("--zscore", o.zscore, "Motif to test");
    mo->add_option("--ensemble", o.ensemble);
    mo->add_option("--null", o.null_model, "degree or er");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    }

    try {
        std::string text;
        if (an->parsed()) {
            text = analyze(o).dump(2);
        } else if (po->parsed()) {
            auto [j, t] = polynomial(o);
            text = o.json_output ? j.dump(2) : t;
        } else if (ge->parsed()) {
            text = generate(o);
        } else if (dy->parsed()) {
            text = dynamics(o).second;
        } else if (re->parsed()) {
            text = resistance(o).dump(2);
        } else if (co->parsed()) {
            text = communities(o).dump(2);
        } else if (mo->parsed()) {
            text = motifs(o).dump(2);
        }
        emit(o, text, out);
    } catch (const Error &e) {
        json j = schema("error");
        j["error"] = std::string(to_string(e.code()));
        j["message"] = e.what();
        err << j.dump() << '\n';
        return 2;
    }
    return 0;
}

} // namespace graphphys::cli
