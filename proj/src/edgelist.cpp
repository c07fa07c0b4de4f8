#include <graphphys/edgelist.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <graphphys/error.hpp>

namespace graphphys {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string &msg) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string &s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;)
        out.push_back(w);
    return out;
}

template <typename T>
T parse_number(const std::string &token, std::size_t line, const char *what) {
    T value{};
    const char *end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end)
        parse_fail(line, std::string("invalid ") + what + " '" + token + "'");
    return value;
}

bool parse_bool(const std::string &v, std::size_t line) {
    if (v == "true" || v == "1" || v == "yes")
        return true;
    if (v == "false" || v == "0" || v == "no")
        return false;
    parse_fail(line, "expected true or false, got '" + v + "'");
}

} // namespace

count EdgeListDocument::node_count() const {
    count n = nodes.value_or(0);
    for (const Edge &e : edges)
        n = std::max({n, e.source + 1, e.target + 1});
    for (const auto &[u, label] : legs)
        n = std::max(n, u + 1);
    return n;
}

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

EdgeListDocument parse_edge_list(const std::string &text) {
    EdgeListDocument doc;
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw);
        if (s.empty())
            continue;
        if (s[0] == '#') {
            const std::string body = trim(s.substr(1));
            const auto colon = body.find(':');
            if (colon == std::string::npos)
                continue;
            const std::string key = trim(body.substr(0, colon));
            const std::string value = trim(body.substr(colon + 1));
            if (key == "directed")
                doc.directed = parse_bool(value, line);
            else if (key == "weighted")
                doc.weighted = parse_bool(value, line);
            else if (key == "simple")
                doc.simple = parse_bool(value, line);
            else if (key == "nodes")
                doc.nodes = parse_number<count>(value, line, "node count");
            else if (key == "generator")
                doc.generator = value;
            else if (key == "params")
                doc.params = value;
            else if (key == "seed")
                doc.seed = value;
            continue;
        }
        const std::vector<std::string> t = split(s);
        if (t[0] == "leg") {
            if (t.size() != 3)
                parse_fail(line, "expected 'leg <node> <label>'");
            doc.legs.emplace_back(parse_number<node>(t[1], line, "node id"), t[2]);
        } else if (t[0] == "mass") {
            if (t.size() != 3)
                parse_fail(line, "expected 'mass <edge-index> <value>'");
            doc.masses.emplace_back(parse_number<std::size_t>(t[1], line, "edge index"),
                                    parse_number<double>(t[2], line, "mass"));
        } else if (!t[0].empty() && std::isdigit(static_cast<unsigned char>(t[0][0]))) {
            if (t.size() != 2 && t.size() != 3)
                parse_fail(line, "expected 'u v [weight]'");
            Edge e{parse_number<node>(t[0], line, "node id"), parse_number<node>(t[1], line, "node id")};
            if (t.size() == 3) {
                e.weight = parse_number<double>(t[2], line, "weight");
                doc.weighted = true;
            }
            doc.edges.push_back(e);
        } else {
            parse_fail(line, "unknown directive '" + t[0] + "'");
        }
    }
    if (doc.edges.empty() && doc.legs.empty() && !doc.nodes)
        parse_fail(std::max<std::size_t>(line, 1), "empty edge list: no edges and no node count");
    if (doc.nodes) {
        for (const Edge &e : doc.edges)
            if (e.source >= *doc.nodes || e.target >= *doc.nodes)
                fail(ErrorCode::ParseError, "edge endpoint exceeds the declared node count");
        for (const auto &[u, label] : doc.legs)
            if (u >= *doc.nodes)
                fail(ErrorCode::ParseError, "leg node exceeds the declared node count");
    }
    for (const auto &[e, m] : doc.masses)
        if (e >= doc.edges.size())
            fail(ErrorCode::ParseError, "mass refers to edge " + std::to_string(e) + " which does not exist");
    return doc;
}

EdgeListDocument read_edge_list(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_edge_list(ss.str());
}

std::string format_edge_list(const EdgeListDocument &doc) {
    std::ostringstream out;
    out << "# directed: " << (doc.directed ? "true" : "false") << '\n';
    out << "# weighted: " << (doc.weighted ? "true" : "false") << '\n';
    out << "# simple: " << (doc.simple ? "true" : "false") << '\n';
    out << "# nodes: " << doc.node_count() << '\n';
    if (doc.generator)
        out << "# generator: " << *doc.generator << '\n';
    if (doc.params)
        out << "# params: " << *doc.params << '\n';
    if (doc.seed)
        out << "# seed: " << *doc.seed << '\n';
    for (const Edge &e : doc.edges) {
        for (count k = 0; k < e.multiplicity; ++k) {
            out << e.source << ' ' << e.target;
            if (doc.weighted)
                out << ' ' << format_double(e.weight);
            out << '\n';
        }
    }
    for (const auto &[u, label] : doc.legs)
        out << "leg " << u << ' ' << label << '\n';
    for (const auto &[e, m] : doc.masses)
        out << "mass " << e << ' ' << format_double(m) << '\n';
    return out.str();
}

void write_edge_list(const EdgeListDocument &doc, const std::string &path) {
    std::ofstream out(path);
    if (!out)
        fail(ErrorCode::InvalidArgument, "cannot write " + path);
    out << format_edge_list(doc);
}

Graph to_graph(const EdgeListDocument &doc) {
    return Graph(doc.node_count(), doc.edges, doc.directed, doc.simple);
}

FeynmanGraph to_feynman(const EdgeListDocument &doc) {
    if (doc.directed)
        fail(ErrorCode::DirectedUnsupported, "Feynman graphs are undirected");
    FeynmanGraph fg;
    fg.n = doc.node_count();
    unsigned parameter = 0;
    for (const Edge &e : doc.edges)
        for (count k = 0; k < e.multiplicity; ++k)
            fg.edges.push_back({e.source, e.target, ++parameter, std::nullopt});
    for (const auto &[u, label] : doc.legs)
        fg.legs.push_back({u, label});
    for (const auto &[e, m] : doc.masses) {
        if (e >= fg.edges.size())
            fail(ErrorCode::ParseError, "mass refers to a missing edge");
        fg.edges[e].mass = m;
    }
    validate(fg);
    return fg;
}

EdgeListDocument document_from_graph(const Graph &g, const std::optional<Provenance> &provenance) {
    EdgeListDocument doc;
    doc.directed = g.directed();
    doc.weighted = g.weighted();
    doc.simple = g.simple();
    doc.nodes = g.node_count();
    doc.edges.assign(g.edges().begin(), g.edges().end());
    if (provenance) {
        doc.generator = provenance->generator;
        doc.params = provenance->params;
        doc.seed = provenance->seed;
    }
    return doc;
}

} // namespace graphphys
