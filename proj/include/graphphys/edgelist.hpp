#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <graphphys/graph.hpp>
#include <graphphys/symanzik.hpp>

namespace graphphys {

/**
 * Plain-text graph file.
 *
 *   # directed: false
 *   # nodes: 4
 *   0 1
 *   1 2 0.5
 *   leg 0 p1
 *   mass 1 1
 *
 * Header lines are `# key: value` with keys directed, weighted, nodes,
 * simple, generator, params and seed; other `#` lines are comments. Body
 * lines are edges `u v [weight]` with 0-based ids, external legs
 * `leg <node> <label>` and masses `mass <edge-index> <value>`.
 */
struct EdgeListDocument {
    bool directed = false;
    bool weighted = false;
    bool simple = false;
    std::optional<count> nodes;
    std::optional<std::string> generator;
    std::optional<std::string> params;
    std::optional<std::string> seed;
    std::vector<Edge> edges;
    std::vector<std::pair<node, std::string>> legs;
    std::vector<std::pair<std::size_t, double>> masses;

    count node_count() const;
};

EdgeListDocument parse_edge_list(const std::string &text);
EdgeListDocument read_edge_list(const std::string &path);
std::string format_edge_list(const EdgeListDocument &doc);
void write_edge_list(const EdgeListDocument &doc, const std::string &path);

Graph to_graph(const EdgeListDocument &doc);
/// Internal edges x1..xm in file order, legs and masses attached.
FeynmanGraph to_feynman(const EdgeListDocument &doc);

struct Provenance {
    std::string generator;
    std::string params;
    std::string seed;
};

EdgeListDocument document_from_graph(const Graph &g, const std::optional<Provenance> &provenance = std::nullopt);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double x);

} // namespace graphphys
