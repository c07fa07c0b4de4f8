#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <graphphys/graph.hpp>
#include <graphphys/random.hpp>

namespace graphphys {

/// Induced connected three-node subgraph counts keyed by class name.
struct MotifCensus {
    bool directed = false;
    std::map<std::string, count> counts;

    count operator[](const std::string &name) const;
    count total() const;
};

/// Class names: path, triangle for undirected graphs; thirteen triad classes otherwise.
std::vector<std::string> motif_names(bool directed);

MotifCensus motif_census(const Graph &g);

enum class NullModel { DegreePreserving, ErdosRenyi };

/// Double edge swaps that keep every (in/out) degree; loops and parallel edges are never created.
Graph degree_preserving_rewire(const Graph &g, std::size_t attempts, Seed seed);

struct MotifReport {
    std::string motif;
    double real = 0.0;
    double mean = 0.0;
    /// Sample standard deviation over the ensemble.
    double stddev = 0.0;
    double z = 0.0;
    std::size_t ensemble_size = 0;
};

/// (real - mean) / σ; DegenerateEnsemble when σ = 0.
double motif_zscore_value(double real, double mean, double sigma);

/// Z-score against a null ensemble of at least 20 graphs.
MotifReport motif_zscore(const Graph &g, const std::string &motif, std::size_t ensemble_size, Seed seed,
                         NullModel model = NullModel::DegreePreserving);

} // namespace graphphys
