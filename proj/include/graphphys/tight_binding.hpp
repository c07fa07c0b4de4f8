#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <graphphys/graph.hpp>
#include <graphphys/spectral.hpp>

namespace graphphys {

struct HuckelResult {
    double alpha = 0.0;
    double beta = 0.0;
    /// Orbital energies in ascending order.
    std::vector<double> orbital_energies;
    std::vector<int> occupations;
    double total_energy = 0.0;
};

/// Orbital energies E_j = α + βλ_j, filled two electrons per orbital from the bottom.
HuckelResult huckel_spectrum(const Graph &g, double alpha, double beta,
                             std::optional<std::size_t> electrons = std::nullopt);

/// Ground-state π energy in units of |β| from a descending eigenvalue list.
double total_pi_energy(const Eigen::VectorXd &descending, std::size_t n);
double total_pi_energy(const Graph &g);
/// Σ|λ_j|, which coincides with the ground-state π energy for bipartite graphs.
double graph_energy(const Eigen::VectorXd &values);

struct EnergyBounds {
    double lower = 0.0;
    double upper = 0.0;
    /// Bipartite-only bound; nullopt otherwise.
    std::optional<double> bipartite_upper;
};

EnergyBounds energy_bounds(const Graph &g);

enum class SpectrumFamily { Path, Cycle, Polyacene };

/// Closed-form adjacency eigenvalues, sorted descending.
std::vector<double> closed_form_spectrum(SpectrumFamily family, std::size_t size);

/// Hexagonal cells on a brick-wall lattice; cell (x, y) needs x + y even.
Graph benzenoid_graph(const std::vector<std::pair<int, int>> &cells);
Graph polyacene_graph(std::size_t hexagons);
Graph pyrene_graph();
Graph triangulene_graph();

/// Multiplicity of the zero adjacency eigenvalue.
std::size_t nullity(const Graph &g);

/**
 * n - 2M for trees, bipartite graphs without cycles of length 4s, and
 * benzenoid graphs (flagged by the caller). FormulaNotApplicable otherwise.
 */
std::size_t nullity_via_matching(const Graph &g, bool benzenoid = false);
/// n - 2 rank(B) with B the biadjacency matrix.
std::size_t nullity_via_rank(const Graph &g);

/// Some simple cycle has length divisible by 4 (enumeration; TooLarge past a work cap).
bool has_cycle_length_multiple_of_four(const Graph &g);

struct NullityBounds {
    /// Girth bound as commonly printed (n - 2g + 2 / n - 2g).
    std::optional<long> girth_printed;
    /// Corrected girth bound (n - g + 2 / n - g).
    std::optional<long> girth;
    /// Best bound from any shortest path.
    long path = 0;
    /// Diameter bound; nullopt when disconnected.
    std::optional<long> diameter;
};

long path_nullity_bound(std::size_t n, std::int64_t distance);
/// Girth bound alone; Acyclic for forests.
long girth_nullity_bound(const Graph &g, bool printed = false);
NullityBounds nullity_bounds(const Graph &g);

double lieb_total_spin(std::size_t first, std::size_t second);
double lieb_total_spin(const Graph &g);

} // namespace graphphys
