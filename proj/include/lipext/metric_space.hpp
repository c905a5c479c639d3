#pragma once

/**
 * Finite metric spaces with a validated n x n distance matrix.
 *
 * A FiniteMetricSpace is the universe every other component works over:
 * nets are subsets of it, functions are sampled on it, extensions and
 * approximants are evaluated at its points. Construction goes through the
 * factory functions below (raw matrix, Euclidean point cloud, weighted-graph
 * shortest paths, hyperbolic disk samples in disk.hpp); each guarantees
 *
 *   - dist[i][i] == 0 exactly,
 *   - dist[i][j] == dist[j][i] exactly (stored once, mirrored),
 *   - dist[i][j] > 0 for i != j (duplicate points are rejected, not merged),
 *   - triangle inequality within tol_metric (checked eagerly for untrusted
 *     matrices, analytic for the geometric constructors).
 */

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lipext/errors.hpp"

namespace lipext {

enum class OriginKind { matrix, euclidean, graph, poincare_disk };

std::string_view origin_kind_name(OriginKind k);
std::optional<OriginKind> origin_kind_from_name(std::string_view name);

struct ValidationReport {
    bool is_metric = false;
    // Largest value of dist[i][j] - dist[i][k] - dist[k][j] over all triples,
    // clamped at 0 when every triple has slack.
    double worst_triangle_violation = 0.0;
    std::array<int, 3> worst_triple{-1, -1, -1}; // (i, j, via k)
    std::vector<std::pair<int, int>> duplicate_pairs;
    double tol_metric = 0.0; // tolerance the verdict was computed against
};

class FiniteMetricSpace {
public:
    // Takes ownership of a flat row-major n*n matrix. Prefer the factory
    // functions; this constructor only checks shape.
    FiniteMetricSpace(int n, std::vector<double> flat_dist, OriginKind origin,
                      std::optional<std::vector<std::string>> labels = std::nullopt);

    int size() const { return n_; }
    double dist(int i, int j) const { return dist_[static_cast<std::size_t>(i) * n_ + j]; }
    OriginKind origin() const { return origin_; }
    const std::optional<std::vector<std::string>>& labels() const { return labels_; }
    const std::vector<double>& flat() const { return dist_; }

private:
    int n_;
    std::vector<double> dist_;
    OriginKind origin_;
    std::optional<std::vector<std::string>> labels_;
};

// Default triangle tolerance, 1e-9 relative to the diameter of the matrix.
double default_tol_metric(double diam);

// Full validation of an untrusted matrix. Structural defects (non-square,
// non-finite or negative entries, nonzero diagonal, asymmetry) throw; triangle
// violations beyond tol_metric and coincident points are reported in the
// ValidationReport instead. O(n^3).
ValidationReport validate_metric(const std::vector<std::vector<double>>& dist,
                                 double tol_metric = -1.0);

// Same check on an already-constructed space; tol_metric < 0 selects the
// default relative tolerance.
ValidationReport validate_metric(const FiniteMetricSpace& space, double tol_metric = -1.0);

// Space from an explicit distance matrix. Throws NotAMetric if validation
// reports a triangle violation or duplicate points.
FiniteMetricSpace matrix_space(const std::vector<std::vector<double>>& dist,
                               std::optional<std::vector<std::string>> labels = std::nullopt,
                               double tol_metric = -1.0);

// Space from a d-dimensional point cloud, dist[i][j] = |coords[i]-coords[j]|.
FiniteMetricSpace euclidean_space(const std::vector<std::vector<double>>& coords,
                                  std::optional<std::vector<std::string>> labels = std::nullopt);

struct GraphEdge {
    int u = 0;
    int v = 0;
    double w = 1.0;
};

// All-pairs shortest-path metric of a connected weighted graph, one
// binary-heap Dijkstra run per source. Self-loops are ignored; parallel edges
// are allowed. The matrix is symmetrized exactly by mirroring the
// lower-source run.
FiniteMetricSpace graph_space(int n, const std::vector<GraphEdge>& edges,
                              std::optional<std::vector<std::string>> labels = std::nullopt);

// Largest entry of the distance matrix; 0 for a one-point space.
double diameter(const FiniteMetricSpace& space);

} // namespace lipext
