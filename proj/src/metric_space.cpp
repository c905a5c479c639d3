#include "lipext/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <utility>

#include "lipext/errors.hpp"

namespace lipext {

std::string_view origin_kind_name(OriginKind kind) {
    switch (kind) {
        case OriginKind::matrix: return "matrix";
        case OriginKind::euclidean: return "euclidean";
        case OriginKind::graph: return "graph";
        case OriginKind::poincare_disk: return "poincare_disk";
    }
    return "matrix";
}

std::optional<OriginKind> origin_kind_from_name(std::string_view name) {
    if (name == "matrix") return OriginKind::matrix;
    if (name == "euclidean") return OriginKind::euclidean;
    if (name == "graph") return OriginKind::graph;
    if (name == "poincare_disk") return OriginKind::poincare_disk;
    return std::nullopt;
}

FiniteMetricSpace::FiniteMetricSpace(int n, std::vector<double> flat_dist,
                                     OriginKind origin,
                                     std::optional<std::vector<std::string>> labels)
    : n_(n), dist_(std::move(flat_dist)), origin_(origin), labels_(std::move(labels)) {
    if (n_ <= 0) throw EmptySpace("a metric space needs at least one point");
    if (dist_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_))
        throw DimensionMismatch("distance matrix size does not match point count");
    if (labels_ && labels_->size() != static_cast<std::size_t>(n_))
        throw DimensionMismatch("label count does not match point count");
}

double default_tol_metric(double diam) {
    return 1e-9 * std::max(diam, 1.0);
}

namespace {

// Structural checks shared by every validation path. These are exact: a
// distance matrix that is not square, has a nonzero diagonal, or is not
// symmetric bit-for-bit was produced by a broken construction, not by
// rounding.
void check_structure(const std::vector<std::vector<double>>& dist) {
    const std::size_t n = dist.size();
    if (n == 0) throw EmptySpace("a metric space needs at least one point");
    for (std::size_t i = 0; i < n; ++i) {
        if (dist[i].size() != n) {
            std::ostringstream msg;
            msg << "row " << i << " has " << dist[i].size() << " entries, expected " << n;
            throw NonSquareMatrix(msg.str());
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = dist[i][j];
            if (!std::isfinite(v)) {
                std::ostringstream msg;
                msg << "distance (" << i << ", " << j << ") is not finite";
                throw NonFiniteValue(msg.str());
            }
            if (v < 0.0) {
                std::ostringstream msg;
                msg << "distance (" << i << ", " << j << ") is negative";
                throw NegativeDistance(msg.str());
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (dist[i][i] != 0.0) {
            std::ostringstream msg;
            msg << "diagonal entry " << i << " is nonzero";
            throw NonzeroDiagonal(msg.str());
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dist[i][j] != dist[j][i]) {
                std::ostringstream msg;
                msg << "entries (" << i << ", " << j << ") and (" << j << ", " << i
                    << ") differ";
                throw AsymmetricMatrix(msg.str());
            }
        }
    }
}

double matrix_diameter(const std::vector<std::vector<double>>& dist) {
    double diam = 0.0;
    for (const auto& row : dist)
        for (double v : row) diam = std::max(diam, v);
    return diam;
}

} // namespace

ValidationReport validate_metric(const std::vector<std::vector<double>>& dist,
                                 double tol_metric) {
    check_structure(dist);
    const int n = static_cast<int>(dist.size());
    if (tol_metric < 0.0) tol_metric = default_tol_metric(matrix_diameter(dist));

    ValidationReport report;
    report.tol_metric = tol_metric;

    // Distinct points at distance zero: the space fails to separate them, so
    // the matrix does not describe a metric on these labels.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dist[i][j] == 0.0) report.duplicate_pairs.push_back({i, j});

    // Triangle inequality over all ordered triples, tracking the single worst
    // violation d(i,j) - d(i,k) - d(k,j).
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double dij = dist[i][j];
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                const double slack = dij - dist[i][k] - dist[k][j];
                if (slack > report.worst_triangle_violation) {
                    report.worst_triangle_violation = slack;
                    report.worst_triple = {i, j, k};
                }
            }
        }
    }

    report.is_metric =
        report.duplicate_pairs.empty() && report.worst_triangle_violation <= tol_metric;
    return report;
}

ValidationReport validate_metric(const FiniteMetricSpace& space, double tol_metric) {
    const int n = space.size();
    std::vector<std::vector<double>> dist(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dist[i][j] = space.dist(i, j);
    return validate_metric(dist, tol_metric);
}

namespace {

FiniteMetricSpace build_checked(std::vector<std::vector<double>> dist, OriginKind origin,
                                std::optional<std::vector<std::string>> labels,
                                double tol_metric) {
    const ValidationReport report = validate_metric(dist, tol_metric);
    if (!report.is_metric) {
        std::ostringstream msg;
        if (!report.duplicate_pairs.empty()) {
            const auto [i, j] = report.duplicate_pairs.front();
            msg << "points " << i << " and " << j << " are at distance zero";
        } else {
            const auto [i, j, k] = report.worst_triple;
            msg << "triangle inequality fails for (" << i << ", " << j << ") via " << k
                << " by " << report.worst_triangle_violation;
        }
        throw NotAMetric(msg.str());
    }
    const int n = static_cast<int>(dist.size());
    std::vector<double> flat(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat[static_cast<std::size_t>(i) * n + j] = dist[i][j];
    return FiniteMetricSpace(n, std::move(flat), origin, std::move(labels));
}

} // namespace

FiniteMetricSpace matrix_space(const std::vector<std::vector<double>>& dist,
                               std::optional<std::vector<std::string>> labels,
                               double tol_metric) {
    return build_checked(dist, OriginKind::matrix, std::move(labels), tol_metric);
}

FiniteMetricSpace euclidean_space(const std::vector<std::vector<double>>& coords,
                                  std::optional<std::vector<std::string>> labels) {
    const std::size_t n = coords.size();
    if (n == 0) throw EmptySpace("a metric space needs at least one point");
    const std::size_t dim = coords.front().size();
    if (dim == 0) throw DimensionMismatch("points need at least one coordinate");
    for (std::size_t i = 0; i < n; ++i) {
        if (coords[i].size() != dim) {
            std::ostringstream msg;
            msg << "point " << i << " has " << coords[i].size()
                << " coordinates, expected " << dim;
            throw DimensionMismatch(msg.str());
        }
        for (double c : coords[i])
            if (!std::isfinite(c)) {
                std::ostringstream msg;
                msg << "point " << i << " has a non-finite coordinate";
                throw NonFiniteValue(msg.str());
            }
    }

    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double sq = 0.0;
            for (std::size_t d = 0; d < dim; ++d) {
                const double diff = coords[i][d] - coords[j][d];
                sq += diff * diff;
            }
            const double v = std::sqrt(sq);
            if (v == 0.0) {
                std::ostringstream msg;
                msg << "points " << i << " and " << j << " coincide";
                throw DuplicatePoint(msg.str());
            }
            dist[i][j] = dist[j][i] = v;
        }
    }
    // Euclidean distances satisfy the triangle inequality up to rounding;
    // validation still runs so single-point and tolerance bookkeeping stay on
    // one code path.
    return build_checked(std::move(dist), OriginKind::euclidean, std::move(labels), -1.0);
}

FiniteMetricSpace graph_space(int n, const std::vector<GraphEdge>& edges,
                              std::optional<std::vector<std::string>> labels) {
    if (n <= 0) throw EmptySpace("a metric space needs at least one point");
    std::vector<std::vector<std::pair<int, double>>> adj(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto& [u, v, w] = edges[e];
        if (u < 0 || u >= n || v < 0 || v >= n) {
            std::ostringstream msg;
            msg << "edge " << e << " references a vertex outside 0.." << n - 1;
            throw IndexOutOfRange(msg.str());
        }
        if (!std::isfinite(w)) {
            std::ostringstream msg;
            msg << "edge " << e << " has a non-finite weight";
            throw NonFiniteValue(msg.str());
        }
        if (w <= 0.0) {
            std::ostringstream msg;
            msg << "edge " << e << " has non-positive weight";
            throw NonpositiveWeight(msg.str());
        }
        if (u == v) continue; // self-loops never shorten a path
        adj[u].push_back({v, w});
        adj[v].push_back({u, w});
    }

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, inf));

    // Dijkstra from every source. For sources s > t the value is mirrored
    // from the earlier run so the matrix is symmetric by construction, not by
    // accident of summation order.
    for (int s = 0; s < n; ++s) {
        auto& d = dist[s];
        d[s] = 0.0;
        using Entry = std::pair<double, int>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
        heap.push({0.0, s});
        while (!heap.empty()) {
            const auto [du, u] = heap.top();
            heap.pop();
            if (du > d[u]) continue;
            for (const auto& [v, w] : adj[u]) {
                const double cand = du + w;
                if (cand < d[v]) {
                    d[v] = cand;
                    heap.push({cand, v});
                }
            }
        }
        for (int t = 0; t < s; ++t) d[t] = dist[t][s];
        for (int t = 0; t < n; ++t)
            if (d[t] == inf) {
                std::ostringstream msg;
                msg << "vertices " << s << " and " << t << " are not connected";
                throw DisconnectedGraph(msg.str());
            }
    }
    return build_checked(std::move(dist), OriginKind::graph, std::move(labels), -1.0);
}

double diameter(const FiniteMetricSpace& space) {
    double diam = 0.0;
    const int n = space.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) diam = std::max(diam, space.dist(i, j));
    return diam;
}

} // namespace lipext
