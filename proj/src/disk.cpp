#include "lipext/disk.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "lipext/errors.hpp"
#include "lipext/rng.hpp"

namespace lipext {

bool inside_unit_disk(DiskPoint z) {
    return std::isfinite(z.re) && std::isfinite(z.im) && z.re * z.re + z.im * z.im < 1.0;
}

double hyperbolic_distance(DiskPoint z, DiskPoint w, double scale) {
    if (!std::isfinite(scale) || scale <= 0.0)
        throw NonpositiveInput("hyperbolic scale must be positive");
    if (!inside_unit_disk(z) || !inside_unit_disk(w))
        throw PointOnOrOutsideBoundary("hyperbolic distance needs points strictly inside the unit disk");

    // Pseudo-hyperbolic ratio |z - w| / |1 - conj(z) w|. Every product and
    // difference below is symmetric under swapping z and w up to an exact
    // sign flip, so the result is bit-identical in either argument order.
    const double num = std::hypot(z.re - w.re, z.im - w.im);
    const double den = std::hypot(1.0 - (z.re * w.re + z.im * w.im), z.re * w.im - z.im * w.re);
    double rho = num / den;
    // For interior points rho < 1 analytically; rounding near the boundary
    // may push the quotient to 1, which atanh would turn into infinity.
    if (rho >= 1.0) rho = std::nextafter(1.0, 0.0);
    return scale * std::atanh(rho);
}

FiniteMetricSpace poincare_disk_space(const std::vector<DiskPoint>& points, double scale,
                                      std::optional<std::vector<std::string>> labels) {
    if (!std::isfinite(scale) || scale <= 0.0)
        throw NonpositiveInput("hyperbolic scale must be positive");
    const std::size_t n = points.size();
    if (n == 0) throw EmptySpace("a metric space needs at least one point");
    for (std::size_t i = 0; i < n; ++i)
        if (!inside_unit_disk(points[i])) {
            std::ostringstream msg;
            msg << "point " << i << " is not strictly inside the unit disk";
            throw PointOnOrOutsideBoundary(msg.str());
        }

    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = hyperbolic_distance(points[i], points[j], scale);
            if (v == 0.0) {
                std::ostringstream msg;
                msg << "points " << i << " and " << j << " coincide";
                throw DuplicatePoint(msg.str());
            }
            dist[i][j] = dist[j][i] = v;
        }
    }

    const ValidationReport report = validate_metric(dist);
    if (!report.is_metric) {
        std::ostringstream msg;
        const auto [i, j, k] = report.worst_triple;
        msg << "triangle inequality fails for (" << i << ", " << j << ") via " << k << " by "
            << report.worst_triangle_violation;
        throw NotAMetric(msg.str());
    }

    std::vector<double> flat(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = dist[i][j];
    return FiniteMetricSpace(static_cast<int>(n), std::move(flat), OriginKind::poincare_disk,
                             std::move(labels));
}

DiskPoint sample_disk_uniform(std::mt19937_64& rng) {
    // Radius sqrt(u) inverts the area CDF; draw order (radius, angle) is part
    // of the determinism contract.
    const double r = std::sqrt(uniform_unit(rng));
    const double theta = 2.0 * std::numbers::pi * uniform_unit(rng);
    return {r * std::cos(theta), r * std::sin(theta)};
}

MomentEstimate disk_moment_stats(double p, long long n_samples, std::uint64_t seed) {
    if (!std::isfinite(p) || p <= 0.0) throw InvalidP("moment exponent must be positive");
    if (n_samples <= 0) throw NonpositiveInput("sample count must be positive");

    auto rng = make_rng(seed);
    // Only the radius matters for atanh(|z|)^p, so one draw per sample.
    double mean = 0.0;
    double m2 = 0.0;
    for (long long i = 0; i < n_samples; ++i) {
        const double r = std::sqrt(uniform_unit(rng));
        const double g = std::pow(std::atanh(r), p);
        const double delta = g - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (g - mean);
    }

    MomentEstimate est;
    est.mean = mean;
    est.n_samples = n_samples;
    if (n_samples > 1) {
        const double nd = static_cast<double>(n_samples);
        est.std_error = std::sqrt(m2 / (nd - 1.0) / nd);
    }
    return est;
}

double disk_moment_estimate(double p, long long n_samples, std::uint64_t seed) {
    return disk_moment_stats(p, n_samples, seed).mean;
}

ComparisonStats disk_comparison_stats(long long n_pairs, std::uint64_t seed) {
    if (n_pairs <= 0) throw NonpositiveInput("pair count must be positive");

    auto rng = make_rng(seed);
    ComparisonStats stats;
    stats.n_pairs = n_pairs;
    for (long long i = 0; i < n_pairs; ++i) {
        const DiskPoint z = sample_disk_uniform(rng);
        const DiskPoint w = sample_disk_uniform(rng);
        const double beta = hyperbolic_distance(z, w);
        if (beta == 0.0) continue; // coincident draw, ratio undefined
        const double ratio = std::hypot(z.re - w.re, z.im - w.im) / beta;
        if (ratio > stats.max_ratio) {
            stats.max_ratio = ratio;
            stats.worst_z = z;
            stats.worst_w = w;
        }
    }
    return stats;
}

} // namespace lipext
