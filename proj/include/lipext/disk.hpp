#pragma once

/**
 * The hyperbolic unit disk: distance, sampled spaces, and area-measure
 * Monte-Carlo statistics.
 *
 * Distance convention: beta(z, w) = scale * atanh(|z - w| / |1 - conj(z) w|).
 * scale = 1 is the curvature -4 normalization used by default everywhere;
 * the Bergman metric of the disk is scale = 2.
 */

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "lipext/metric_space.hpp"

namespace lipext {

struct DiskPoint {
    double re = 0.0;
    double im = 0.0;
};

bool inside_unit_disk(DiskPoint z);

// Throws PointOnOrOutsideBoundary unless both points satisfy |z| < 1.
// Symmetric bit-for-bit in (z, w); zero iff z == w.
double hyperbolic_distance(DiskPoint z, DiskPoint w, double scale = 1.0);

FiniteMetricSpace poincare_disk_space(const std::vector<DiskPoint>& points, double scale = 1.0,
                                      std::optional<std::vector<std::string>> labels = std::nullopt);

// Uniform-by-area sample: r = sqrt(u) radial inversion, angle uniform.
DiskPoint sample_disk_uniform(std::mt19937_64& rng);

struct MomentEstimate {
    double mean = 0.0;
    double std_error = 0.0; // sample standard deviation / sqrt(n)
    long long n_samples = 0;
};

// Monte-Carlo estimate of the p-th moment of beta(0, z) = atanh(|z|) under
// normalized area measure on the disk (scale = 1). Deterministic given seed.
MomentEstimate disk_moment_stats(double p, long long n_samples, std::uint64_t seed);
double disk_moment_estimate(double p, long long n_samples, std::uint64_t seed);

struct ComparisonStats {
    double max_ratio = 0.0; // max of |z - w| / beta(z, w), scale = 1
    DiskPoint worst_z;
    DiskPoint worst_w;
    long long n_pairs = 0;
};

// Samples pairs uniformly by area and tracks the extremal Euclidean-to-
// hyperbolic distance ratio. The ratio is bounded by 2 for the whole disk.
ComparisonStats disk_comparison_stats(long long n_pairs, std::uint64_t seed);

} // namespace lipext
