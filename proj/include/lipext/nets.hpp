#pragma once

/**
 * Maximal t-separated subsets of a finite metric space.
 *
 * Boundary convention: separation is dist >= t, covering is dist < t. A point
 * at distance exactly t from every current member is added. Maximality of the
 * greedy result is equivalent to covering_radius < t.
 */

#include <utility>
#include <vector>

#include "lipext/metric_space.hpp"

namespace lipext {

struct SeparatedNet {
    double t = 0.0;
    std::vector<int> indices;      // seeds first (as given), then scan additions
    double covering_radius = 0.0;  // max over x of min distance to the net
};

// Single ascending-index pass: every point at distance >= t from all current
// members joins. Deterministic; the result is t-separated and maximal.
// Seeds must be pairwise >= t apart (SeedsTooClose otherwise).
SeparatedNet greedy_maximal_separated(const FiniteMetricSpace& space, double t,
                                      const std::vector<int>& seed_indices = {0});

struct NetReport {
    bool separation_ok = false;
    bool covering_ok = false;
    std::pair<int, int> worst_pair{-1, -1}; // closest net pair
    double worst_pair_dist = 0.0;
    int worst_uncovered = -1;               // point farthest from the net
    double worst_uncovered_dist = 0.0;
};

NetReport verify_net(const FiniteMetricSpace& space, const SeparatedNet& net);

} // namespace lipext
