#pragma once

/**
 * Seeded example-space generators for the CLI and tests. Each returns a
 * SpaceSpec (the file payload) rather than a built space so the output can be
 * written verbatim; the same seed always yields the same bytes.
 */

#include <cstdint>

#include "lipext/io.hpp"

namespace lipext {

// n points with coordinates uniform in [0,1]^dim.
SpaceSpec gen_euclidean_random(int n, int dim, std::uint64_t seed);

// n points at 0, 1/(n-1), ..., 1 on the real line.
SpaceSpec gen_grid_1d(int n);

// Connected weighted graph: a random spanning tree plus extra edges until the
// average degree is reached; weights uniform in [0.1, 1.0].
SpaceSpec gen_graph_random(int n, double avg_degree, std::uint64_t seed);

// n points uniform by area in the unit disk (radius sqrt(u), angle uniform).
SpaceSpec gen_poincare_random(int n, std::uint64_t seed, double scale = 1.0);

} // namespace lipext
