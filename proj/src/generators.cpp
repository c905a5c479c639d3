#include "lipext/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "lipext/errors.hpp"
#include "lipext/rng.hpp"

namespace lipext {

SpaceSpec gen_euclidean_random(int n, int dim, std::uint64_t seed) {
    if (n < 1) throw BadParameters("point count must be at least 1");
    if (dim < 1) throw BadParameters("dimension must be at least 1");

    auto rng = make_rng(seed);
    SpaceSpec spec;
    spec.kind = OriginKind::euclidean;
    spec.coords.assign(n, std::vector<double>(dim));
    for (auto& point : spec.coords)
        for (double& c : point) c = uniform_unit(rng);
    return spec;
}

SpaceSpec gen_grid_1d(int n) {
    if (n < 1) throw BadParameters("point count must be at least 1");

    SpaceSpec spec;
    spec.kind = OriginKind::euclidean;
    spec.coords.reserve(n);
    if (n == 1) {
        spec.coords.push_back({0.0});
        return spec;
    }
    for (int k = 0; k < n; ++k)
        spec.coords.push_back({static_cast<double>(k) / static_cast<double>(n - 1)});
    return spec;
}

SpaceSpec gen_graph_random(int n, double avg_degree, std::uint64_t seed) {
    if (n < 1) throw BadParameters("vertex count must be at least 1");
    if (!std::isfinite(avg_degree) || avg_degree < 0.0)
        throw BadParameters("average degree must be non-negative");

    auto rng = make_rng(seed);
    SpaceSpec spec;
    spec.kind = OriginKind::graph;
    spec.graph_n = n;
    if (n == 1) return spec; // one vertex, no edges

    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    long long target = std::llround(avg_degree * n / 2.0);
    target = std::clamp(target, static_cast<long long>(n - 1), max_edges);

    // Random spanning tree first, so the graph is connected by construction.
    std::set<std::pair<int, int>> used;
    for (int v = 1; v < n; ++v) {
        const int u = uniform_index(rng, v);
        spec.edges.push_back({u, v, uniform_in(rng, 0.1, 1.0)});
        used.insert({u, v});
    }

    // Top up with distinct random edges. The attempt cap only matters for
    // near-complete targets, where free slots are scarce.
    long long attempts = 0;
    const long long max_attempts = 100 * std::max<long long>(target, 100);
    while (static_cast<long long>(spec.edges.size()) < target && attempts < max_attempts) {
        ++attempts;
        int u = uniform_index(rng, n);
        int v = uniform_index(rng, n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (!used.insert({u, v}).second) continue;
        spec.edges.push_back({u, v, uniform_in(rng, 0.1, 1.0)});
    }
    return spec;
}

SpaceSpec gen_poincare_random(int n, std::uint64_t seed, double scale) {
    if (n < 1) throw BadParameters("point count must be at least 1");
    if (!std::isfinite(scale) || scale <= 0.0)
        throw NonpositiveInput("hyperbolic scale must be positive");

    auto rng = make_rng(seed);
    SpaceSpec spec;
    spec.kind = OriginKind::poincare_disk;
    spec.scale = scale;
    spec.points.reserve(n);
    for (int i = 0; i < n; ++i) spec.points.push_back(sample_disk_uniform(rng));
    return spec;
}

} // namespace lipext
