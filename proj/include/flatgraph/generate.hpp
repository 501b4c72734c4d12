#pragma once

#include "flatgraph/crossings.hpp"

#include <cstdint>

namespace flatgraph {

/// Deterministic xorshift generator so fixtures and CLI output are
/// reproducible across platforms for a given --seed.
struct Rand {
    std::uint64_t state;

    explicit Rand(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

/// Stacked triangulation: start from K_4, repeatedly split a random face with
/// a new degree-3 vertex. Simple, 3-connected, all faces triangles.
PlaneMap random_triangulation(Rand& r, int vertices);

/// Connected plane map obtained from a random triangulation by deleting
/// random non-bridge edges down to at most max_edges; with allow_parallel,
/// some surviving edges gain a parallel copy drawn alongside them.
PlaneMap random_plane_map(Rand& r, int max_vertices, int max_edges,
                          bool allow_parallel = false);

/// Simple graph with the requested size, edges sampled without replacement.
AbstractGraph random_graph(Rand& r, int vertices, int edges);

/// Straight-line drawing of a random simple graph on distinct lattice points,
/// planarized. Crossing counts vary; callers filter by xi.
PlanarizeResult random_drawing(Rand& r, int vertices, int edges);

} // namespace flatgraph
