#pragma once

#include "flatgraph/geometry.hpp"
#include "flatgraph/plane_map.hpp"

#include <array>
#include <cstdint>

namespace flatgraph {

/// A drawing with crossings, stored as its planarization. Planarization
/// vertices below original_vertex_count are the original vertices; the rest
/// are crossing points, each of degree 4 with the two trail segments on
/// opposite darts.
struct CrossedEmbedding {
    PlaneMap planarization;
    int original_vertex_count = 0;
    std::vector<int> crossing_vertices;
    std::vector<std::array<int, 4>> crossing_darts; // rotation order; (0,2) and (1,3) paired
    std::vector<std::vector<int>> edge_trails;      // original edge -> planarization dart trail
    std::vector<std::pair<int, int>> original_edges;

    int crossing_count() const { return static_cast<int>(crossing_vertices.size()); }
    AbstractGraph original_graph() const {
        return AbstractGraph::make(original_vertex_count, original_edges);
    }
};

/// Planarization-vertex coordinates plus the per-edge polylines through the
/// recorded crossing points, unit-square normalized.
struct Drawing {
    std::vector<Point> coords;                 // per planarization vertex
    std::vector<std::vector<Point>> polylines; // per original edge
};

/// Core assembly: given exact vertex coordinates and one polyline per edge
/// (endpoints matching the edge's vertices), find all pairwise crossings,
/// split, and build the planarization with rotations from exact angular
/// order. Throws DegenerateGeometryError on triple points, tangencies,
/// overlaps, or an edge through a vertex. Pairwise meeting tests run in
/// parallel; results are ordered canonically before assembly.
CrossedEmbedding assemble_crossed_embedding(int vertex_count,
                                            const std::vector<std::pair<int, int>>& edges,
                                            const std::vector<Point>& vertex_points,
                                            const std::vector<std::vector<Point>>& polylines,
                                            bool parallel = true,
                                            std::vector<Point>* node_points_out = nullptr);

/// Normalized coordinates/polylines for an assembled embedding.
Drawing make_drawing(const CrossedEmbedding& ce, const std::vector<Point>& planarization_points);

struct PlanarizeResult {
    CrossedEmbedding embedding;
    Drawing drawing;
    std::uint64_t seed_used = 0; // seed of the jitter round that succeeded
};

/// Straight-line ingestion. Degenerate inputs (triple points, crossings at
/// vertices, overlaps) are retried under deterministic jitter derived from
/// the seed; gives up after a bounded number of rounds.
PlanarizeResult planarize(const std::vector<Point>& vertices,
                          const std::vector<std::pair<int, int>>& edges,
                          std::uint64_t seed = 1);

struct CrossingCounts {
    std::vector<int> per_edge;
    int max = 0; // the embedding's xi
};

CrossingCounts crossings_per_edge(const CrossedEmbedding& ce);

/// Independent geometric recount from a Drawing alone: exact pairwise
/// polyline intersection, no use of the combinatorial structure.
CrossingCounts recount_from_drawing(const std::vector<std::pair<int, int>>& edges,
                                    const Drawing& d);

/// Pach-Toth necessary condition: |E| <= 4.108 * sqrt(xi) * |V|, evaluated
/// in exact integer arithmetic.
bool check_sparsity(const AbstractGraph& g, int xi);

} // namespace flatgraph
