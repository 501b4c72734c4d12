#pragma once

#include "flatgraph/crossings.hpp"
#include "flatgraph/wbw.hpp"

namespace flatgraph {

/// Crossing elimination on a drawn graph: each crossed edge is subdivided
/// once between consecutive crossings, every crossing is replaced by the
/// 4-cycle on its four neighboring nodes, and the crossing segments are
/// deleted. Original vertices keep their ids (the injection is the identity).
struct TransformationRecord {
    PlaneMap output;
    int original_vertex_count = 0;
    std::vector<std::array<int, 4>> crossing_cycles; // per crossing, cycle vertices in rotation order
    std::vector<std::pair<int, int>> deleted_pairs;  // per crossing, the two original edge ids
    std::vector<std::vector<int>> subdivision_map;   // original edge -> subdivision vertices in trail order
    std::vector<int> kept_edge_of;                   // original edge -> output edge id, -1 if deleted
};

/// Throws LoopError when two edges sharing an endpoint cross (the cycle
/// would need a loop).
TransformationRecord plane_transformation(const CrossedEmbedding& ce);

/// A drawing with at most xi crossings per edge yields a 2*xi-flat witness
/// over the transformed plane map (lambda = 1 when crossing-free).
FlatWitness nearly_planar_to_flat(const CrossedEmbedding& ce);

/// The gadget graph: transformation output plus, per crossing, the two
/// diagonals of its cycle (the crossed segments kept as direct edges).
/// 2-flat over the plain transformation output.
struct GadgetResult {
    AbstractGraph graph;
    FlatWitness witness;                        // lambda = 2 (1 when crossing-free)
    TransformationRecord record;
    std::vector<std::pair<int, int>> diagonals; // two per crossing, along-edge pairs
};

GadgetResult keep_crossed_gadget(const CrossedEmbedding& ce);

/// Saturation: one new degree-3 neighbor of v inside each corner of v
/// (two for a degree-1 vertex, three for the single-vertex graph), and the
/// new vertices of each face joined into a cycle. Simple, plane, 3-connected.
struct SaturationRecord {
    PlaneMap map;                           // original vertices and edges keep their ids
    int original_vertex_count = 0;
    int original_edge_count = 0;
    std::vector<std::vector<int>> added_at; // original vertex -> its new neighbors, rotation order
};

SaturationRecord saturate(const PlaneMap& h);

/// Triangulation: the saturated map plus one radial edge per corner into a
/// new vertex at each face center. Simple, 3-connected, all faces triangles.
struct TriangulationRecord {
    SaturationRecord saturation;
    PlaneMap map;
    int original_vertex_count = 0;  // injection is the identity
    int original_edge_count = 0;
    int saturated_vertex_count = 0; // vertices >= this are face vertices
    std::vector<int> face_vertex;   // saturated-map face -> triangulation vertex
};

TriangulationRecord triangulate(const PlaneMap& h);

/// Lift a wall-by-wall walk of the input map into the triangulation: between
/// each attached pair insert the corner spoke at the shared vertex and the
/// two radial edges flanking it. Output length is exactly 4l-3.
WbwCertificate lift_wbw_path(const TriangulationRecord& rec, const WbwCertificate& cert);

/// Exact barycentric layout. Outer-face vertices go on a convex polygon of
/// rational circle points in face-trace order; interior vertices sit at the
/// average of their neighbors. The result is verified exactly: every face
/// must be strictly convex with the orientation its trace direction demands.
std::vector<Point> tutte_layout(const PlaneMap& m, int outer_face = 0);

/// Drawing of a power of a triangulation: host edges straight, each new
/// edge routed along its shortest wbw walk, crossing one host edge per
/// interior walk edge; new/new crossings follow boundary interleaving of the
/// per-edge waypoint order. Per-edge crossing counts are asserted <= 2^lambda.
struct DrawPowerResult {
    AbstractGraph power;           // the drawn graph (host edges plus routed pairs)
    int host_edge_count = 0;
    CrossedEmbedding embedding;    // original_edges: host edges first, then routed pairs
    Drawing drawing;
    std::vector<int> internal_counts; // parallel to embedding.original_edges
    int lambda = 0;
    long long bound = 0;           // 2^lambda
    int max_count = 0;
    int max_old_count = 0;
    int max_new_count = 0;
    int pair_multiplicity_max = 0; // crossings between the worst pair of routed edges
    // reported-only statistics from the finer counting (lambda >= 3), -1 otherwise
    long long reported_new_edge_bound = -1; // (l-1)*(3l-6)*2^(l-3)
    long long reported_old_edge_bound = -1; // (l-3)*2^(l-2) + 1
};

/// restrict_new: route only these non-host pairs (each must lie in the
/// lambda-power); by default every new pair of the power is routed.
DrawPowerResult draw_power(const PlaneMap& h_delta, int lambda,
                           const std::vector<std::pair<int, int>>* restrict_new = nullptr);

} // namespace flatgraph
