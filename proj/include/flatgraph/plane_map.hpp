#pragma once

#include "flatgraph/graph.hpp"

#include <optional>

namespace flatgraph {

/// Crossing-free sphere embedding of a loopless multigraph, given as a
/// rotation system. Edge k owns darts 2k (leaving edges[k].first) and 2k+1
/// (leaving edges[k].second); twin(d) = d^1. Rotations list outgoing darts
/// counterclockwise. Faces are traced with next(d) = rot_next(twin(d)), so
/// each face keeps its interior on the right of its darts (the unbounded
/// face is the one traced counterclockwise in a drawing).
struct PlaneMap {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rotation;  // vertex -> cyclic dart list (ccw)

    // filled by build_plane_map
    std::vector<int> dart_face;              // dart -> face id
    std::vector<std::vector<int>> faces;     // face -> dart cycle
    std::vector<int> rot_pos;                // dart -> index within rotation[origin]
    int components = 0;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int dart_count() const { return 2 * edge_count(); }
    int face_count() const { return static_cast<int>(faces.size()); }
    int edge_of(int d) const { return d / 2; }
    int twin(int d) const { return d ^ 1; }
    int origin(int d) const { return d % 2 == 0 ? edges[d / 2].first : edges[d / 2].second; }
    int head(int d) const { return origin(twin(d)); }
    int degree(int v) const { return static_cast<int>(rotation[v].size()); }

    int rot_next(int d) const {
        const auto& r = rotation[origin(d)];
        return r[(rot_pos[d] + 1) % r.size()];
    }
    int rot_prev(int d) const {
        const auto& r = rotation[origin(d)];
        return r[(rot_pos[d] + r.size() - 1) % r.size()];
    }
    int face_next(int d) const { return rot_next(twin(d)); }

    AbstractGraph graph() const { return AbstractGraph::make(vertex_count, edges); }
    bool is_simple() const;
};

/// Trace faces and validate the rotation system. Rejects loops, malformed
/// rotations, and any system whose face count violates the sphere Euler
/// relation V - E + F = 1 + #components.
PlaneMap build_plane_map(int vertex_count, std::vector<std::pair<int, int>> edges,
                         std::vector<std::vector<int>> rotation);

struct DualResult {
    PlaneMap map;                              // one dual vertex per primal face
    std::vector<int> face_to_primal_vertex;    // dual face -> primal vertex
};

/// Geometric dual of a connected bridgeless map. A bridge would demand a
/// loop in the dual, which this representation bans.
DualResult dual(const PlaneMap& m);

struct RadialResult {
    PlaneMap map;                       // bipartite: primal vertices, then face vertices
    int primal_vertex_count = 0;        // radial vertex i < this is primal vertex i
    std::vector<int> face_vertex;       // primal face f -> radial vertex id
};

/// Vertex-face incidence map built from corners (darts). One radial edge per
/// corner, doubled where the corner sits at a degree-1 vertex.
RadialResult radial(const PlaneMap& m);

struct MedialResult {
    PlaneMap map;                       // one medial vertex per radial face
    std::vector<int> vertex_face;       // primal vertex -> face of the medial map
};

/// Medial graph, computed as dual(radial(m)).
MedialResult medial(const PlaneMap& m);

struct ComponentSplit {
    std::vector<PlaneMap> maps;   // one per component, vertices relabeled
    std::vector<int> comp_of;     // original vertex -> component index
    std::vector<int> local_id;    // original vertex -> vertex in its component map
};

/// Split a map into its connected components (isolated vertices become
/// single-vertex maps).
ComponentSplit split_components(const PlaneMap& m);

/// Planarity test. On success the witness rotation system passes
/// build_plane_map; on failure nullopt.
std::optional<PlaneMap> planar_embedding(const AbstractGraph& g);
bool is_planar(const AbstractGraph& g);

} // namespace flatgraph
