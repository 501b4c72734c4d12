#pragma once

#include "flatgraph/plane_map.hpp"

#include <optional>
#include <string>

namespace flatgraph {

/// Edge sequence witnessing a wall-by-wall distance claim between x and y:
/// pairwise distinct edges, the first incident to x, the last incident to y,
/// consecutive ones attached in the host map.
struct WbwCertificate {
    int x = -1, y = -1;
    std::vector<int> edges;

    int length() const { return static_cast<int>(edges.size()); }
};

/// True iff e and f share a vertex at which their darts are cyclically
/// consecutive in the rotation. Consecutiveness is invariant under reversal,
/// so "or its inverse" needs no separate case. At a degree-2 vertex the two
/// incident edges are consecutive in the 2-element cyclic order.
bool attached(const PlaneMap& m, int e, int f);

/// Edge-attachment adjacency: for each edge, the edges attached to it.
std::vector<std::vector<int>> attachment_lists(const PlaneMap& m);

bool check_certificate(const PlaneMap& m, const WbwCertificate& cert,
                       std::string* why = nullptr);

/// Shortest (x,y)-wbw-walk via BFS over the edge-attachment graph, seeded
/// with the edges at x. nullopt when x and y lie in different components.
/// Ties broken by edge index so certificates are reproducible.
std::optional<WbwCertificate> wbw_distance(const PlaneMap& m, int x, int y);

/// Independent oracle: 1 + min distance in the medial graph between the
/// boundaries of the faces corresponding to x and y. Cross-check only; the
/// edge BFS above is the implementation of record. Requires a connected map.
std::optional<int> wbw_distance_via_medial(const PlaneMap& m, int x, int y);

/// All-sources wbw distances: result[x][y] = wbw(x,y), -1 when infinite.
/// The parallel kernel fans out per source vertex; the serial variant is the
/// reference it is tested and benchmarked against.
std::vector<std::vector<int>> wbw_all_pairs(const PlaneMap& m);
std::vector<std::vector<int>> wbw_all_pairs_serial(const PlaneMap& m);

/// H^lambda: simple graph on V(H) joining x,y iff {x,y} in E(H) or
/// wbw_H(x,y) <= lambda.
AbstractGraph lambda_power(const PlaneMap& host, int lambda);
AbstractGraph lambda_power_serial(const PlaneMap& host, int lambda);

/// Host map, injection and per-edge certificates proving G a subgraph of
/// host^lambda.
struct FlatWitness {
    PlaneMap host;                 // simple plane map
    std::vector<int> tau;          // vertex of G -> vertex of host, injective
    int lambda = 1;
    struct EdgeCert {
        bool host_edge = false;    // {tau(x),tau(y)} is an edge of the host
        WbwCertificate cert;       // otherwise: wbw walk of length <= lambda
    };
    std::vector<EdgeCert> edge_certs; // parallel to g.edges
};

/// Validates the whole witness; on failure reports the first violation.
bool check_flat_witness(const AbstractGraph& g, const FlatWitness& w,
                        std::string* why = nullptr);

} // namespace flatgraph
