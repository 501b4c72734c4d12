#pragma once

#include "flatgraph/constructions.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace flatgraph {

/// Subdivide every edge once: edge k becomes vertex n+k joined to both ends.
/// Doubles every wall-by-wall distance between original vertices.
PlaneMap subdivide_all_edges(const PlaneMap& m);

/// Drawing of g produced from a flat witness: subdivide the host, triangulate,
/// route g's edges as curves crossing at most 2^(8*lambda) host edges each.
struct NearlyPlanarDrawing {
    CrossedEmbedding embedding;
    std::vector<Point> vertex_points;           // per vertex of g
    std::vector<std::vector<Point>> polylines;  // per edge of g, from first to second
    int max_crossings = 0;
    boost::multiprecision::cpp_int bound;       // 2^(8*lambda)
};

/// Host components are drawn independently and placed side by side. A
/// witness with lambda = 1 (or a component carrying no edges of g) is drawn
/// straight-line and crossing-free. Requires g simple.
NearlyPlanarDrawing flat_to_nearly_planar(const AbstractGraph& g, const FlatWitness& w);

/// Both directions run on the same graph: the drawing is flattened, which
/// certifies lambda_derived/2 <= xi_given, and the witness is drawn, which
/// certifies xi_derived <= 2^(8*lambda_given). The achieved values are the
/// minima over given and derived, reported as upper bounds.
struct EquivalenceCertificate {
    AbstractGraph graph;
    int lambda_given = 0;      // from the supplied witness
    int xi_given = 0;          // max crossings of the supplied drawing
    int lambda_derived = 0;    // witness recovered from the drawing
    int xi_derived = 0;        // drawing recovered from the witness
    int lambda_achieved = 0;
    int xi_achieved = 0;
    boost::multiprecision::cpp_int xi_upper;    // 2^(8*lambda_achieved)
    bool bounds_hold = false;
};

EquivalenceCertificate certify_equivalence(const AbstractGraph& g, const FlatWitness& w,
                                           const CrossedEmbedding& drawing);

/// Convex-position drawing of K_n run through keep_crossed_gadget. The
/// gadget graph is 2-flat yet contains a K_n subdivision: branch vertices
/// are the original n, each pattern edge walks through its subdivision
/// vertices along the kept edges and crossing diagonals.
struct TopologicalMinorGadget {
    AbstractGraph graph;             // the gadget
    FlatWitness witness;             // lambda = 2
    SubdivisionWitness subdivision;  // of complete_pattern
    AbstractGraph complete_pattern;  // K_n
    TransformationRecord record;
    std::vector<std::pair<int, int>> diagonals;
};

TopologicalMinorGadget gadget_topological_minor(int n, std::uint64_t seed = 1);

/// Square of the 2n x 2n grid. 2-flat over the grid, yet an explicit
/// contraction schedule collapses it onto a spanning K_{n,n} (classes: the
/// even-parity cells of each row pair, the odd-parity cells of each column
/// pair) and a further n merges reach K_n.
struct ContractionGadget {
    PlaneMap grid;
    AbstractGraph graph;                              // grid squared
    FlatWitness witness;                              // lambda = 2
    std::vector<int> class_of;                        // grid cell -> class 0..2n-1 (rows first)
    std::vector<std::pair<int, int>> schedule;        // contractions to the 2n-vertex quotient
    AbstractGraph bipartite_quotient;                 // contains spanning K_{n,n}
    std::vector<std::pair<int, int>> merge_schedule;  // further contractions to n vertices
    AbstractGraph complete_quotient;                  // equals K_n
};

ContractionGadget gadget_contraction(int n);

/// Planarity coincides with 1-flatness: a planar graph is 1-flat over its
/// own embedding, and a 1-flat host would itself be a planar supergraph.
/// Returns whether the two sides agree (validating the witness when planar).
bool lambda_is_one_iff_planar(const AbstractGraph& g);

} // namespace flatgraph
