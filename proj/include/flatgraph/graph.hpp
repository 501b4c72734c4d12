#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flatgraph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GenusError : Error { using Error::Error; };
struct MalformedRotation : Error { using Error::Error; };
struct LoopError : Error { using Error::Error; };
struct DisconnectedError : Error { using Error::Error; };
struct EmptyGraphError : Error { using Error::Error; };
struct NotSimpleError : Error { using Error::Error; };
struct MissingEdgeError : Error { using Error::Error; };
struct IsolatedVertexError : Error { using Error::Error; };
struct InvalidCertificateError : Error { using Error::Error; };
struct DegenerateGeometryError : Error { using Error::Error; };
struct BoundViolationError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };

/// Loopless undirected multigraph with a canonical (sorted) edge list.
struct AbstractGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges; // each {u,v} with u < v, list sorted

    static AbstractGraph make(int n, std::vector<std::pair<int, int>> edge_list);

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool is_simple() const;
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::vector<std::vector<int>> adjacency() const; // neighbor lists (with repeats for parallel edges)
    int component_count() const;
    bool connected() const { return component_count() <= 1; }

    bool operator==(const AbstractGraph&) const = default;
};

/// Brute-force vertex connectivity ≥ 3: connected and no cutset of size ≤ 2.
/// Complete graphs on ≤ 3 vertices do not count.
bool is_three_connected(const AbstractGraph& g);

/// True iff the two graphs are isomorphic. Backtracking search with degree
/// pruning; intended for the small certificate graphs handled here.
bool isomorphic(const AbstractGraph& a, const AbstractGraph& b);

/// Contract the given edges in sequence. Each pair must be an edge of the
/// current (partially contracted) graph; the merged vertex inherits the
/// smaller of the two labels, and labels are compacted at the end. The
/// result is simple: parallel edges collapse and loops vanish.
AbstractGraph contract_edges(const AbstractGraph& g,
                             const std::vector<std::pair<int, int>>& sequence);

/// Witness for "pattern is a topological minor of g": an injective map of
/// pattern vertices to branch vertices plus one path of g-vertices per
/// pattern edge.
struct SubdivisionWitness {
    std::vector<int> branch;                 // pattern vertex -> g vertex
    std::vector<std::vector<int>> paths;     // pattern edge -> vertex path in g
};

/// Checker only: true iff the witness paths exist in g, are internally
/// disjoint, avoid branch vertices internally, and realize pattern's edges.
bool contains_subdivision(const AbstractGraph& g, const AbstractGraph& pattern,
                          const SubdivisionWitness& witness);

} // namespace flatgraph
