#include "doctest.h"
#include "helpers.hpp"

#include "flatgraph/plane_map.hpp"

#include <algorithm>
#include <set>

using namespace flatgraph;
using namespace flatgraph::testing;

namespace {

void check_invariants(const PlaneMap& m) {
    // faces partition the darts and face_next walks each cycle
    std::vector<int> seen(m.dart_count(), 0);
    for (int f = 0; f < m.face_count(); ++f) {
        const auto& cyc = m.faces[f];
        REQUIRE(!cyc.empty());
        for (size_t i = 0; i < cyc.size(); ++i) {
            int d = cyc[i];
            ++seen[d];
            CHECK(m.dart_face[d] == f);
            CHECK(m.face_next(d) == cyc[(i + 1) % cyc.size()]);
        }
    }
    for (int d = 0; d < m.dart_count(); ++d) CHECK(seen[d] == 1);
    // every edged component is a sphere: V - E + F sums to 2 per such
    // component, isolated vertices add 1 apiece
    int isolated = 0;
    for (int v = 0; v < m.vertex_count; ++v)
        if (m.degree(v) == 0) ++isolated;
    int edged = m.components - isolated;
    CHECK(m.vertex_count - m.edge_count() + m.face_count() == 2 * edged + isolated);
}

} // namespace

TEST_CASE("triangle map") {
    PlaneMap m = cycle_map(3);
    CHECK(m.vertex_count == 3);
    CHECK(m.edge_count() == 3);
    CHECK(m.face_count() == 2);
    CHECK(m.components == 1);
    check_invariants(m);
    for (const auto& f : m.faces) CHECK(f.size() == 3);
}

TEST_CASE("path and star maps") {
    PlaneMap p = path_map(4);
    CHECK(p.face_count() == 1);
    check_invariants(p);

    PlaneMap s = star_map(6);
    CHECK(s.face_count() == 1);
    CHECK(s.faces[0].size() == 12);
    check_invariants(s);
}

TEST_CASE("k4 embedding") {
    auto m = planar_embedding(complete_graph(4));
    REQUIRE(m.has_value());
    CHECK(m->face_count() == 4);
    check_invariants(*m);
    for (const auto& f : m->faces) CHECK(f.size() == 3);
}

TEST_CASE("octahedron and icosahedron embed as triangulations") {
    for (auto g : {octahedron_graph(), icosahedron_graph()}) {
        auto m = planar_embedding(g);
        REQUIRE(m.has_value());
        check_invariants(*m);
        CHECK(m->face_count() == 2 * g.vertex_count - 4);
        for (const auto& f : m->faces) CHECK(f.size() == 3);
    }
}

TEST_CASE("nonplanar graphs have no embedding") {
    CHECK(!is_planar(complete_graph(5)));
    CHECK(!is_planar(complete_bipartite(3, 3)));
    CHECK(is_planar(complete_graph(4)));
    CHECK(is_planar(octahedron_graph()));
}

TEST_CASE("k5 convex rotation violates the sphere relation") {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) edges.emplace_back(i, j);
    // neighbors in convex-position circular order around each vertex
    std::vector<std::vector<int>> rot(5);
    auto dart_to = [&](int u, int v) {
        for (size_t k = 0; k < edges.size(); ++k) {
            if (edges[k] == std::pair(u, v)) return 2 * static_cast<int>(k);
            if (edges[k] == std::pair(v, u)) return 2 * static_cast<int>(k) + 1;
        }
        REQUIRE(false);
        return -1;
    };
    for (int i = 0; i < 5; ++i)
        for (int s = 1; s < 5; ++s) rot[i].push_back(dart_to(i, (i + s) % 5));
    CHECK_THROWS_AS(build_plane_map(5, edges, rot), GenusError);
}

TEST_CASE("build rejects bad input") {
    CHECK_THROWS_AS(build_plane_map(1, {{0, 0}}, {{0, 1}}), LoopError);
    // dart listed twice
    CHECK_THROWS_AS(build_plane_map(2, {{0, 1}}, {{0, 0}, {1}}), MalformedRotation);
    // dart at the wrong vertex
    CHECK_THROWS_AS(build_plane_map(2, {{0, 1}}, {{1}, {0}}), MalformedRotation);
    // missing dart
    CHECK_THROWS_AS(build_plane_map(2, {{0, 1}}, {{0}, {}}), MalformedRotation);
}

TEST_CASE("disconnected maps trace per component") {
    // two disjoint triangles
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rot(6);
    for (int c = 0; c < 2; ++c) {
        int base = 3 * c;
        for (int i = 0; i < 3; ++i)
            edges.emplace_back(base + i, base + (i + 1) % 3);
        for (int i = 0; i < 3; ++i) {
            int e = 3 * c + i, prev = 3 * c + (i + 2) % 3;
            rot[base + i] = {2 * e, 2 * prev + 1};
        }
    }
    PlaneMap m = build_plane_map(6, edges, rot);
    CHECK(m.components == 2);
    CHECK(m.face_count() == 4);
    check_invariants(m);
}

TEST_CASE("dual of the triangle") {
    DualResult d = dual(cycle_map(3));
    CHECK(d.map.vertex_count == 2);
    CHECK(d.map.edge_count() == 3);
    CHECK(d.map.face_count() == 3);
    check_invariants(d.map);
    for (auto [u, v] : d.map.edges) CHECK(((u == 0 && v == 1) || (u == 1 && v == 0)));
    // each dual face is a bigon standing for one primal vertex
    std::set<int> prim(d.face_to_primal_vertex.begin(), d.face_to_primal_vertex.end());
    CHECK(prim == std::set<int>{0, 1, 2});
}

TEST_CASE("dual rejects bridges") {
    CHECK_THROWS_AS(dual(path_map(2)), LoopError);
    CHECK_THROWS_AS(dual(star_map(3)), LoopError);
}

TEST_CASE("dual of dual is the original") {
    auto roundtrip = [](const PlaneMap& m) {
        DualResult d = dual(m);
        DualResult dd = dual(d.map);
        CHECK(dd.map.vertex_count == m.vertex_count);
        CHECK(dd.map.face_count() == m.face_count());
        CHECK(isomorphic(dd.map.graph(), m.graph()));
        check_invariants(dd.map);
    };
    roundtrip(cycle_map(3));
    roundtrip(cycle_map(7));
    roundtrip(*planar_embedding(complete_graph(4)));
    roundtrip(*planar_embedding(octahedron_graph()));
}

TEST_CASE("radial of the triangle is K32") {
    RadialResult r = radial(cycle_map(3));
    CHECK(r.map.vertex_count == 5);
    CHECK(r.primal_vertex_count == 3);
    CHECK(r.map.edge_count() == 6);
    check_invariants(r.map);
    CHECK(isomorphic(r.map.graph(), complete_bipartite(3, 2)));
    for (const auto& f : r.map.faces) CHECK(f.size() == 4);
}

TEST_CASE("radial doubles corners at degree-one vertices") {
    RadialResult r = radial(path_map(2));
    CHECK(r.map.vertex_count == 3);
    CHECK(r.map.edge_count() == 4);
    check_invariants(r.map);
    // each doubled corner closes a bigon; the rest is one quad
    std::multiset<size_t> lens;
    for (const auto& f : r.map.faces) lens.insert(f.size());
    CHECK(lens == std::multiset<size_t>{2, 2, 4});

    RadialResult s = radial(star_map(4));
    // one corner per dart, leaf corners doubled
    CHECK(s.map.edge_count() == 8 + 4);
    check_invariants(s.map);
    int bigons = 0, quads = 0;
    for (const auto& f : s.map.faces) {
        if (f.size() == 2) ++bigons;
        if (f.size() == 4) ++quads;
    }
    CHECK(bigons == 4);
    CHECK(quads == 4);
    CHECK(s.map.face_count() == 8);
}

TEST_CASE("radial of k4") {
    RadialResult r = radial(*planar_embedding(complete_graph(4)));
    CHECK(r.map.vertex_count == 8);
    CHECK(r.map.edge_count() == 12);
    check_invariants(r.map);
    for (const auto& f : r.map.faces) CHECK(f.size() == 4);
    // bipartite between primal and face vertices
    for (auto [u, v] : r.map.edges)
        CHECK(((u < 4) != (v < 4)));
}

TEST_CASE("medial of k4 is the octahedron") {
    MedialResult med = medial(*planar_embedding(complete_graph(4)));
    CHECK(med.map.vertex_count == 6);
    CHECK(med.map.edge_count() == 12);
    check_invariants(med.map);
    CHECK(isomorphic(med.map.graph(), octahedron_graph()));
    // the face assigned to each primal vertex has one side per incident edge
    for (int v = 0; v < 4; ++v)
        CHECK(med.map.faces[med.vertex_face[v]].size() == 3);
}

TEST_CASE("medial of a cycle doubles it") {
    MedialResult med = medial(cycle_map(5));
    CHECK(med.map.vertex_count == 5);
    CHECK(med.map.edge_count() == 10);
    check_invariants(med.map);
    for (int v = 0; v < 5; ++v)
        CHECK(med.map.faces[med.vertex_face[v]].size() == 2);
}

TEST_CASE("medial of the two-vertex path") {
    // frozen regression: the doubled radial corners make the single primal
    // edge yield three medial vertices (one per radial face), not one
    MedialResult med = medial(path_map(2));
    CHECK(med.map.vertex_count == 3);
    CHECK(med.map.edge_count() == 4);
    check_invariants(med.map);
    CHECK(med.map.faces[med.vertex_face[0]].size() == 2);
    CHECK(med.map.faces[med.vertex_face[1]].size() == 2);
}

TEST_CASE("radial rejects isolated vertices and edgeless maps") {
    PlaneMap lonely = build_plane_map(3, {{0, 1}}, {{0}, {1}, {}});
    CHECK_THROWS_AS(radial(lonely), IsolatedVertexError);
    PlaneMap empty = build_plane_map(2, {}, {{}, {}});
    CHECK_THROWS_AS(radial(empty), EmptyGraphError);
}

TEST_CASE("contract edges") {
    AbstractGraph c6 = AbstractGraph::make(
        6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    AbstractGraph c3 = contract_edges(c6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK(isomorphic(c3, AbstractGraph::make(3, {{0, 1}, {1, 2}, {0, 2}})));

    AbstractGraph k4 = complete_graph(4);
    AbstractGraph t = contract_edges(k4, {{0, 1}});
    CHECK(isomorphic(t, AbstractGraph::make(3, {{0, 1}, {1, 2}, {0, 2}})));

    CHECK_THROWS_AS(contract_edges(c6, {{0, 2}}), MissingEdgeError);
}

TEST_CASE("subdivision witness checking") {
    // K4 subdivided on one edge
    AbstractGraph g = AbstractGraph::make(
        5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {4, 3}, {2, 3}});
    AbstractGraph k4 = complete_graph(4);
    SubdivisionWitness w;
    w.branch = {0, 1, 2, 3};
    w.paths = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4, 3}, {2, 3}};
    CHECK(contains_subdivision(g, k4, w));

    SubdivisionWitness bad = w;
    bad.paths[4] = {1, 3}; // no such edge
    CHECK(!contains_subdivision(g, k4, bad));

    bad = w;
    bad.paths[4] = {1, 0, 3}; // reuses a branch vertex internally
    CHECK(!contains_subdivision(g, k4, bad));
}
