#include "doctest.h"
#include "helpers.hpp"

#include "flatgraph/crossings.hpp"

#include <algorithm>

using namespace flatgraph;
using namespace flatgraph::testing;

namespace {

std::vector<std::vector<Point>> straight(const std::vector<Point>& pts,
                                         const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<Point>> out;
    for (auto [u, v] : edges) out.push_back({pts[u], pts[v]});
    return out;
}

} // namespace

TEST_CASE("orientation and on-segment") {
    CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == 1);
    CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == -1);
    CHECK(orientation({0, 0}, {2, 2}, {5, 5}) == 0);
    CHECK(point_on_segment({1, 1}, {0, 0}, {2, 2}));
    CHECK(point_on_segment({0, 0}, {0, 0}, {2, 2}));
    CHECK(!point_on_segment({3, 3}, {0, 0}, {2, 2}));
    CHECK(!point_on_segment({1, 0}, {0, 0}, {2, 2}));
}

TEST_CASE("counterclockwise angular order") {
    std::vector<Point> dirs = {{1, 0}, {1, 1}, {0, 1}, {-1, 1},
                               {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
    for (size_t i = 0; i < dirs.size(); ++i)
        for (size_t j = 0; j < dirs.size(); ++j)
            CHECK(angle_less(dirs[i], dirs[j]) == (i < j));
}

TEST_CASE("segment meetings") {
    auto m = meet_segments({0, 0}, {2, 2}, {0, 2}, {2, 0});
    REQUIRE(m.kind == SegmentMeeting::AtPoint);
    CHECK(m.p == Point{1, 1});
    CHECK(m.t1 == Rational(1, 2));
    CHECK(m.t2 == Rational(1, 2));

    CHECK(meet_segments({0, 0}, {1, 0}, {0, 1}, {1, 1}).kind == SegmentMeeting::None);
    CHECK(meet_segments({0, 0}, {1, 1}, {2, 2}, {3, 3}).kind == SegmentMeeting::None);
    CHECK(meet_segments({0, 0}, {2, 2}, {1, 1}, {3, 3}).kind == SegmentMeeting::Overlap);

    auto touch = meet_segments({0, 0}, {1, 1}, {1, 1}, {2, 0});
    REQUIRE(touch.kind == SegmentMeeting::AtPoint);
    CHECK(touch.p == Point{1, 1});
    CHECK(touch.t1 == 1);
    CHECK(touch.t2 == 0);

    auto vert = meet_segments({0, 0}, {0, 2}, {0, 2}, {0, 5});
    CHECK(vert.kind == SegmentMeeting::AtPoint);
    CHECK(vert.p == Point{0, 2});
}

TEST_CASE("assembling a single crossing") {
    std::vector<Point> pts = {{0, 0}, {2, 2}, {0, 2}, {2, 0}};
    std::vector<std::pair<int, int>> edges = {{0, 1}, {2, 3}};
    auto ce = assemble_crossed_embedding(4, edges, pts, straight(pts, edges));
    CHECK(ce.crossing_count() == 1);
    CHECK(ce.original_vertex_count == 4);
    CHECK(ce.planarization.vertex_count == 5);
    CHECK(ce.planarization.edge_count() == 4);
    CHECK(ce.planarization.face_count() == 1);
    int c = ce.crossing_vertices[0];
    CHECK(ce.planarization.degree(c) == 4);
    // opposite darts continue the same original edge
    auto& cd = ce.crossing_darts[0];
    auto trail_of = [&](int dart) {
        for (size_t e = 0; e < ce.edge_trails.size(); ++e)
            for (int d : ce.edge_trails[e])
                if (d == dart || ce.planarization.twin(d) == dart)
                    return static_cast<int>(e);
        return -1;
    };
    CHECK(trail_of(cd[0]) == trail_of(cd[2]));
    CHECK(trail_of(cd[1]) == trail_of(cd[3]));
    CHECK(trail_of(cd[0]) != trail_of(cd[1]));
    for (const auto& t : ce.edge_trails) CHECK(t.size() == 2);
    CHECK(ce.original_graph() == AbstractGraph::make(4, edges));
}

TEST_CASE("convex k4 has one crossing") {
    std::vector<Point> pts = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    auto k4 = complete_graph(4);
    auto ce = assemble_crossed_embedding(4, k4.edges, pts, straight(pts, k4.edges));
    CHECK(ce.crossing_count() == 1);
    auto counts = crossings_per_edge(ce);
    CHECK(counts.max == 1);
    CHECK(std::count(counts.per_edge.begin(), counts.per_edge.end(), 1) == 2);
    // planarization: 5 vertices, 8 edges, Euler forces 5 faces
    CHECK(ce.planarization.vertex_count == 5);
    CHECK(ce.planarization.edge_count() == 8);
    CHECK(ce.planarization.face_count() == 5);
}

TEST_CASE("convex k5 is the pentagram") {
    std::vector<Point> pts = {{0, 0}, {4, 0}, {6, 4}, {2, 7}, {-2, 4}};
    auto k5 = complete_graph(5);
    auto ce = assemble_crossed_embedding(5, k5.edges, pts, straight(pts, k5.edges));
    CHECK(ce.crossing_count() == 5);
    auto counts = crossings_per_edge(ce);
    CHECK(counts.max == 2);
    int hull = 0, diag = 0;
    for (int c : counts.per_edge) {
        if (c == 0) ++hull;
        if (c == 2) ++diag;
    }
    CHECK(hull == 5);
    CHECK(diag == 5);
}

TEST_CASE("recount from drawing agrees with the embedding") {
    std::vector<Point> pts = {{0, 0}, {4, 0}, {6, 4}, {2, 7}, {-2, 4}};
    auto k5 = complete_graph(5);
    std::vector<Point> nodes;
    auto ce = assemble_crossed_embedding(5, k5.edges, pts, straight(pts, k5.edges),
                                         true, &nodes);
    Drawing d = make_drawing(ce, nodes);
    auto a = crossings_per_edge(ce);
    auto b = recount_from_drawing(k5.edges, d);
    CHECK(a.per_edge == b.per_edge);
    CHECK(a.max == b.max);
}

TEST_CASE("degenerate inputs are rejected") {
    // three segments through one point
    std::vector<Point> pts = {{0, 0}, {2, 2}, {0, 2}, {2, 0}, {1, 0}, {1, 2}};
    std::vector<std::pair<int, int>> edges = {{0, 1}, {2, 3}, {4, 5}};
    CHECK_THROWS_AS(
        assemble_crossed_embedding(6, edges, pts, straight(pts, edges)),
        DegenerateGeometryError);

    // edge passing through another vertex
    std::vector<Point> q = {{0, 0}, {2, 0}, {1, 0}, {1, 1}};
    std::vector<std::pair<int, int>> e2 = {{0, 1}, {2, 3}};
    CHECK_THROWS_AS(assemble_crossed_embedding(4, e2, q, straight(q, e2)),
                    DegenerateGeometryError);

    // collinear overlap
    std::vector<Point> r = {{0, 0}, {3, 0}, {1, 0}, {4, 0}};
    std::vector<std::pair<int, int>> e3 = {{0, 1}, {2, 3}};
    CHECK_THROWS_AS(assemble_crossed_embedding(4, e3, r, straight(r, e3)),
                    DegenerateGeometryError);

    // coincident vertices
    std::vector<Point> s = {{0, 0}, {0, 0}};
    std::vector<std::pair<int, int>> e4 = {{0, 1}};
    CHECK_THROWS_AS(assemble_crossed_embedding(2, e4, s, straight(s, e4)), Error);
}

TEST_CASE("planarize passes clean input through") {
    std::vector<Point> pts = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    auto k4 = complete_graph(4);
    auto res = planarize(pts, k4.edges, 7);
    CHECK(res.seed_used == 7);
    CHECK(res.embedding.crossing_count() == 1);
}

TEST_CASE("planarize jitters a triple point apart") {
    std::vector<Point> pts = {{0, 0}, {2, 2}, {0, 2}, {2, 0}, {1, 0}, {1, 2}};
    std::vector<std::pair<int, int>> edges = {{0, 1}, {2, 3}, {4, 5}};
    auto res = planarize(pts, edges, 1);
    CHECK(res.embedding.crossing_count() == 3);
    auto again = planarize(pts, edges, 1);
    CHECK(again.seed_used == res.seed_used);
    CHECK(again.drawing.coords == res.drawing.coords);
    CHECK(recount_from_drawing(edges, res.drawing).max ==
          crossings_per_edge(res.embedding).max);
}

TEST_CASE("sparsity bound") {
    CHECK(check_sparsity(complete_graph(5), 1));
    CHECK(check_sparsity(complete_graph(8), 1));
    CHECK(!check_sparsity(complete_graph(20), 1));
    CHECK(check_sparsity(complete_graph(20), 6));
}
