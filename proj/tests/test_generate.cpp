#include "flatgraph/generate.hpp"
#include "flatgraph/wbw.hpp"

#include <doctest.h>

#include <set>

using namespace flatgraph;

TEST_CASE("random triangulations are simple 3-connected triangulations") {
    Rand r(3);
    for (int rep = 0; rep < 10; ++rep) {
        int n = 4 + r.below(20);
        PlaneMap m = random_triangulation(r, n);
        CHECK(m.vertex_count == n);
        CHECK(m.edge_count() == 3 * n - 6);
        CHECK(m.is_simple());
        CHECK(is_three_connected(m.graph()));
        for (const auto& f : m.faces) CHECK(f.size() == 3);
    }
}

TEST_CASE("random plane maps respect the requested limits") {
    Rand r(5);
    int with_parallel = 0;
    for (int rep = 0; rep < 40; ++rep) {
        PlaneMap m = random_plane_map(r, 10, 15, rep % 2 == 1);
        CHECK(m.vertex_count <= 10);
        CHECK(m.edge_count() <= 15);
        CHECK(m.components == 1);
        if (rep % 2 == 0) CHECK(m.is_simple());
        if (!m.is_simple()) ++with_parallel;
    }
    CHECK(with_parallel > 0);
}

TEST_CASE("random graphs are simple with exact edge counts") {
    Rand r(9);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 2 + r.below(9);
        int want = r.below(n * (n - 1) / 2 + 1);
        AbstractGraph g = random_graph(r, n, want);
        CHECK(g.vertex_count == n);
        CHECK(g.edge_count() == want);
        std::set<std::pair<int, int>> seen;
        for (auto [u, v] : g.edges) {
            CHECK(u != v);
            CHECK(seen.insert(std::minmax(u, v)).second);
        }
    }
}

TEST_CASE("random drawings planarize and recount consistently") {
    Rand r(17);
    int crossed = 0;
    for (int rep = 0; rep < 30; ++rep) {
        int n = 4 + r.below(6);
        auto res = random_drawing(r, n, std::min(6 + r.below(6), n * (n - 1) / 2));
        auto counts = crossings_per_edge(res.embedding);
        if (counts.max > 0) ++crossed;
        CHECK(res.embedding.original_edges.size() == counts.per_edge.size());
    }
    CHECK(crossed > 0);
}

TEST_CASE("generators are deterministic per seed") {
    Rand a(42), b(42), c(43);
    PlaneMap ma = random_plane_map(a, 9, 12, true);
    PlaneMap mb = random_plane_map(b, 9, 12, true);
    PlaneMap mc = random_plane_map(c, 9, 12, true);
    CHECK(ma.edges == mb.edges);
    CHECK(ma.rotation == mb.rotation);
    CHECK((ma.edges != mc.edges || ma.rotation != mc.rotation));
}
