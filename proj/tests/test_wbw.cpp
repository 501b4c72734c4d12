#include "doctest.h"
#include "helpers.hpp"

#include "flatgraph/wbw.hpp"

using namespace flatgraph;
using namespace flatgraph::testing;

namespace {

void check_against_oracle(const PlaneMap& m, int max_len = 12) {
    for (int x = 0; x < m.vertex_count; ++x) {
        for (int y = 0; y < m.vertex_count; ++y) {
            if (x == y || m.degree(x) == 0 || m.degree(y) == 0) continue;
            auto cert = wbw_distance(m, x, y);
            auto want = wbw_oracle(m, x, y, max_len);
            REQUIRE(cert.has_value() == want.has_value());
            if (cert) {
                CHECK(cert->length() == *want);
                std::string why;
                CHECK_MESSAGE(check_certificate(m, *cert, &why), why);
            }
            auto via = wbw_distance_via_medial(m, x, y);
            CHECK(via.has_value() == want.has_value());
            if (via) CHECK(*via == *want);
        }
    }
}

} // namespace

TEST_CASE("attachment in a star") {
    PlaneMap s = star_map(6);
    // only cyclically consecutive edges at the hub are attached
    CHECK(attached(s, 0, 1));
    CHECK(attached(s, 5, 0));
    CHECK(!attached(s, 0, 2));
    CHECK(!attached(s, 1, 4));
    CHECK(!attached(s, 2, 2));
}

TEST_CASE("degree-two vertices attach both incident edges") {
    PlaneMap c = cycle_map(5);
    for (int i = 0; i < 5; ++i) CHECK(attached(c, i, (i + 1) % 5));
    CHECK(!attached(c, 0, 2));
}

TEST_CASE("degree-one endpoints attach nothing") {
    PlaneMap p = path_map(3);
    CHECK(attached(p, 0, 1)); // through the middle vertex
    PlaneMap two = path_map(2);
    auto adj = attachment_lists(two);
    CHECK(adj[0].empty());
}

TEST_CASE("star distances walk around the hub") {
    PlaneMap s = star_map(6);
    auto d = *wbw_distance(s, 1, 4);
    CHECK(d.length() == 4);
    CHECK(d.edges == std::vector<int>{0, 1, 2, 3});
    CHECK(wbw_distance(s, 1, 2)->length() == 2);
    CHECK(wbw_distance(s, 0, 4)->length() == 1);
    check_against_oracle(s);
}

TEST_CASE("cycle distances") {
    PlaneMap c = cycle_map(4);
    CHECK(wbw_distance(c, 0, 2)->length() == 2);
    CHECK(wbw_distance(c, 0, 1)->length() == 1);
    check_against_oracle(c);
    check_against_oracle(cycle_map(7));
}

TEST_CASE("path distances") {
    check_against_oracle(path_map(2));
    check_against_oracle(path_map(6));
}

TEST_CASE("k4 distances") {
    auto m = *planar_embedding(complete_graph(4));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            if (x != y) CHECK(wbw_distance(m, x, y)->length() == 1);
    check_against_oracle(m);
}

TEST_CASE("octahedron antipodal distance is three") {
    auto m = *planar_embedding(octahedron_graph());
    auto d = wbw_all_pairs(m);
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            if (x == y) continue;
            CHECK(d[x][y] == (x / 2 == y / 2 ? 3 : 1));
        }
    check_against_oracle(m);
}

TEST_CASE("icosahedron distances match the oracle") {
    check_against_oracle(*planar_embedding(icosahedron_graph()), 8);
}

TEST_CASE("disconnected pairs have no distance") {
    std::vector<std::pair<int, int>> edges = {{0, 1}, {2, 3}};
    PlaneMap m = build_plane_map(4, edges, {{0}, {1}, {2}, {3}});
    CHECK(!wbw_distance(m, 0, 2).has_value());
    CHECK(!wbw_distance_via_medial(m, 0, 2).has_value());
}

TEST_CASE("degenerate queries throw") {
    PlaneMap c = cycle_map(3);
    CHECK_THROWS_AS(wbw_distance(c, 1, 1), Error);
    PlaneMap lonely = build_plane_map(3, {{0, 1}}, {{0}, {1}, {}});
    CHECK_THROWS_AS(wbw_distance(lonely, 0, 2), IsolatedVertexError);
    CHECK_THROWS_AS(wbw_distance_via_medial(lonely, 0, 2), IsolatedVertexError);
}

TEST_CASE("metric lower bound: graph distance never exceeds wbw") {
    for (auto m : {star_map(7), cycle_map(6), *planar_embedding(icosahedron_graph())}) {
        auto wbw = wbw_all_pairs_serial(m);
        auto adj = m.graph().adjacency();
        for (int x = 0; x < m.vertex_count; ++x) {
            std::vector<int> dist(m.vertex_count, -1);
            std::vector<int> queue = {x};
            dist[x] = 0;
            for (size_t i = 0; i < queue.size(); ++i)
                for (int w : adj[queue[i]])
                    if (dist[w] == -1) { dist[w] = dist[queue[i]] + 1; queue.push_back(w); }
            for (int y = 0; y < m.vertex_count; ++y)
                if (x != y && wbw[x][y] != -1) CHECK(dist[y] <= wbw[x][y]);
        }
    }
}

TEST_CASE("parallel all-pairs equals the serial reference") {
    for (auto m : {star_map(9), *planar_embedding(octahedron_graph()),
                   *planar_embedding(icosahedron_graph())}) {
        CHECK(wbw_all_pairs(m) == wbw_all_pairs_serial(m));
    }
}

TEST_CASE("power at one is the host graph") {
    for (auto m : {cycle_map(6), star_map(5), *planar_embedding(complete_graph(4))}) {
        CHECK(lambda_power(m, 1) == m.graph());
    }
}

TEST_CASE("powers are monotone in lambda") {
    auto contains = [](const AbstractGraph& big, const AbstractGraph& small) {
        for (auto [u, v] : small.edges)
            if (!big.has_edge(u, v)) return false;
        return true;
    };
    for (auto m : {star_map(8), cycle_map(9), *planar_embedding(icosahedron_graph())}) {
        AbstractGraph prev = m.graph();
        for (int lam = 1; lam <= 5; ++lam) {
            AbstractGraph cur = lambda_power(m, lam);
            CHECK(contains(cur, prev));
            CHECK(cur == lambda_power_serial(m, lam));
            prev = cur;
        }
    }
}

TEST_CASE("triangulation powers stabilize immediately") {
    // in a 3-connected triangulation two edges attached at a vertex span a
    // face, so wbw distance 2 already implies adjacency
    for (auto g : {octahedron_graph(), icosahedron_graph()}) {
        auto m = *planar_embedding(g);
        CHECK(lambda_power(m, 2) == m.graph());
    }
}

TEST_CASE("octahedron cubed is K6") {
    auto m = *planar_embedding(octahedron_graph());
    CHECK(lambda_power(m, 3) == complete_graph(6));
}

TEST_CASE("star powers fill in leaf pairs by hub gap") {
    PlaneMap s = star_map(6);
    AbstractGraph p2 = lambda_power(s, 2);
    // leaves two apart around the hub: gap of two edges
    CHECK(p2.has_edge(1, 2));
    CHECK(!p2.has_edge(1, 3));
    AbstractGraph p3 = lambda_power(s, 3);
    CHECK(p3.has_edge(1, 3));
    CHECK(!p3.has_edge(1, 4));
}

TEST_CASE("power requires a simple host") {
    DualResult d = dual(cycle_map(3)); // two vertices, three parallel edges
    CHECK_THROWS_AS(lambda_power(d.map, 2), NotSimpleError);
}

TEST_CASE("certificate checker rejects tampering") {
    PlaneMap s = star_map(6);
    WbwCertificate good = *wbw_distance(s, 1, 4);
    std::string why;
    CHECK(check_certificate(s, good, &why));

    WbwCertificate bad = good;
    bad.edges.clear();
    CHECK(!check_certificate(s, bad, &why));

    bad = good;
    bad.edges.push_back(bad.edges.front()); // repeated edge
    CHECK(!check_certificate(s, bad, &why));

    bad = good;
    bad.edges = {0, 2, 3}; // 0 and 2 not attached
    CHECK(!check_certificate(s, bad, &why));

    bad = good;
    bad.y = 5; // last edge not incident to y
    CHECK(!check_certificate(s, bad, &why));
}

TEST_CASE("flat witness checking") {
    // C4 plus one diagonal is 2-flat over the square
    PlaneMap host = cycle_map(4);
    AbstractGraph g = AbstractGraph::make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
    FlatWitness w;
    w.host = host;
    w.lambda = 2;
    w.tau = {0, 1, 2, 3};
    for (auto [u, v] : g.edges) {
        FlatWitness::EdgeCert ec;
        if (host.graph().has_edge(u, v)) {
            ec.host_edge = true;
        } else {
            ec.host_edge = false;
            ec.cert = *wbw_distance(host, u, v);
        }
        w.edge_certs.push_back(ec);
    }
    std::string why;
    CHECK_MESSAGE(check_flat_witness(g, w, &why), why);

    FlatWitness bad = w;
    bad.lambda = 1; // diagonal certificate too long now
    CHECK(!check_flat_witness(g, bad, &why));

    bad = w;
    bad.tau = {0, 1, 2, 2};
    CHECK(!check_flat_witness(g, bad, &why));

    bad = w;
    bad.edge_certs.pop_back();
    CHECK(!check_flat_witness(g, bad, &why));
}
