#include "flatgraph/generate.hpp"
#include "flatgraph/io.hpp"

#include <doctest.h>

#include <sstream>

using namespace flatgraph;

namespace {

PlaneMap reparse_rot(const PlaneMap& m) {
    std::istringstream in(write_rot(m));
    return read_rot(in);
}

bool same_map(const PlaneMap& a, const PlaneMap& b) {
    return a.vertex_count == b.vertex_count && a.edges == b.edges && a.rotation == b.rotation;
}

CrossedEmbedding crossing_fixture() {
    std::vector<Point> pts{{0, 0}, {4, 0}, {0, 4}, {4, 4}, {2, -2}, {2, 6}};
    std::vector<std::pair<int, int>> edges{{0, 3}, {1, 2}, {0, 1}, {1, 3}, {3, 2}, {2, 0}, {4, 5}};
    return planarize(pts, edges, 1).embedding;
}

} // namespace

TEST_CASE("rot roundtrip is the identity") {
    Rand r(11);
    for (int rep = 0; rep < 20; ++rep) {
        PlaneMap m = random_plane_map(r, 9, 14, rep % 2 == 1);
        PlaneMap back = reparse_rot(m);
        CHECK(same_map(m, back));
        CHECK(write_rot(m) == write_rot(back));
    }
}

TEST_CASE("rot accepts comments and blank lines, rejects junk") {
    std::istringstream ok("# path on three vertices\n\n3 2\n0 1 # first\n1 2\n0\n1 2\n3\n");
    PlaneMap m = read_rot(ok);
    CHECK(m.vertex_count == 3);
    CHECK(m.edge_count() == 2);

    std::istringstream bad1("3 2\n0 1\n1 5\n0\n1 2\n3\n");
    CHECK_THROWS_AS(read_rot(bad1), FormatError);
    std::istringstream bad2("3 2\n0 1\n1 2\n0\n1 2\n3\nextra\n");
    CHECK_THROWS_AS(read_rot(bad2), FormatError);
    std::istringstream bad3("3");
    CHECK_THROWS_AS(read_rot(bad3), FormatError);
}

TEST_CASE("cemb roundtrip is the identity") {
    CrossedEmbedding ce = crossing_fixture();
    std::string text = write_cemb(ce);
    std::istringstream in(text);
    CrossedEmbedding back = read_cemb(in);
    CHECK(same_map(ce.planarization, back.planarization));
    CHECK(ce.crossing_vertices == back.crossing_vertices);
    CHECK(ce.crossing_darts == back.crossing_darts);
    CHECK(ce.edge_trails == back.edge_trails);
    CHECK(ce.original_vertex_count == back.original_vertex_count);
    CHECK(ce.original_edges == back.original_edges);
    CHECK(write_cemb(back) == text);
}

TEST_CASE("flatw roundtrip preserves the witness") {
    CrossedEmbedding ce = crossing_fixture();
    AbstractGraph g = ce.original_graph();
    FlatWitness w = nearly_planar_to_flat(ce);
    REQUIRE(check_flat_witness(g, w));

    std::string text = write_flatw(g, w);
    std::istringstream in(text);
    FlatwFile back = read_flatw(in);
    CHECK(back.graph == g);
    CHECK(back.witness.lambda == w.lambda);
    CHECK(back.witness.tau == w.tau);
    CHECK(check_flat_witness(back.graph, back.witness));
    CHECK(write_flatw(back.graph, back.witness) == text);
}

TEST_CASE("flatw parse failures") {
    std::istringstream bad1("3 2\n");
    CHECK_THROWS_AS(read_flatw(bad1), FormatError);
    // tau entry out of range for a certificate endpoint
    std::istringstream bad2("LAMBDA 1\n2 1\n0 1\n0\n1\nTAU 0 1\nEDGE 0 5 : HOST\n");
    CHECK_THROWS_AS(read_flatw(bad2), FormatError);
}

TEST_CASE("draw roundtrip keeps exact rationals") {
    Drawing d;
    d.coords = {{Rational(1, 3), Rational(-2, 7)}, {4, 0}};
    d.polylines = {{{Rational(1, 3), Rational(-2, 7)}, {2, 1}, {4, 0}}};
    std::string text = write_draw(d);
    std::istringstream in(text);
    Drawing back = read_draw(in);
    REQUIRE(back.coords.size() == 2);
    CHECK(back.coords[0].x == Rational(1, 3));
    CHECK(back.coords[0].y == Rational(-2, 7));
    REQUIRE(back.polylines.size() == 1);
    CHECK(back.polylines[0] == d.polylines[0]);
    CHECK(write_draw(back) == text);
}

TEST_CASE("rational formatting") {
    CHECK(format_rational(Rational(3, 6)) == "1/2");
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-9/12") == Rational(-3, 4));
    CHECK_THROWS_AS(parse_rational("1/0"), FormatError);
    CHECK_THROWS_AS(parse_rational("x"), FormatError);
}

TEST_CASE("certificate json is stable and self-contained") {
    CrossedEmbedding ce = crossing_fixture();
    AbstractGraph g = ce.original_graph();
    FlatWitness w = nearly_planar_to_flat(ce);
    auto drawing = flat_to_nearly_planar(g, w);
    auto cert = certify_equivalence(g, w, drawing.embedding);
    std::string a = write_certificate_json(cert, w, drawing.embedding);
    std::string b = write_certificate_json(cert, w, drawing.embedding);
    CHECK(a == b);
    CHECK(a.find("\"bounds_hold\": true") != std::string::npos);
    CHECK(a.find("\"lambda_given\": " + std::to_string(w.lambda)) != std::string::npos);
}
