#include "flatgraph/generate.hpp"
#include "flatgraph/svg.hpp"

#include <doctest.h>

using namespace flatgraph;

namespace {

int count_of(const std::string& text, const std::string& needle) {
    int n = 0;
    for (size_t p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
    return n;
}

} // namespace

TEST_CASE("svg output is byte-identical across calls") {
    Rand r(23);
    PlaneMap m = random_plane_map(r, 8, 12, false);
    CHECK(svg_of_map(m) == svg_of_map(m));
    CHECK(svg_of_power(m, 3) == svg_of_power(m, 3));
}

TEST_CASE("power render draws one dotted chord per non-host pair") {
    Rand r(29);
    PlaneMap m = random_triangulation(r, 9);
    std::string svg = svg_of_power(m, 2);
    int extra = lambda_power(m, 2).edge_count() - m.edge_count();
    CHECK(count_of(svg, "dasharray") == extra);
    CHECK(count_of(svg, "<line") == extra + m.edge_count());
}

TEST_CASE("drawing render marks every crossing") {
    std::vector<Point> pts{{0, 0}, {4, 4}, {0, 4}, {4, 0}};
    std::vector<std::pair<int, int>> edges{{0, 1}, {2, 3}};
    auto res = planarize(pts, edges, 1);
    const Drawing& d = res.drawing;
    std::string svg = svg_of_embedding(res.embedding, d);
    CHECK(count_of(svg, "stroke=\"red\"") ==
          static_cast<int>(res.embedding.crossing_vertices.size()));
    CHECK(svg.substr(0, 4) == "<svg");
    CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
}
