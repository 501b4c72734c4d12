#include "flatgraph/plane_map.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>
#include <boost/property_map/property_map.hpp>

#include <map>

namespace flatgraph {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::no_property,
                                         boost::property<boost::edge_index_t, int>>;

} // namespace

std::optional<PlaneMap> planar_embedding(const AbstractGraph& g) {
    // Deduplicate parallel edges for the test; the planar rotation of the
    // simple skeleton extends to the multigraph by nesting each bundle.
    std::map<std::pair<int, int>, std::vector<int>> bundles; // {u,v} -> edge ids
    for (size_t e = 0; e < g.edges.size(); ++e)
        bundles[g.edges[e]].push_back(static_cast<int>(e));

    BoostGraph bg(g.vertex_count);
    std::vector<std::pair<int, int>> simple_edges;
    for (const auto& [uv, ids] : bundles) {
        boost::add_edge(uv.first, uv.second,
                        static_cast<int>(simple_edges.size()), bg);
        simple_edges.push_back(uv);
    }

    using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<Edge>> embedding(g.vertex_count);
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(embedding.begin(),
                                              boost::get(boost::vertex_index, bg)));
    if (!planar) return std::nullopt;

    auto eidx = boost::get(boost::edge_index, bg);
    std::vector<std::vector<int>> rotation(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) {
        for (const Edge& be : embedding[v]) {
            auto [su, sv] = simple_edges[eidx[be]];
            for (int e : bundles.at({su, sv})) {
                int d = (g.edges[e].first == v) ? 2 * e : 2 * e + 1;
                rotation[v].push_back(d);
            }
        }
    }
    return build_plane_map(g.vertex_count, g.edges, std::move(rotation));
}

bool is_planar(const AbstractGraph& g) { return planar_embedding(g).has_value(); }

} // namespace flatgraph
