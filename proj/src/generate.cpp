#include "flatgraph/generate.hpp"

#include <algorithm>
#include <set>

namespace flatgraph {

namespace {

PlaneMap delete_edge(const PlaneMap& m, int k) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> remap(m.edge_count(), -1);
    for (int j = 0; j < m.edge_count(); ++j)
        if (j != k) {
            remap[j] = static_cast<int>(edges.size());
            edges.push_back(m.edges[j]);
        }
    std::vector<std::vector<int>> rot(m.vertex_count);
    for (int v = 0; v < m.vertex_count; ++v)
        for (int d : m.rotation[v])
            if (d / 2 != k) rot[v].push_back(2 * remap[d / 2] + (d & 1));
    return build_plane_map(m.vertex_count, std::move(edges), std::move(rot));
}

PlaneMap duplicate_edge(const PlaneMap& m, int k) {
    auto edges = m.edges;
    auto rot = m.rotation;
    int q = m.edge_count();
    edges.push_back(m.edges[k]);
    // darts placed right next to the original at both ends: a bigon face
    auto& ru = rot[m.edges[k].first];
    ru.insert(std::next(std::find(ru.begin(), ru.end(), 2 * k)), 2 * q);
    auto& rv = rot[m.edges[k].second];
    rv.insert(std::find(rv.begin(), rv.end(), 2 * k + 1), 2 * q + 1);
    return build_plane_map(m.vertex_count, std::move(edges), std::move(rot));
}

} // namespace

PlaneMap random_triangulation(Rand& r, int vertices) {
    if (vertices < 4) throw Error("triangulation needs at least four vertices");
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3},
                                              {1, 2}, {2, 3}, {1, 3}};
    std::vector<std::vector<int>> rot = {{0, 2, 4}, {6, 1, 10}, {8, 3, 7}, {11, 5, 9}};
    PlaneMap m = build_plane_map(4, std::move(edges), std::move(rot));
    while (m.vertex_count < vertices) {
        const auto& fd = m.faces[r.below(m.face_count())];
        auto e2 = m.edges;
        auto r2 = m.rotation;
        int u = m.vertex_count;
        std::array<int, 3> spoke;
        for (int j = 0; j < 3; ++j) {
            spoke[j] = static_cast<int>(e2.size());
            e2.emplace_back(u, m.origin(fd[j]));
        }
        // the corner of the split face at origin(fd[j]) sits just before fd[j]
        for (int j = 0; j < 3; ++j) {
            auto& rv = r2[m.origin(fd[j])];
            rv.insert(std::find(rv.begin(), rv.end(), fd[j]), 2 * spoke[j] + 1);
        }
        r2.push_back({2 * spoke[2], 2 * spoke[1], 2 * spoke[0]});
        m = build_plane_map(u + 1, std::move(e2), std::move(r2));
    }
    return m;
}

PlaneMap random_plane_map(Rand& r, int max_vertices, int max_edges, bool allow_parallel) {
    if (max_vertices < 4 || max_edges < 6)
        throw Error("generator needs room for at least K_4");
    int n = 4 + r.below(std::min(max_vertices, max_edges + 1) - 3);
    PlaneMap m = random_triangulation(r, n);
    int target = std::min(max_edges, 1 + r.below(3 * std::max(n - 2, 1)));
    for (int guard = 0; guard < 400 && m.edge_count() > target; ++guard) {
        int k = r.below(m.edge_count());
        auto candidate = m.edges;
        candidate.erase(candidate.begin() + k);
        if (!AbstractGraph::make(m.vertex_count, candidate).connected()) continue;
        m = delete_edge(m, k);
    }
    // a connected graph above the budget always has a cycle edge to drop
    while (m.edge_count() > max_edges) {
        bool removed = false;
        for (int k = 0; k < m.edge_count() && !removed; ++k) {
            auto candidate = m.edges;
            candidate.erase(candidate.begin() + k);
            if (!AbstractGraph::make(m.vertex_count, candidate).connected()) continue;
            m = delete_edge(m, k);
            removed = true;
        }
        if (!removed) break;
    }
    if (allow_parallel) {
        int extra = r.below(3);
        for (int i = 0; i < extra && m.edge_count() < max_edges; ++i)
            m = duplicate_edge(m, r.below(m.edge_count()));
    }
    return m;
}

AbstractGraph random_graph(Rand& r, int vertices, int edges) {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < vertices; ++u)
        for (int v = u + 1; v < vertices; ++v) all.emplace_back(u, v);
    if (edges > static_cast<int>(all.size())) throw Error("too many edges requested");
    for (int i = 0; i < edges; ++i)
        std::swap(all[i], all[i + r.below(static_cast<int>(all.size()) - i)]);
    all.resize(edges);
    return AbstractGraph::make(vertices, std::move(all));
}

PlanarizeResult random_drawing(Rand& r, int vertices, int edges) {
    std::set<std::pair<int, int>> used;
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < vertices) {
        std::pair<int, int> p{r.below(50), r.below(50)};
        if (used.insert(p).second)
            pts.push_back({Rational(p.first), Rational(p.second)});
    }
    AbstractGraph g = random_graph(r, vertices, edges);
    return planarize(pts, g.edges, r.next());
}

} // namespace flatgraph
