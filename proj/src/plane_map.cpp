#include "flatgraph/plane_map.hpp"

#include <algorithm>
#include <numeric>

namespace flatgraph {

bool PlaneMap::is_simple() const {
    auto sorted = edges;
    for (auto& [u, v] : sorted)
        if (u > v) std::swap(u, v);
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

PlaneMap build_plane_map(int vertex_count, std::vector<std::pair<int, int>> edges,
                         std::vector<std::vector<int>> rotation) {
    PlaneMap m;
    m.vertex_count = vertex_count;
    m.edges = std::move(edges);
    m.rotation = std::move(rotation);

    const int nd = m.dart_count();
    for (const auto& [u, v] : m.edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw Error("edge endpoint out of range");
        if (u == v) throw LoopError("loop edge forbidden in a plane map");
    }
    if (static_cast<int>(m.rotation.size()) != vertex_count)
        throw MalformedRotation("rotation table size != vertex count");

    m.rot_pos.assign(nd, -1);
    for (int v = 0; v < vertex_count; ++v) {
        for (size_t i = 0; i < m.rotation[v].size(); ++i) {
            int d = m.rotation[v][i];
            if (d < 0 || d >= nd)
                throw MalformedRotation("dart id out of range at vertex " + std::to_string(v));
            if (m.origin(d) != v)
                throw MalformedRotation("dart " + std::to_string(d) + " listed at wrong vertex");
            if (m.rot_pos[d] != -1)
                throw MalformedRotation("dart " + std::to_string(d) + " listed twice");
            m.rot_pos[d] = static_cast<int>(i);
        }
    }
    for (int d = 0; d < nd; ++d)
        if (m.rot_pos[d] == -1)
            throw MalformedRotation("dart " + std::to_string(d) + " missing from rotation");

    // face tracing: next(d) = rot_next(twin(d))
    m.dart_face.assign(nd, -1);
    for (int d = 0; d < nd; ++d) {
        if (m.dart_face[d] != -1) continue;
        int f = m.face_count();
        m.faces.emplace_back();
        int cur = d;
        do {
            m.dart_face[cur] = f;
            m.faces[f].push_back(cur);
            cur = m.face_next(cur);
        } while (cur != d);
    }

    // Per-component Euler on the sphere: each component with edges must have
    // V - E + F = 2 for its traced faces. (Tracing sees each component on its
    // own sphere; isolated vertices carry no darts and are exempt.)
    std::vector<int> comp(vertex_count, -1);
    m.components = 0;
    for (int s = 0; s < vertex_count; ++s) {
        if (comp[s] != -1) continue;
        int c = m.components++;
        std::vector<int> stack = {s};
        comp[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : m.rotation[v]) {
                int w = m.head(d);
                if (comp[w] == -1) { comp[w] = c; stack.push_back(w); }
            }
        }
    }
    std::vector<long long> euler(m.components, 0);
    std::vector<bool> has_edges(m.components, false);
    for (int v = 0; v < vertex_count; ++v) ++euler[comp[v]];
    for (const auto& [u, v] : m.edges) { --euler[comp[u]]; has_edges[comp[u]] = true; }
    for (const auto& f : m.faces) ++euler[comp[m.origin(f[0])]];
    for (int c = 0; c < m.components; ++c)
        if (has_edges[c] && euler[c] != 2)
            throw GenusError("rotation system is not a sphere embedding: component " +
                             std::to_string(c) + " has V-E+F = " + std::to_string(euler[c]));
    return m;
}

DualResult dual(const PlaneMap& m) {
    if (m.components > 1) throw DisconnectedError("dual requires a connected map");
    if (m.edge_count() == 0) throw EmptyGraphError("dual requires at least one edge");

    const int nf = m.face_count();
    std::vector<std::pair<int, int>> dual_edges(m.edge_count());
    for (int e = 0; e < m.edge_count(); ++e) {
        int fa = m.dart_face[2 * e], fb = m.dart_face[2 * e + 1];
        if (fa == fb)
            throw LoopError("bridge edge " + std::to_string(e) + " would become a dual loop");
        dual_edges[e] = {fa, fb};
    }
    // dual dart of primal dart d keeps the id d: it leaves dart_face[d]
    std::vector<std::vector<int>> rot(nf);
    for (int f = 0; f < nf; ++f) {
        rot[f].reserve(m.faces[f].size());
        for (int d : m.faces[f]) rot[f].push_back(d);
    }
    DualResult r;
    r.map = build_plane_map(nf, std::move(dual_edges), std::move(rot));

    r.face_to_primal_vertex.assign(r.map.face_count(), -1);
    for (int f = 0; f < r.map.face_count(); ++f) {
        int v = m.origin(r.map.faces[f][0]);
        for (int d : r.map.faces[f])
            if (m.origin(d) != v)
                throw Error("dual face does not match a primal vertex rotation");
        r.face_to_primal_vertex[f] = v;
    }
    return r;
}

RadialResult radial(const PlaneMap& m) {
    if (m.edge_count() == 0) throw EmptyGraphError("radial requires at least one edge");
    for (int v = 0; v < m.vertex_count; ++v)
        if (m.degree(v) == 0)
            throw IsolatedVertexError("radial undefined for isolated vertex " + std::to_string(v));

    const int n = m.vertex_count;
    const int nf = m.face_count();

    // one radial edge per corner (= dart), doubled at degree-1 vertices
    std::vector<std::pair<int, int>> redges;
    std::vector<int> first_copy(m.dart_count(), -1);   // dart -> radial edge id
    std::vector<int> second_copy(m.dart_count(), -1);  // doubled corners only
    for (int d = 0; d < m.dart_count(); ++d) {
        first_copy[d] = static_cast<int>(redges.size());
        redges.emplace_back(m.origin(d), n + m.dart_face[d]);
        if (m.degree(m.origin(d)) == 1) {
            second_copy[d] = static_cast<int>(redges.size());
            redges.emplace_back(m.origin(d), n + m.dart_face[d]);
        }
    }

    std::vector<std::vector<int>> rot(n + nf);
    for (int v = 0; v < n; ++v) {
        for (int d : m.rotation[v]) {
            rot[v].push_back(2 * first_copy[d]);
            if (second_copy[d] != -1) rot[v].push_back(2 * second_copy[d]);
        }
    }
    // the face vertex sees its corners in reversed boundary order: the
    // boundary winds counterclockwise around the interior it bounds, so from
    // inside the corners pass by clockwise
    for (int f = 0; f < nf; ++f) {
        for (auto it = m.faces[f].rbegin(); it != m.faces[f].rend(); ++it) {
            int d = *it;
            rot[n + f].push_back(2 * first_copy[d] + 1);
            if (second_copy[d] != -1) rot[n + f].push_back(2 * second_copy[d] + 1);
        }
    }

    RadialResult r;
    r.map = build_plane_map(n + nf, std::move(redges), std::move(rot));
    r.primal_vertex_count = n;
    r.face_vertex.resize(nf);
    std::iota(r.face_vertex.begin(), r.face_vertex.end(), n);
    return r;
}

ComponentSplit split_components(const PlaneMap& m) {
    ComponentSplit out;
    out.comp_of.assign(m.vertex_count, -1);
    out.local_id.assign(m.vertex_count, -1);
    for (int s = 0; s < m.vertex_count; ++s) {
        if (out.comp_of[s] != -1) continue;
        int c = static_cast<int>(out.maps.size());
        std::vector<int> verts = {s};
        out.comp_of[s] = c;
        out.local_id[s] = 0;
        for (size_t i = 0; i < verts.size(); ++i) {
            for (int d : m.rotation[verts[i]]) {
                int w = m.head(d);
                if (out.comp_of[w] == -1) {
                    out.comp_of[w] = c;
                    out.local_id[w] = static_cast<int>(verts.size());
                    verts.push_back(w);
                }
            }
        }
        std::vector<std::pair<int, int>> edges;
        std::vector<int> local_edge(m.edge_count(), -1);
        for (int e = 0; e < m.edge_count(); ++e) {
            if (out.comp_of[m.edges[e].first] != c) continue;
            local_edge[e] = static_cast<int>(edges.size());
            edges.emplace_back(out.local_id[m.edges[e].first],
                               out.local_id[m.edges[e].second]);
        }
        std::vector<std::vector<int>> rot(verts.size());
        for (size_t i = 0; i < verts.size(); ++i)
            for (int d : m.rotation[verts[i]])
                rot[i].push_back(2 * local_edge[m.edge_of(d)] + d % 2);
        out.maps.push_back(build_plane_map(static_cast<int>(verts.size()),
                                           std::move(edges), std::move(rot)));
    }
    return out;
}

MedialResult medial(const PlaneMap& m) {
    RadialResult r = radial(m);
    DualResult d = dual(r.map);

    MedialResult out;
    out.map = std::move(d.map);
    out.vertex_face.assign(m.vertex_count, -1);
    for (int f = 0; f < out.map.face_count(); ++f) {
        int rv = d.face_to_primal_vertex[f]; // a radial vertex
        if (rv < r.primal_vertex_count) out.vertex_face[rv] = f;
    }
    return out;
}

} // namespace flatgraph
