#include "flatgraph/wbw.hpp"

#include <algorithm>
#include <deque>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace flatgraph {

bool attached(const PlaneMap& m, int e, int f) {
    if (e == f) return false;
    for (int de : {2 * e, 2 * e + 1}) {
        int v = m.origin(de);
        if (m.degree(v) < 2) continue;
        for (int df : {m.rot_next(de), m.rot_prev(de)})
            if (m.edge_of(df) == f) return true;
    }
    return false;
}

std::vector<std::vector<int>> attachment_lists(const PlaneMap& m) {
    std::vector<std::set<int>> adj(m.edge_count());
    for (int v = 0; v < m.vertex_count; ++v) {
        const auto& r = m.rotation[v];
        if (r.size() < 2) continue;
        for (size_t i = 0; i < r.size(); ++i) {
            int e = m.edge_of(r[i]);
            int f = m.edge_of(r[(i + 1) % r.size()]);
            if (e != f) { adj[e].insert(f); adj[f].insert(e); }
        }
    }
    std::vector<std::vector<int>> out(m.edge_count());
    for (int e = 0; e < m.edge_count(); ++e)
        out[e].assign(adj[e].begin(), adj[e].end());
    return out;
}

bool check_certificate(const PlaneMap& m, const WbwCertificate& cert, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    if (cert.edges.empty()) return fail("empty certificate");
    std::set<int> seen;
    for (int e : cert.edges) {
        if (e < 0 || e >= m.edge_count()) return fail("edge index out of range");
        if (!seen.insert(e).second) return fail("edge " + std::to_string(e) + " repeated");
    }
    auto incident = [&](int e, int v) {
        return m.edges[e].first == v || m.edges[e].second == v;
    };
    if (!incident(cert.edges.front(), cert.x)) return fail("first edge not incident to x");
    if (!incident(cert.edges.back(), cert.y)) return fail("last edge not incident to y");
    for (size_t i = 0; i + 1 < cert.edges.size(); ++i)
        if (!attached(m, cert.edges[i], cert.edges[i + 1]))
            return fail("edges " + std::to_string(cert.edges[i]) + "," +
                        std::to_string(cert.edges[i + 1]) + " not attached");
    return true;
}

namespace {

// BFS over the edge-attachment graph from the edges at x. Returns per-edge
// levels (1-based, 0 = unreached) and BFS parents for certificate recovery.
void edge_bfs(const PlaneMap& m, const std::vector<std::vector<int>>& adj, int x,
              std::vector<int>& level, std::vector<int>& parent) {
    level.assign(m.edge_count(), 0);
    parent.assign(m.edge_count(), -1);
    std::deque<int> queue;
    for (int d : m.rotation[x]) {
        int e = m.edge_of(d);
        if (!level[e]) { level[e] = 1; queue.push_back(e); }
    }
    while (!queue.empty()) {
        int e = queue.front();
        queue.pop_front();
        for (int f : adj[e]) {
            if (!level[f]) {
                level[f] = level[e] + 1;
                parent[f] = e;
                queue.push_back(f);
            }
        }
    }
}

} // namespace

std::optional<WbwCertificate> wbw_distance(const PlaneMap& m, int x, int y) {
    if (x == y) throw Error("wbw distance of a vertex to itself is undefined");
    if (x < 0 || y < 0 || x >= m.vertex_count || y >= m.vertex_count)
        throw Error("vertex out of range");
    if (m.degree(x) == 0 || m.degree(y) == 0)
        throw IsolatedVertexError("wbw distance from an isolated vertex is infinite");

    auto adj = attachment_lists(m);
    std::vector<int> level, parent;
    edge_bfs(m, adj, x, level, parent);

    int best = -1;
    for (int d : m.rotation[y]) {
        int e = m.edge_of(d);
        if (level[e] && (best == -1 || level[e] < level[best] ||
                         (level[e] == level[best] && e < best)))
            best = e;
    }
    if (best == -1) return std::nullopt;

    WbwCertificate cert;
    cert.x = x;
    cert.y = y;
    for (int e = best; e != -1; e = parent[e]) cert.edges.push_back(e);
    std::reverse(cert.edges.begin(), cert.edges.end());
    return cert;
}

std::optional<int> wbw_distance_via_medial(const PlaneMap& m, int x, int y) {
    if (x == y) throw Error("wbw distance of a vertex to itself is undefined");
    if (m.edge_count() == 0) throw EmptyGraphError("medial route requires an edge");
    if (m.degree(x) == 0 || m.degree(y) == 0)
        throw IsolatedVertexError("wbw distance from an isolated vertex is infinite");
    if (m.components > 1) {
        ComponentSplit split = split_components(m);
        if (split.comp_of[x] != split.comp_of[y]) return std::nullopt;
        return wbw_distance_via_medial(split.maps[split.comp_of[x]],
                                       split.local_id[x], split.local_id[y]);
    }

    MedialResult med = medial(m);
    auto boundary = [&](int f) {
        std::set<int> vs;
        for (int d : med.map.faces[f]) vs.insert(med.map.origin(d));
        return vs;
    };
    std::set<int> src = boundary(med.vertex_face[x]);
    std::set<int> dst = boundary(med.vertex_face[y]);

    std::vector<int> dist(med.map.vertex_count, -1);
    std::deque<int> queue;
    for (int v : src) { dist[v] = 0; queue.push_back(v); }
    auto adj = med.map.graph().adjacency();
    int best = -1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (dst.count(v)) { best = dist[v]; break; }
        for (int w : adj[v])
            if (dist[w] == -1) { dist[w] = dist[v] + 1; queue.push_back(w); }
    }
    if (best == -1) return std::nullopt;
    return 1 + best;
}

namespace {

std::vector<std::vector<int>> all_pairs_impl(const PlaneMap& m, bool parallel) {
    auto adj = attachment_lists(m);
    std::vector<std::vector<int>> out(m.vertex_count,
                                      std::vector<int>(m.vertex_count, -1));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int x = 0; x < m.vertex_count; ++x) {
        if (m.degree(x) == 0) continue;
        std::vector<int> level, parent;
        edge_bfs(m, adj, x, level, parent);
        for (int y = 0; y < m.vertex_count; ++y) {
            if (y == x) continue;
            int best = 0;
            for (int d : m.rotation[y]) {
                int e = m.edge_of(d);
                if (level[e] && (best == 0 || level[e] < best)) best = level[e];
            }
            if (best) out[x][y] = best;
        }
    }
    (void)parallel;
    return out;
}

} // namespace

std::vector<std::vector<int>> wbw_all_pairs(const PlaneMap& m) {
    return all_pairs_impl(m, true);
}

std::vector<std::vector<int>> wbw_all_pairs_serial(const PlaneMap& m) {
    return all_pairs_impl(m, false);
}

namespace {

AbstractGraph power_impl(const PlaneMap& host, int lambda, bool parallel) {
    if (lambda < 1) throw Error("lambda must be positive");
    if (!host.is_simple()) throw NotSimpleError("lambda power requires a simple host");
    auto dist = all_pairs_impl(host, parallel);
    std::set<std::pair<int, int>> present;
    for (auto [u, v] : host.edges) present.insert(std::pair(std::min(u, v), std::max(u, v)));
    std::vector<std::pair<int, int>> edges(host.edges);
    for (int x = 0; x < host.vertex_count; ++x)
        for (int y = x + 1; y < host.vertex_count; ++y)
            if (dist[x][y] != -1 && dist[x][y] <= lambda && !present.count({x, y}))
                edges.emplace_back(x, y);
    return AbstractGraph::make(host.vertex_count, std::move(edges));
}

} // namespace

AbstractGraph lambda_power(const PlaneMap& host, int lambda) {
    return power_impl(host, lambda, true);
}

AbstractGraph lambda_power_serial(const PlaneMap& host, int lambda) {
    return power_impl(host, lambda, false);
}

bool check_flat_witness(const AbstractGraph& g, const FlatWitness& w, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    if (w.lambda < 1) return fail("lambda must be positive");
    if (!w.host.is_simple()) return fail("host is not simple");
    if (static_cast<int>(w.tau.size()) != g.vertex_count) return fail("tau size mismatch");
    std::set<int> images;
    for (int t : w.tau) {
        if (t < 0 || t >= w.host.vertex_count) return fail("tau image out of range");
        if (!images.insert(t).second) return fail("tau not injective");
    }
    if (w.edge_certs.size() != g.edges.size())
        return fail("certificate count != edge count");
    for (size_t i = 0; i < g.edges.size(); ++i) {
        auto [x, y] = g.edges[i];
        int hx = w.tau[x], hy = w.tau[y];
        const auto& ec = w.edge_certs[i];
        std::string where = "edge {" + std::to_string(x) + "," + std::to_string(y) + "}: ";
        if (ec.host_edge) {
            bool found = false;
            for (const auto& [a, b] : w.host.edges)
                if ((a == hx && b == hy) || (a == hy && b == hx)) { found = true; break; }
            if (!found) return fail(where + "claimed host edge is absent");
        } else {
            if (!((ec.cert.x == hx && ec.cert.y == hy) || (ec.cert.x == hy && ec.cert.y == hx)))
                return fail(where + "certificate endpoints do not match tau images");
            std::string sub;
            if (!check_certificate(w.host, ec.cert, &sub)) return fail(where + sub);
            if (ec.cert.length() > w.lambda)
                return fail(where + "certificate longer than lambda");
        }
    }
    return true;
}

} // namespace flatgraph
