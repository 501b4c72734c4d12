#include "flatgraph/constructions.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace flatgraph {

namespace {

// Min wbw distance from every vertex to the set {0, ..., set_size-1}:
// multi-source BFS over edge attachments, vertex distance = best incident
// edge level (0 inside the set, INT_MAX when unreachable).
std::vector<int> wbw_to_prefix(const PlaneMap& m, int set_size) {
    auto adj = attachment_lists(m);
    std::vector<int> level(m.edge_count(), 0);
    std::deque<int> queue;
    for (int e = 0; e < m.edge_count(); ++e)
        if (m.edges[e].first < set_size || m.edges[e].second < set_size) {
            level[e] = 1;
            queue.push_back(e);
        }
    while (!queue.empty()) {
        int e = queue.front();
        queue.pop_front();
        for (int f : adj[e])
            if (!level[f]) { level[f] = level[e] + 1; queue.push_back(f); }
    }
    std::vector<int> out(m.vertex_count, INT_MAX);
    for (int v = 0; v < set_size && v < m.vertex_count; ++v) out[v] = 0;
    for (int e = 0; e < m.edge_count(); ++e) {
        if (!level[e]) continue;
        auto [u, v] = m.edges[e];
        out[u] = std::min(out[u], level[e]);
        out[v] = std::min(out[v], level[e]);
    }
    return out;
}

int index_in(const std::array<int, 4>& a, int d) {
    for (int j = 0; j < 4; ++j)
        if (a[j] == d) return j;
    throw Error("internal: dart not at its crossing");
}

} // namespace

TransformationRecord plane_transformation(const CrossedEmbedding& ce) {
    const PlaneMap& P = ce.planarization;
    const int n0 = ce.original_vertex_count;
    const int ne = static_cast<int>(ce.original_edges.size());
    const int nc = ce.crossing_count();

    TransformationRecord rec;
    rec.original_vertex_count = n0;
    rec.subdivision_map.assign(ne, {});
    rec.kept_edge_of.assign(ne, -1);

    // segment (planarization edge) -> original edge
    std::vector<int> seg_orig(P.edge_count(), -1);
    for (int e = 0; e < ne; ++e)
        for (int d : ce.edge_trails[e]) seg_orig[d / 2] = e;
    std::vector<int> cross_idx(P.vertex_count, -1);
    for (int i = 0; i < nc; ++i) cross_idx[ce.crossing_vertices[i]] = i;

    // one subdivision vertex per segment running crossing-to-crossing
    std::vector<int> s_of_seg(P.edge_count(), -1);
    int nv = n0;
    for (int e = 0; e < ne; ++e) {
        const auto& tr = ce.edge_trails[e];
        for (size_t i = 1; i + 1 < tr.size(); ++i) {
            s_of_seg[tr[i] / 2] = nv;
            rec.subdivision_map[e].push_back(nv);
            ++nv;
        }
    }

    // the node seen from a crossing along direction dart dd: either an
    // original endpoint or the subdivision vertex of a middle segment
    auto node_toward = [&](int dd) {
        int w = P.head(dd);
        if (w < n0) return w;
        int s = s_of_seg[dd / 2];
        if (s < 0) throw Error("internal: crossing-to-crossing segment without node");
        return s;
    };

    std::vector<std::pair<int, int>> out_edges;
    for (int e = 0; e < ne; ++e)
        if (ce.edge_trails[e].size() == 1) {
            rec.kept_edge_of[e] = static_cast<int>(out_edges.size());
            out_edges.push_back(ce.original_edges[e]);
        }

    const int first_cycle_edge = static_cast<int>(out_edges.size());
    std::vector<std::array<int, 4>> qn(nc), qe(nc);
    for (int c = 0; c < nc; ++c) {
        for (int j = 0; j < 4; ++j) qn[c][j] = node_toward(ce.crossing_darts[c][j]);
        for (int j = 0; j < 4; ++j) {
            if (qn[c][j] == qn[c][(j + 1) % 4])
                throw LoopError("edges sharing an endpoint cross; the crossing cycle "
                                "would need a loop");
            qe[c][j] = static_cast<int>(out_edges.size());
            out_edges.emplace_back(qn[c][j], qn[c][(j + 1) % 4]);
        }
        rec.crossing_cycles.push_back(qn[c]);
        rec.deleted_pairs.emplace_back(seg_orig[ce.crossing_darts[c][0] / 2],
                                       seg_orig[ce.crossing_darts[c][1] / 2]);
    }

    auto dart_at = [&](int edge_id, int v) {
        if (out_edges[edge_id].first == v) return 2 * edge_id;
        if (out_edges[edge_id].second == v) return 2 * edge_id + 1;
        throw Error("internal: vertex not on its cycle edge");
    };

    std::vector<std::vector<int>> rot(nv);
    // original vertices: keep the drawing's rotation; each crossed direction
    // splits into the two cycle edges around its first crossing
    for (int v = 0; v < n0; ++v)
        for (int dd : P.rotation[v]) {
            int e = seg_orig[dd / 2];
            if (rec.kept_edge_of[e] >= 0) {
                rot[v].push_back(dart_at(rec.kept_edge_of[e], v));
            } else {
                int c = cross_idx[P.head(dd)];
                int j = index_in(ce.crossing_darts[c], P.twin(dd));
                rot[v].push_back(dart_at(qe[c][j], v));
                rot[v].push_back(dart_at(qe[c][(j + 3) % 4], v));
            }
        }
    // subdivision vertices: two cycle edges toward each flanking crossing
    for (int e = 0; e < ne; ++e) {
        const auto& tr = ce.edge_trails[e];
        for (size_t i = 1; i + 1 < tr.size(); ++i) {
            int s = s_of_seg[tr[i] / 2];
            int a = cross_idx[P.origin(tr[i])];
            int b = cross_idx[P.head(tr[i])];
            int ja = index_in(ce.crossing_darts[a], tr[i]);
            int jb = index_in(ce.crossing_darts[b], P.twin(tr[i]));
            rot[s] = {dart_at(qe[a][ja], s), dart_at(qe[a][(ja + 3) % 4], s),
                      dart_at(qe[b][jb], s), dart_at(qe[b][(jb + 3) % 4], s)};
        }
    }

    // union semantics for step (c): a cycle edge that duplicates an existing
    // pair replaces it, so the output stays simple whenever the input graph
    // is. The cycle copy survives because it carries the rotation adjacencies
    // the length-2xi replacement walks rely on. Parallel copies among the
    // kept originals pass through untouched.
    std::map<std::pair<int, int>, int> cycle_copy;
    std::vector<char> drop(out_edges.size(), 0);
    for (int k = first_cycle_edge; k < static_cast<int>(out_edges.size()); ++k) {
        auto key = std::minmax(out_edges[k].first, out_edges[k].second);
        auto [it, fresh] = cycle_copy.emplace(key, k);
        if (!fresh) drop[k] = 1; // a later cycle copy of the same pair
    }
    for (int k = 0; k < first_cycle_edge; ++k) {
        auto key = std::minmax(out_edges[k].first, out_edges[k].second);
        if (cycle_copy.count(key)) drop[k] = 1;
    }
    if (std::find(drop.begin(), drop.end(), 1) != drop.end()) {
        std::vector<int> remap(out_edges.size(), -1);
        std::vector<std::pair<int, int>> edges2;
        for (int k = 0; k < static_cast<int>(out_edges.size()); ++k)
            if (!drop[k]) {
                remap[k] = static_cast<int>(edges2.size());
                edges2.push_back(out_edges[k]);
            }
        for (auto& rv : rot) {
            std::vector<int> nrv;
            nrv.reserve(rv.size());
            for (int d : rv)
                if (!drop[d / 2]) nrv.push_back(2 * remap[d / 2] + (d & 1));
            rv = std::move(nrv);
        }
        for (int e = 0; e < ne; ++e) {
            int k = rec.kept_edge_of[e];
            if (k < 0) continue;
            if (drop[k]) {
                auto key = std::minmax(out_edges[k].first, out_edges[k].second);
                rec.kept_edge_of[e] = remap[cycle_copy.at(key)];
            } else {
                rec.kept_edge_of[e] = remap[k];
            }
        }
        out_edges = std::move(edges2);
    }

    rec.output = build_plane_map(nv, std::move(out_edges), std::move(rot));
    return rec;
}

FlatWitness nearly_planar_to_flat(const CrossedEmbedding& ce) {
    TransformationRecord rec = plane_transformation(ce);
    CrossingCounts cc = crossings_per_edge(ce);
    const int n0 = ce.original_vertex_count;

    FlatWitness w;
    w.host = rec.output;
    if (!w.host.is_simple())
        throw NotSimpleError("transformation output has parallel edges");
    w.lambda = cc.max == 0 ? 1 : 2 * cc.max;
    w.tau.resize(n0);
    std::iota(w.tau.begin(), w.tau.end(), 0);

    AbstractGraph g = ce.original_graph();
    // g's edge list is sorted; match occurrences back to original indices
    std::multimap<std::pair<int, int>, int> pos;
    for (int e = 0; e < static_cast<int>(ce.original_edges.size()); ++e) {
        auto [u, v] = ce.original_edges[e];
        pos.insert({std::minmax(u, v), e});
    }
    w.edge_certs.resize(g.edges.size());
    for (size_t i = 0; i < g.edges.size(); ++i) {
        auto it = pos.find(g.edges[i]);
        int e = it->second;
        pos.erase(it);
        if (rec.kept_edge_of[e] >= 0) {
            w.edge_certs[i].host_edge = true;
            continue;
        }
        auto [u, v] = ce.original_edges[e];
        auto cert = wbw_distance(w.host, u, v);
        if (!cert || cert->length() > 2 * cc.per_edge[e])
            throw BoundViolationError("replacement walk longer than twice the edge's "
                                      "crossing count");
        w.edge_certs[i].cert = *cert;
    }

    // every host vertex reaches an original vertex within the crossing number
    if (cc.max > 0) {
        auto vd = wbw_to_prefix(w.host, n0);
        for (int v = 0; v < w.host.vertex_count; ++v)
            if (vd[v] > cc.max)
                throw BoundViolationError("host vertex too far from the original set");
    }
    long long expect = n0;
    for (int e = 0; e < static_cast<int>(ce.original_edges.size()); ++e)
        expect += std::max(cc.per_edge[e] - 1, 0);
    if (w.host.vertex_count != expect)
        throw Error("internal: host size accounting failed");

    std::string why;
    if (!check_flat_witness(g, w, &why))
        throw Error("internal: constructed witness invalid: " + why);
    return w;
}

GadgetResult keep_crossed_gadget(const CrossedEmbedding& ce) {
    GadgetResult r;
    r.record = plane_transformation(ce);
    const PlaneMap& host = r.record.output;
    if (!host.is_simple())
        throw NotSimpleError("transformation output has parallel edges");

    std::set<std::pair<int, int>> have;
    for (auto [u, v] : host.edges) have.insert(std::minmax(u, v));
    std::vector<std::pair<int, int>> ge = host.edges;
    for (const auto& q : r.record.crossing_cycles)
        for (auto [a, b] : {std::pair(q[0], q[2]), std::pair(q[1], q[3])}) {
            r.diagonals.emplace_back(a, b);
            if (have.insert(std::minmax(a, b)).second) ge.emplace_back(a, b);
        }
    r.graph = AbstractGraph::make(host.vertex_count, std::move(ge));

    r.witness.host = host;
    r.witness.lambda = ce.crossing_count() ? 2 : 1;
    r.witness.tau.resize(host.vertex_count);
    std::iota(r.witness.tau.begin(), r.witness.tau.end(), 0);
    AbstractGraph hg = host.graph();
    r.witness.edge_certs.resize(r.graph.edges.size());
    for (size_t i = 0; i < r.graph.edges.size(); ++i) {
        auto [a, b] = r.graph.edges[i];
        if (hg.has_edge(a, b)) {
            r.witness.edge_certs[i].host_edge = true;
            continue;
        }
        auto cert = wbw_distance(host, a, b);
        if (!cert || cert->length() > 2)
            throw BoundViolationError("crossing diagonal not at wbw distance 2");
        r.witness.edge_certs[i].cert = *cert;
    }
    std::string why;
    if (!check_flat_witness(r.graph, r.witness, &why))
        throw Error("internal: gadget witness invalid: " + why);
    return r;
}

SaturationRecord saturate(const PlaneMap& h) {
    if (h.vertex_count == 0) throw EmptyGraphError("cannot saturate the empty map");
    if (!h.is_simple()) throw NotSimpleError("saturation requires a simple map");
    if (h.components != 1) throw DisconnectedError("saturation requires a connected map");

    SaturationRecord rec;
    rec.original_vertex_count = h.vertex_count;
    rec.original_edge_count = h.edge_count();

    if (h.vertex_count == 1) {
        // lone vertex: three new neighbors forming a triangle around it
        rec.map = build_plane_map(
            4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {1, 3}},
            {{0, 2, 4}, {6, 1, 10}, {8, 3, 7}, {11, 5, 9}});
        rec.added_at = {{1, 2, 3}};
        return rec;
    }

    const int n = h.vertex_count, m = h.edge_count(), nd = h.dart_count();
    // one new vertex per corner; a degree-1 corner spans the full disc and
    // holds two, ordered along the face trace
    std::vector<int> u1(nd), u2(nd, -1);
    int next_v = n;
    for (int d = 0; d < nd; ++d) u1[d] = next_v++;
    for (int d = 0; d < nd; ++d)
        if (h.degree(h.origin(d)) == 1) u2[d] = next_v++;

    std::vector<std::pair<int, int>> edges = h.edges;
    edges.resize(m + (next_v - n));
    auto spoke = [&](int w) { return m + (w - n); };
    for (int d = 0; d < nd; ++d) edges[spoke(u1[d])] = {h.origin(d), u1[d]};
    for (int d = 0; d < nd; ++d)
        if (u2[d] >= 0) edges[spoke(u2[d])] = {h.origin(d), u2[d]};

    // the new vertices of each face, in trace order: the corner following
    // boundary dart b sits at head(b) and is indexed by twin(b)
    std::vector<std::vector<int>> cyc(h.face_count());
    for (int f = 0; f < h.face_count(); ++f)
        for (int b : h.faces[f]) {
            int t = h.twin(b);
            cyc[f].push_back(u1[t]);
            if (u2[t] >= 0) cyc[f].push_back(u2[t]);
        }

    std::vector<int> prev_cycle_edge(next_v - n), next_cycle_edge(next_v - n);
    for (int f = 0; f < h.face_count(); ++f) {
        int k = static_cast<int>(cyc[f].size());
        if (k < 3) throw Error("internal: face corner cycle too short");
        for (int i = 0; i < k; ++i) {
            int id = static_cast<int>(edges.size());
            edges.emplace_back(cyc[f][i], cyc[f][(i + 1) % k]);
            next_cycle_edge[cyc[f][i] - n] = id;
            prev_cycle_edge[cyc[f][(i + 1) % k] - n] = id;
        }
    }

    std::vector<std::vector<int>> rot(next_v);
    rec.added_at.assign(n, {});
    for (int v = 0; v < n; ++v)
        for (int d : h.rotation[v]) {
            rot[v].push_back(d);
            rot[v].push_back(2 * spoke(u1[d]));
            rec.added_at[v].push_back(u1[d]);
            if (u2[d] >= 0) {
                rot[v].push_back(2 * spoke(u2[d]));
                rec.added_at[v].push_back(u2[d]);
            }
        }
    for (int w = n; w < next_v; ++w)
        rot[w] = {2 * spoke(w) + 1, 2 * prev_cycle_edge[w - n] + 1,
                  2 * next_cycle_edge[w - n]};

    rec.map = build_plane_map(next_v, std::move(edges), std::move(rot));
    if (!rec.map.is_simple()) throw Error("internal: saturation not simple");
    if (!is_three_connected(rec.map.graph()))
        throw Error("internal: saturation not 3-connected");
    return rec;
}

TriangulationRecord triangulate(const PlaneMap& h) {
    TriangulationRecord rec;
    rec.saturation = saturate(h);
    rec.original_vertex_count = h.vertex_count;
    rec.original_edge_count = h.edge_count();
    const PlaneMap& hb = rec.saturation.map;
    const int nb = hb.vertex_count, nd = hb.dart_count(), nf = hb.face_count();
    rec.saturated_vertex_count = nb;
    rec.face_vertex.resize(nf);
    for (int f = 0; f < nf; ++f) rec.face_vertex[f] = nb + f;

    std::vector<std::pair<int, int>> edges = hb.edges;
    // one radial edge per corner (rot_prev(d), d), which belongs to face(d)
    std::vector<int> radial_of(nd);
    for (int d = 0; d < nd; ++d) {
        radial_of[d] = static_cast<int>(edges.size());
        edges.emplace_back(hb.origin(d), nb + hb.dart_face[d]);
    }

    std::vector<std::vector<int>> rot(nb + nf);
    for (int v = 0; v < nb; ++v)
        for (int d : hb.rotation[v]) {
            rot[v].push_back(2 * radial_of[d]);
            rot[v].push_back(d);
        }
    // a face vertex sees its boundary corners in reverse trace order
    for (int f = 0; f < nf; ++f)
        for (auto it = hb.faces[f].rbegin(); it != hb.faces[f].rend(); ++it)
            rot[nb + f].push_back(2 * radial_of[*it] + 1);

    rec.map = build_plane_map(nb + nf, std::move(edges), std::move(rot));
    for (const auto& fc : rec.map.faces)
        if (fc.size() != 3) throw Error("internal: non-triangular face after filling");
    if (!rec.map.is_simple()) throw Error("internal: triangulation not simple");
    if (!is_three_connected(rec.map.graph()))
        throw Error("internal: triangulation not 3-connected");

    // for small inputs, verify the metric guarantees exhaustively
    if (h.vertex_count <= 10) {
        auto dh = wbw_all_pairs(h);
        auto dt = wbw_all_pairs(rec.map);
        for (int x = 0; x < h.vertex_count; ++x)
            for (int y = x + 1; y < h.vertex_count; ++y)
                if (dh[x][y] > 0 && dt[x][y] > 4 * dh[x][y])
                    throw BoundViolationError("triangulation stretches a wbw distance "
                                              "beyond factor 4");
        auto vd = wbw_to_prefix(rec.map, h.vertex_count);
        for (int v = 0; v < rec.map.vertex_count; ++v)
            if (vd[v] > 4)
                throw BoundViolationError("triangulation vertex farther than wbw 4 "
                                          "from the original set");
    }
    return rec;
}

WbwCertificate lift_wbw_path(const TriangulationRecord& rec, const WbwCertificate& cert) {
    const PlaneMap& t = rec.map;
    if (cert.edges.empty()) throw InvalidCertificateError("empty walk");
    for (int e : cert.edges)
        if (e < 0 || e >= rec.original_edge_count)
            throw InvalidCertificateError("walk edge is not an original edge");

    WbwCertificate out;
    out.x = cert.x;
    out.y = cert.y;
    out.edges.push_back(cert.edges[0]);
    for (size_t i = 1; i < cert.edges.size(); ++i) {
        int e1 = cert.edges[i - 1], e2 = cert.edges[i];
        auto [a1, b1] = t.edges[e1];
        auto [a2, b2] = t.edges[e2];
        int w = (a1 == a2 || a1 == b2) ? a1 : (b1 == a2 || b1 == b2) ? b1 : -1;
        if (w < 0) throw InvalidCertificateError("consecutive walk edges share no vertex");
        int d1 = 2 * e1 + (t.edges[e1].first == w ? 0 : 1);
        int d2 = 2 * e2 + (t.edges[e2].first == w ? 0 : 1);
        const auto& r = t.rotation[w];
        const int sz = static_cast<int>(r.size());
        int p1 = t.rot_pos[d1], p2 = t.rot_pos[d2];
        // an attached pair of original edges has exactly the corner spoke and
        // its two flanking radial edges between its darts
        if ((p2 - p1 + sz) % sz == 4) {
            for (int s = 1; s <= 3; ++s) out.edges.push_back(r[(p1 + s) % sz] / 2);
        } else if ((p1 - p2 + sz) % sz == 4) {
            for (int s = 1; s <= 3; ++s) out.edges.push_back(r[(p1 - s + sz) % sz] / 2);
        } else {
            throw InvalidCertificateError("walk edges not attached in the source map");
        }
        out.edges.push_back(e2);
    }
    std::string why;
    if (!check_certificate(t, out, &why))
        throw InvalidCertificateError("lifted walk invalid: " + why);
    if (out.length() != 4 * cert.length() - 3)
        throw Error("internal: lifted walk length mismatch");
    return out;
}

} // namespace flatgraph
