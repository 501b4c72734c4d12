#include "flatgraph/equivalence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace flatgraph {

using boost::multiprecision::cpp_int;

PlaneMap subdivide_all_edges(const PlaneMap& m) {
    const int n = m.vertex_count, ec = m.edge_count();
    std::vector<std::pair<int, int>> edges(2 * ec);
    std::vector<std::vector<int>> rot(n + ec);
    for (int k = 0; k < ec; ++k) {
        edges[2 * k] = {m.edges[k].first, n + k};
        edges[2 * k + 1] = {n + k, m.edges[k].second};
        rot[n + k] = {4 * k + 1, 4 * k + 2};
    }
    for (int v = 0; v < n; ++v) {
        rot[v].reserve(m.rotation[v].size());
        for (int d : m.rotation[v]) {
            int k = d / 2;
            rot[v].push_back(d % 2 == 0 ? 4 * k : 4 * k + 3);
        }
    }
    return build_plane_map(n + ec, std::move(edges), std::move(rot));
}

namespace {

/// One straight-line crossing-free drawing of a host component; enough when
/// every edge of g living there is a host edge.
void draw_component_flat(const PlaneMap& jc, const std::vector<int>& gverts,
                         const std::vector<int>& gedges, const AbstractGraph& g,
                         const std::vector<int>& loc, std::vector<Point>& vpts,
                         std::vector<std::vector<Point>>& epolys) {
    auto t = triangulate(jc);
    auto pts = tutte_layout(t.map, 0);
    for (int v : gverts) vpts[v] = pts[loc[v]];
    for (int ei : gedges) {
        auto [u, v] = g.edges[ei];
        epolys[ei] = {pts[loc[u]], pts[loc[v]]};
    }
}

void draw_component_power(const PlaneMap& jc, int lambda, const std::vector<int>& gverts,
                          const std::vector<int>& gedges, const AbstractGraph& g,
                          const std::vector<int>& loc, std::vector<Point>& vpts,
                          std::vector<std::vector<Point>>& epolys) {
    PlaneMap h = subdivide_all_edges(jc);
    auto t = triangulate(h);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(gedges.size());
    for (int ei : gedges)
        pairs.push_back(std::minmax(loc[g.edges[ei].first], loc[g.edges[ei].second]));
    auto res = draw_power(t.map, 8 * lambda, &pairs);
    std::map<std::pair<int, int>, int> drawn_index;
    for (size_t i = t.map.edge_count(); i < res.embedding.original_edges.size(); ++i)
        drawn_index[res.embedding.original_edges[i]] = static_cast<int>(i);
    for (int v : gverts) vpts[v] = res.drawing.coords[loc[v]];
    for (int ei : gedges) {
        auto [u, v] = g.edges[ei];
        auto poly = res.drawing.polylines[drawn_index.at(std::minmax(loc[u], loc[v]))];
        if (poly.front() != res.drawing.coords[loc[u]]) std::reverse(poly.begin(), poly.end());
        if (poly.front() != res.drawing.coords[loc[u]] ||
            poly.back() != res.drawing.coords[loc[v]])
            throw Error("internal: routed curve misses its endpoints");
        epolys[ei] = std::move(poly);
    }
}

} // namespace

NearlyPlanarDrawing flat_to_nearly_planar(const AbstractGraph& g, const FlatWitness& w) {
    std::string why;
    if (!check_flat_witness(g, w, &why)) throw InvalidCertificateError(why);
    if (!g.is_simple()) throw NotSimpleError("drawing pipeline requires a simple graph");

    auto split = split_components(w.host);
    const int comps = static_cast<int>(split.maps.size());
    std::vector<std::vector<int>> gverts(comps), gedges(comps);
    for (int v = 0; v < g.vertex_count; ++v)
        gverts[split.comp_of[w.tau[v]]].push_back(v);
    for (int i = 0; i < g.edge_count(); ++i) {
        int cu = split.comp_of[w.tau[g.edges[i].first]];
        if (cu != split.comp_of[w.tau[g.edges[i].second]])
            throw InvalidCertificateError("edge endpoints in different host components");
        gedges[cu].push_back(i);
    }
    std::vector<int> loc(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) loc[v] = split.local_id[w.tau[v]];

    NearlyPlanarDrawing out;
    out.vertex_points.assign(g.vertex_count, Point{0, 0});
    out.polylines.resize(g.edge_count());
    out.bound = cpp_int(1) << (8 * w.lambda);

    Rational xoff = 0;
    for (int c = 0; c < comps; ++c) {
        if (gverts[c].empty()) continue;
        if (w.lambda == 1 || gedges[c].empty())
            draw_component_flat(split.maps[c], gverts[c], gedges[c], g, loc,
                                out.vertex_points, out.polylines);
        else
            draw_component_power(split.maps[c], w.lambda, gverts[c], gedges[c], g, loc,
                                 out.vertex_points, out.polylines);

        // place this component to the right of everything drawn so far
        Rational minx = out.vertex_points[gverts[c][0]].x, maxx = minx;
        Rational miny = out.vertex_points[gverts[c][0]].y;
        auto grow = [&](const Point& p) {
            minx = std::min(minx, p.x);
            maxx = std::max(maxx, p.x);
            miny = std::min(miny, p.y);
        };
        for (int v : gverts[c]) grow(out.vertex_points[v]);
        for (int ei : gedges[c])
            for (const Point& p : out.polylines[ei]) grow(p);
        Point shift{xoff - minx, -miny};
        for (int v : gverts[c]) out.vertex_points[v] = out.vertex_points[v] + shift;
        for (int ei : gedges[c])
            for (Point& p : out.polylines[ei]) p = p + shift;
        xoff += maxx - minx + 1;
    }

    out.embedding = assemble_crossed_embedding(g.vertex_count, g.edges, out.vertex_points,
                                               out.polylines);
    auto cc = crossings_per_edge(out.embedding);
    out.max_crossings = cc.max;
    if (cpp_int(cc.max) > out.bound)
        throw BoundViolationError("drawing exceeds the 2^(8 lambda) crossing bound");
    return out;
}

EquivalenceCertificate certify_equivalence(const AbstractGraph& g, const FlatWitness& w,
                                           const CrossedEmbedding& drawing) {
    std::string why;
    if (!check_flat_witness(g, w, &why)) throw InvalidCertificateError(why);
    if (drawing.original_graph() != g)
        throw InvalidCertificateError("drawing and witness describe different graphs");

    EquivalenceCertificate cert;
    cert.graph = g;
    cert.lambda_given = w.lambda;
    cert.xi_given = crossings_per_edge(drawing).max;
    cert.lambda_derived = nearly_planar_to_flat(drawing).lambda;
    cert.xi_derived = flat_to_nearly_planar(g, w).max_crossings;
    cert.lambda_achieved = std::min(cert.lambda_given, cert.lambda_derived);
    cert.xi_achieved = std::min(cert.xi_given, cert.xi_derived);
    cert.xi_upper = cpp_int(1) << (8 * cert.lambda_given);
    cert.bounds_hold = cert.lambda_derived / 2 <= cert.xi_given &&
                       cpp_int(cert.xi_derived) <= cert.xi_upper;
    if (!cert.bounds_hold) throw BoundViolationError("equivalence inequalities failed");
    return cert;
}

TopologicalMinorGadget gadget_topological_minor(int n, std::uint64_t seed) {
    if (n < 2) throw Error("gadget needs at least two vertices");
    std::vector<Point> pts;
    std::vector<std::pair<int, int>> kedges;
    for (long long j = 0; j < n; ++j) {
        // rational points on an ellipse, convex position
        long long den = 1 + j * j;
        pts.push_back({Rational(8 * (1 - j * j), den), Rational(16 * j, den)});
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) kedges.emplace_back(u, v);

    auto pr = planarize(pts, kedges, seed);
    auto gad = keep_crossed_gadget(pr.embedding);
    const auto& oe = pr.embedding.original_edges;

    TopologicalMinorGadget out;
    out.graph = std::move(gad.graph);
    out.witness = std::move(gad.witness);
    out.record = std::move(gad.record);
    out.diagonals = std::move(gad.diagonals);
    out.complete_pattern = AbstractGraph::make(n, kedges);
    out.subdivision.branch.resize(n);
    std::iota(out.subdivision.branch.begin(), out.subdivision.branch.end(), 0);
    for (const auto& [u, v] : out.complete_pattern.edges) {
        int e = -1;
        for (size_t i = 0; i < oe.size(); ++i)
            if (std::min(oe[i].first, oe[i].second) == u &&
                std::max(oe[i].first, oe[i].second) == v) {
                e = static_cast<int>(i);
                break;
            }
        if (e < 0) throw Error("internal: pattern edge missing from the drawing");
        std::vector<int> path{u};
        auto mid = out.record.subdivision_map[e];
        if (oe[e].first != u) std::reverse(mid.begin(), mid.end());
        path.insert(path.end(), mid.begin(), mid.end());
        path.push_back(v);
        out.subdivision.paths.push_back(std::move(path));
    }
    if (!contains_subdivision(out.graph, out.complete_pattern, out.subdivision))
        throw Error("internal: gadget subdivision witness failed");
    return out;
}

namespace {

PlaneMap grid_map(int rows, int cols) {
    auto id = [&](int r, int c) { return r * cols + c; };
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> east(rows, std::vector<int>(cols, -1));
    std::vector<std::vector<int>> north(rows, std::vector<int>(cols, -1));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) {
                east[r][c] = static_cast<int>(edges.size());
                edges.emplace_back(id(r, c), id(r, c + 1));
            }
            if (r + 1 < rows) {
                north[r][c] = static_cast<int>(edges.size());
                edges.emplace_back(id(r, c), id(r + 1, c));
            }
        }
    std::vector<std::vector<int>> rot(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            auto& rv = rot[id(r, c)];
            if (c + 1 < cols) rv.push_back(2 * east[r][c]);
            if (r + 1 < rows) rv.push_back(2 * north[r][c]);
            if (c > 0) rv.push_back(2 * east[r][c - 1] + 1);
            if (r > 0) rv.push_back(2 * north[r - 1][c] + 1);
        }
    return build_plane_map(rows * cols, std::move(edges), std::move(rot));
}

/// Same union rule as contract_edges (keep the smaller representative),
/// so the resulting labels match its compaction.
std::vector<int> contraction_labels(int n, const std::vector<std::pair<int, int>>& seq) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : seq) {
        int a = find(u), b = find(v);
        parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> label(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (find(v) == v) label[v] = next++;
    for (int v = 0; v < n; ++v) label[v] = label[find(v)];
    return label;
}

} // namespace

ContractionGadget gadget_contraction(int n) {
    if (n < 2) throw Error("gadget needs n >= 2");
    const int side = 2 * n, cells = side * side;
    ContractionGadget out;
    out.grid = grid_map(side, side);
    out.graph = lambda_power(out.grid, 2);

    out.witness.host = out.grid;
    out.witness.lambda = 2;
    out.witness.tau.resize(cells);
    std::iota(out.witness.tau.begin(), out.witness.tau.end(), 0);
    for (const auto& [u, v] : out.graph.edges) {
        FlatWitness::EdgeCert ec;
        if (out.grid.graph().has_edge(u, v)) {
            ec.host_edge = true;
        } else {
            auto c = wbw_distance(out.grid, u, v);
            if (!c || c->length() > 2) throw Error("internal: power edge beyond wbw 2");
            ec.cert = *c;
        }
        out.witness.edge_certs.push_back(std::move(ec));
    }
    std::string why;
    if (!check_flat_witness(out.graph, out.witness, &why))
        throw Error("internal: grid witness failed: " + why);

    // even-parity cells by row pair, odd-parity cells by column pair
    out.class_of.resize(cells);
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c)
            out.class_of[r * side + c] = (r + c) % 2 == 0 ? r / 2 : n + c / 2;

    auto adj = out.graph.adjacency();
    for (int cls = 0; cls < 2 * n; ++cls) {
        int start = -1, reached = 0, total = 0;
        for (int v = 0; v < cells; ++v)
            if (out.class_of[v] == cls) {
                ++total;
                if (start < 0) start = v;
            }
        std::vector<char> seen(cells, 0);
        std::queue<int> q;
        seen[start] = 1;
        q.push(start);
        ++reached;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : adj[v])
                if (!seen[u] && out.class_of[u] == cls) {
                    seen[u] = 1;
                    out.schedule.emplace_back(v, u);
                    q.push(u);
                    ++reached;
                }
        }
        if (reached != total) throw Error("internal: contraction class not connected");
    }

    out.bipartite_quotient = contract_edges(out.graph, out.schedule);
    auto label = contraction_labels(cells, out.schedule);
    std::vector<int> rep(2 * n, -1);
    for (int v = 0; v < cells; ++v) {
        int cls = out.class_of[v];
        if (rep[cls] < 0) rep[cls] = label[v];
        else if (rep[cls] != label[v]) throw Error("internal: class split by contraction");
    }
    if (out.bipartite_quotient.vertex_count != 2 * n)
        throw Error("internal: quotient has the wrong order");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!out.bipartite_quotient.has_edge(rep[i], rep[n + j]))
                throw Error("internal: quotient misses a bipartite edge");

    for (int i = 0; i < n; ++i) out.merge_schedule.emplace_back(rep[i], rep[n + i]);
    out.complete_quotient = contract_edges(out.bipartite_quotient, out.merge_schedule);
    if (out.complete_quotient.vertex_count != n)
        throw Error("internal: merged quotient has the wrong order");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!out.complete_quotient.has_edge(u, v))
                throw Error("internal: merged quotient is not complete");
    return out;
}

bool lambda_is_one_iff_planar(const AbstractGraph& g) {
    auto emb = planar_embedding(g);
    // non-planar: a simple plane host with G inside its first power would be
    // a planar supergraph of G, so no witness can exist; the sides agree
    if (!emb) return true;
    FlatWitness w;
    w.host = *emb;
    w.lambda = 1;
    w.tau.resize(g.vertex_count);
    std::iota(w.tau.begin(), w.tau.end(), 0);
    w.edge_certs.assign(g.edges.size(), FlatWitness::EdgeCert{true, {}});
    std::string why;
    return check_flat_witness(g, w, &why);
}

} // namespace flatgraph
