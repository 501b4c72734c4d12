#include "flatgraph/crossings.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace flatgraph {

namespace {

Rational frac(const Rational& r) {
    using boost::multiprecision::cpp_int;
    cpp_int fl = numerator(r) / denominator(r); // r >= 0 throughout
    return r - Rational(fl);
}

int whole(const Rational& r) { return static_cast<int>(numerator(r) / denominator(r)); }

Point point_at(const std::vector<Point>& poly, const Rational& pos) {
    Rational f = frac(pos);
    int i = whole(pos);
    if (f == 0) return poly[i];
    Point d = poly[i + 1] - poly[i];
    return {poly[i].x + f * d.x, poly[i].y + f * d.y};
}

// the two departure directions of a polyline at an interior position
std::array<Point, 2> branch_dirs(const std::vector<Point>& poly, const Rational& pos) {
    Rational f = frac(pos);
    int i = whole(pos);
    if (f != 0) {
        Point d = poly[i + 1] - poly[i];
        return {d, Point{-d.x, -d.y}};
    }
    return {poly[i + 1] - poly[i], poly[i - 1] - poly[i]};
}

bool same_direction(const Point& a, const Point& b) {
    return cross(a, b) == 0 && dot(a, b) > 0;
}

// exact transversality: the branches of A and B alternate around the point
bool transversal(const std::array<Point, 2>& a, const std::array<Point, 2>& b) {
    std::vector<std::pair<Point, int>> dirs;
    dirs.push_back({a[0], 0});
    dirs.push_back({a[1], 0});
    dirs.push_back({b[0], 1});
    dirs.push_back({b[1], 1});
    for (size_t i = 0; i < dirs.size(); ++i)
        for (size_t j = i + 1; j < dirs.size(); ++j)
            if (same_direction(dirs[i].first, dirs[j].first))
                throw DegenerateGeometryError("tangential or overlapping curves at a meeting point");
    std::sort(dirs.begin(), dirs.end(),
              [](const auto& l, const auto& r) { return angle_less(l.first, r.first); });
    return dirs[0].second != dirs[1].second && dirs[1].second != dirs[2].second &&
           dirs[2].second != dirs[3].second;
}

struct SharedPt {
    Point p;
    Rational pos_a, pos_b;
};

// all meeting points of two polylines; collinear overlap is degenerate
std::vector<SharedPt> polyline_meetings(const std::vector<Point>& A, const std::vector<Point>& B) {
    std::map<Point, SharedPt> byp;
    for (size_t i = 0; i + 1 < A.size(); ++i) {
        for (size_t j = 0; j + 1 < B.size(); ++j) {
            SegmentMeeting m = meet_segments(A[i], A[i + 1], B[j], B[j + 1]);
            if (m.kind == SegmentMeeting::Overlap)
                throw DegenerateGeometryError("overlapping segments");
            if (m.kind == SegmentMeeting::AtPoint) {
                SharedPt s{m.p, Rational(i) + m.t1, Rational(j) + m.t2};
                // a bend shows up from both adjacent pieces with equal pos;
                // anything else revisiting the point is a self-coincidence
                auto [it, fresh] = byp.emplace(m.p, s);
                if (!fresh && (it->second.pos_a != s.pos_a || it->second.pos_b != s.pos_b))
                    throw DegenerateGeometryError("polyline self-coincidence");
            }
        }
    }
    std::vector<SharedPt> out;
    for (auto& [p, s] : byp) out.push_back(s);
    return out;
}

void check_self_simple(const std::vector<Point>& poly) {
    for (size_t i = 0; i + 1 < poly.size(); ++i) {
        if (poly[i] == poly[i + 1])
            throw DegenerateGeometryError("zero-length polyline piece");
        for (size_t j = i + 1; j + 1 < poly.size(); ++j) {
            SegmentMeeting m = meet_segments(poly[i], poly[i + 1], poly[j], poly[j + 1]);
            if (m.kind == SegmentMeeting::None) continue;
            if (m.kind == SegmentMeeting::Overlap)
                throw DegenerateGeometryError("polyline backtracks over itself");
            bool shared_bend = (j == i + 1) && m.p == poly[j];
            if (!shared_bend)
                throw DegenerateGeometryError("self-intersecting polyline");
        }
    }
}

} // namespace

CrossedEmbedding assemble_crossed_embedding(int vertex_count,
                                            const std::vector<std::pair<int, int>>& edges,
                                            const std::vector<Point>& vertex_points,
                                            const std::vector<std::vector<Point>>& polylines,
                                            bool parallel, std::vector<Point>* node_points_out) {
    const int ne = static_cast<int>(edges.size());
    if (static_cast<int>(vertex_points.size()) != vertex_count)
        throw Error("vertex point count mismatch");
    if (static_cast<int>(polylines.size()) != ne) throw Error("polyline count mismatch");

    std::set<Point> vset(vertex_points.begin(), vertex_points.end());
    if (static_cast<int>(vset.size()) != vertex_count)
        throw DegenerateGeometryError("coincident vertices");

    for (int e = 0; e < ne; ++e) {
        const auto& [u, v] = edges[e];
        if (u == v) throw LoopError("loop edge");
        if (polylines[e].size() < 2 || polylines[e].front() != vertex_points[u] ||
            polylines[e].back() != vertex_points[v])
            throw Error("polyline endpoints do not match edge " + std::to_string(e));
        check_self_simple(polylines[e]);
    }

    // pairwise meeting points
    struct Crossing {
        Point p;
        int ea, eb;
        Rational pos_a, pos_b;
    };
    std::vector<std::pair<int, int>> pairs;
    for (int e = 0; e < ne; ++e)
        for (int f = e + 1; f < ne; ++f) pairs.emplace_back(e, f);
    std::vector<std::vector<Crossing>> per_pair(pairs.size());
    std::vector<std::string> pair_error(pairs.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long long pi = 0; pi < static_cast<long long>(pairs.size()); ++pi) {
        auto [e, f] = pairs[pi];
        try {
            auto lena = Rational(static_cast<int>(polylines[e].size()) - 1);
            auto lenb = Rational(static_cast<int>(polylines[f].size()) - 1);
            for (const SharedPt& s : polyline_meetings(polylines[e], polylines[f])) {
                bool end_a = s.pos_a == 0 || s.pos_a == lena;
                bool end_b = s.pos_b == 0 || s.pos_b == lenb;
                if (end_a && end_b) continue; // edges legitimately meeting at a shared vertex
                if (end_a || end_b || vset.count(s.p))
                    throw DegenerateGeometryError("edge passes through a vertex");
                if (!transversal(branch_dirs(polylines[e], s.pos_a),
                                 branch_dirs(polylines[f], s.pos_b)))
                    throw DegenerateGeometryError("non-transversal touching point");
                per_pair[pi].push_back({s.p, e, f, s.pos_a, s.pos_b});
            }
        } catch (const Error& err) {
            pair_error[pi] = err.what();
        }
    }
    (void)parallel;
    for (const auto& msg : pair_error)
        if (!msg.empty()) throw DegenerateGeometryError(msg);

    // triple-point screen and canonical crossing numbering
    std::map<Point, Crossing> by_point;
    for (const auto& v : per_pair)
        for (const Crossing& c : v)
            if (!by_point.emplace(c.p, c).second)
                throw DegenerateGeometryError("more than two edges cross at one point");

    CrossedEmbedding ce;
    ce.original_vertex_count = vertex_count;
    ce.original_edges = edges;

    std::map<Point, int> crossing_id;
    std::vector<Point> node_point(vertex_points);
    for (const auto& [p, c] : by_point) {
        crossing_id[p] = static_cast<int>(node_point.size());
        ce.crossing_vertices.push_back(static_cast<int>(node_point.size()));
        node_point.push_back(p);
    }

    // split each polyline at its crossings, in order along the edge
    std::vector<std::vector<std::pair<Rational, int>>> splits(ne); // (pos, node)
    for (const auto& [p, c] : by_point) {
        splits[c.ea].push_back({c.pos_a, crossing_id[p]});
        splits[c.eb].push_back({c.pos_b, crossing_id[p]});
    }

    std::vector<std::pair<int, int>> plan_edges;
    std::vector<int> subseg_orig; // planarization edge -> original edge
    std::vector<std::vector<std::pair<Point, int>>> station(node_point.size()); // (direction, dart)
    ce.edge_trails.assign(ne, {});

    for (int e = 0; e < ne; ++e) {
        auto& sp = splits[e];
        std::sort(sp.begin(), sp.end());
        const auto& poly = polylines[e];
        std::vector<std::pair<Rational, int>> nodes;
        nodes.push_back({Rational(0), edges[e].first});
        for (auto& s : sp) nodes.push_back(s);
        nodes.push_back({Rational(static_cast<int>(poly.size()) - 1), edges[e].second});
        for (size_t i = 0; i + 1 < nodes.size(); ++i) {
            auto [pos0, n0] = nodes[i];
            auto [pos1, n1] = nodes[i + 1];
            if (pos0 >= pos1) throw DegenerateGeometryError("crossing order degenerate");
            std::vector<Point> pts;
            pts.push_back(point_at(poly, pos0));
            for (int b = whole(pos0) + 1; Rational(b) < pos1; ++b)
                if (Rational(b) > pos0) pts.push_back(poly[b]);
            pts.push_back(point_at(poly, pos1));
            int k = static_cast<int>(plan_edges.size());
            plan_edges.emplace_back(n0, n1);
            subseg_orig.push_back(e);
            station[n0].push_back({pts[1] - pts[0], 2 * k});
            station[n1].push_back({pts[pts.size() - 2] - pts.back(), 2 * k + 1});
            ce.edge_trails[e].push_back(2 * k);
        }
    }

    std::vector<std::vector<int>> rotation(node_point.size());
    for (size_t v = 0; v < node_point.size(); ++v) {
        auto& st = station[v];
        std::sort(st.begin(), st.end(),
                  [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
        for (size_t i = 0; i < st.size(); ++i) {
            if (same_direction(st[i].first, st[(i + 1) % st.size()].first) && st.size() > 1)
                throw DegenerateGeometryError("coinciding directions at a vertex");
            rotation[v].push_back(st[i].second);
        }
    }

    ce.planarization = build_plane_map(static_cast<int>(node_point.size()),
                                       std::move(plan_edges), std::move(rotation));

    for (int cv : ce.crossing_vertices) {
        const auto& rot = ce.planarization.rotation[cv];
        if (rot.size() != 4) throw Error("crossing vertex degree != 4");
        std::array<int, 4> darts{rot[0], rot[1], rot[2], rot[3]};
        if (subseg_orig[ce.planarization.edge_of(darts[0])] !=
                subseg_orig[ce.planarization.edge_of(darts[2])] ||
            subseg_orig[ce.planarization.edge_of(darts[1])] !=
                subseg_orig[ce.planarization.edge_of(darts[3])])
            throw Error("crossing darts do not pair opposite");
        ce.crossing_darts.push_back(darts);
    }
    if (node_points_out) *node_points_out = std::move(node_point);
    return ce;
}

Drawing make_drawing(const CrossedEmbedding& ce, const std::vector<Point>& pts) {
    Drawing d;
    Rational minx = pts[0].x, maxx = pts[0].x, miny = pts[0].y, maxy = pts[0].y;
    for (const Point& p : pts) {
        minx = std::min(minx, p.x); maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y); maxy = std::max(maxy, p.y);
    }
    Rational span = std::max(maxx - minx, maxy - miny);
    if (span == 0) span = 1;
    auto norm = [&](const Point& p) {
        return Point{(p.x - minx) / span, (p.y - miny) / span};
    };
    for (const Point& p : pts) d.coords.push_back(norm(p));

    const PlaneMap& pm = ce.planarization;
    for (const auto& trail : ce.edge_trails) {
        std::vector<Point> poly;
        poly.push_back(d.coords[pm.origin(trail.front())]);
        for (int dart : trail) poly.push_back(d.coords[pm.head(dart)]);
        d.polylines.push_back(std::move(poly));
    }
    return d;
}

namespace {

std::uint64_t xorshift(std::uint64_t& s) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
}

} // namespace

PlanarizeResult planarize(const std::vector<Point>& vertices,
                          const std::vector<std::pair<int, int>>& edges,
                          std::uint64_t seed) {
    const int rounds = 32;
    Rational span = 1;
    for (const Point& p : vertices) {
        span = std::max(span, Rational(abs(p.x)));
        span = std::max(span, Rational(abs(p.y)));
    }
    std::string last = "degenerate input";
    for (int r = 0; r < rounds; ++r) {
        std::uint64_t round_seed = seed + 7919 * r;
        std::vector<Point> pts = vertices;
        if (r > 0) {
            std::uint64_t s = round_seed;
            Rational amp = span / Rational(1 << 12);
            for (Point& p : pts) {
                auto j = [&] {
                    std::int64_t v = static_cast<std::int64_t>(xorshift(s) % 65537) - 32768;
                    return amp * Rational(v) / Rational(32768);
                };
                p.x += j();
                p.y += j();
            }
        }
        try {
            std::vector<std::vector<Point>> polylines;
            for (const auto& [u, v] : edges)
                polylines.push_back({pts[u], pts[v]});
            PlanarizeResult out;
            std::vector<Point> node_pts;
            out.embedding = assemble_crossed_embedding(
                static_cast<int>(pts.size()), edges, pts, polylines, true, &node_pts);
            out.drawing = make_drawing(out.embedding, node_pts);
            out.seed_used = r == 0 ? seed : round_seed;
            return out;
        } catch (const DegenerateGeometryError& err) {
            last = err.what();
        }
    }
    throw DegenerateGeometryError("perturbation failed: " + last);
}

CrossingCounts crossings_per_edge(const CrossedEmbedding& ce) {
    CrossingCounts out;
    out.per_edge.reserve(ce.edge_trails.size());
    std::set<int> crossings(ce.crossing_vertices.begin(), ce.crossing_vertices.end());
    for (const auto& trail : ce.edge_trails) {
        int c = 0;
        for (size_t i = 0; i + 1 < trail.size(); ++i)
            if (crossings.count(ce.planarization.head(trail[i]))) ++c;
        out.per_edge.push_back(c);
        out.max = std::max(out.max, c);
    }
    return out;
}

CrossingCounts recount_from_drawing(const std::vector<std::pair<int, int>>& edges,
                                    const Drawing& d) {
    CrossingCounts out;
    out.per_edge.assign(edges.size(), 0);
    for (size_t e = 0; e < edges.size(); ++e) {
        for (size_t f = e + 1; f < edges.size(); ++f) {
            auto lena = Rational(static_cast<int>(d.polylines[e].size()) - 1);
            auto lenb = Rational(static_cast<int>(d.polylines[f].size()) - 1);
            for (const SharedPt& s : polyline_meetings(d.polylines[e], d.polylines[f])) {
                bool end_a = s.pos_a == 0 || s.pos_a == lena;
                bool end_b = s.pos_b == 0 || s.pos_b == lenb;
                if (end_a && end_b) continue;
                if (end_a || end_b)
                    throw DegenerateGeometryError("polyline endpoint on another edge");
                if (!transversal(branch_dirs(d.polylines[e], s.pos_a),
                                 branch_dirs(d.polylines[f], s.pos_b)))
                    throw DegenerateGeometryError("non-transversal touching point");
                ++out.per_edge[e];
                ++out.per_edge[f];
            }
        }
    }
    for (int c : out.per_edge) out.max = std::max(out.max, c);
    return out;
}

bool check_sparsity(const AbstractGraph& g, int xi) {
    using boost::multiprecision::cpp_int;
    if (xi < 1) throw Error("xi must be at least 1");
    cpp_int lhs = cpp_int(g.edge_count()) * 1000;
    lhs *= lhs;
    cpp_int rhs = cpp_int(4108) * 4108 * xi * g.vertex_count * g.vertex_count;
    return lhs <= rhs;
}

} // namespace flatgraph
