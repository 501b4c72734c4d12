#include "flatgraph/constructions.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace flatgraph {

namespace {

// ----------------------------------------------------------------- layout --

bool layout_valid(const PlaneMap& m, int outer_face, const std::vector<Point>& pts) {
    std::set<Point> distinct(pts.begin(), pts.end());
    if (static_cast<int>(distinct.size()) != m.vertex_count) return false;
    for (int f = 0; f < m.face_count(); ++f) {
        const auto& fd = m.faces[f];
        const int need = f == outer_face ? 1 : -1;
        const int r = static_cast<int>(fd.size());
        for (int i = 0; i < r; ++i) {
            const Point& a = pts[m.origin(fd[i])];
            const Point& b = pts[m.origin(fd[(i + 1) % r])];
            const Point& c = pts[m.origin(fd[(i + 2) % r])];
            if (orientation(a, b, c) != need) return false;
        }
    }
    return true;
}

// Dense rational Gaussian elimination for the barycentric system; fallback
// when the snapped floating solution fails the exact orientation check.
std::optional<std::vector<Point>> solve_exact(const PlaneMap& m,
                                              const std::vector<char>& fixed,
                                              const std::vector<std::vector<int>>& adj,
                                              std::vector<Point> pts) {
    std::vector<int> idx(m.vertex_count, -1);
    int n = 0;
    for (int v = 0; v < m.vertex_count; ++v)
        if (!fixed[v]) idx[v] = n++;
    if (n == 0) return pts;

    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 2, 0));
    for (int v = 0; v < m.vertex_count; ++v) {
        if (fixed[v]) continue;
        int i = idx[v];
        a[i][i] = static_cast<int>(adj[v].size());
        for (int w : adj[v]) {
            if (fixed[w]) {
                a[i][n] += pts[w].x;
                a[i][n + 1] += pts[w].y;
            } else {
                a[i][idx[w]] -= 1;
            }
        }
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) return std::nullopt;
        std::swap(a[col], a[piv]);
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational fac = a[r][col] / a[col][col];
            for (int c = col; c < n + 2; ++c) a[r][c] -= fac * a[col][c];
        }
    }
    std::vector<Rational> sx(n), sy(n);
    for (int r = n - 1; r >= 0; --r) {
        Rational vx = a[r][n], vy = a[r][n + 1];
        for (int c = r + 1; c < n; ++c) {
            vx -= a[r][c] * sx[c];
            vy -= a[r][c] * sy[c];
        }
        sx[r] = vx / a[r][r];
        sy[r] = vy / a[r][r];
    }
    for (int v = 0; v < m.vertex_count; ++v)
        if (!fixed[v]) pts[v] = {sx[idx[v]], sy[idx[v]]};
    return pts;
}

} // namespace

std::vector<Point> tutte_layout(const PlaneMap& m, int outer_face) {
    if (outer_face < 0 || outer_face >= m.face_count())
        throw Error("outer face out of range");
    if (!m.is_simple()) throw NotSimpleError("layout requires a simple map");
    if (m.components != 1) throw DisconnectedError("layout requires a connected map");

    const auto& ob = m.faces[outer_face];
    const int k = static_cast<int>(ob.size());
    if (k < 3) throw Error("outer face must have at least three corners");

    std::vector<Point> pts(m.vertex_count, Point{0, 0});
    std::vector<char> fixed(m.vertex_count, 0);
    for (int j = 0; j < k; ++j) {
        int v = m.origin(ob[j]);
        if (fixed[v]) throw Error("outer face boundary revisits a vertex");
        // rational points on a circle: outer trace order is counterclockwise
        Rational t = j, den = 1 + t * t;
        pts[v] = {8 * (1 - t * t) / den, 16 * t / den};
        fixed[v] = 1;
    }

    std::vector<std::vector<int>> adj(m.vertex_count);
    for (auto [u, v] : m.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    // floating barycentric solve
    std::vector<long double> x(m.vertex_count, 0), y(m.vertex_count, 0);
    long double cx = 0, cy = 0;
    for (int v = 0; v < m.vertex_count; ++v)
        if (fixed[v]) {
            x[v] = pts[v].x.convert_to<long double>();
            y[v] = pts[v].y.convert_to<long double>();
            cx += x[v] / k;
            cy += y[v] / k;
        }
    for (int v = 0; v < m.vertex_count; ++v)
        if (!fixed[v]) { x[v] = cx; y[v] = cy; }
    for (int sweep = 0; sweep < 100000; ++sweep) {
        long double delta = 0;
        for (int v = 0; v < m.vertex_count; ++v) {
            if (fixed[v]) continue;
            long double nx = 0, ny = 0;
            for (int w : adj[v]) { nx += x[w]; ny += y[w]; }
            nx /= adj[v].size();
            ny /= adj[v].size();
            delta = std::max({delta, std::fabs(nx - x[v]), std::fabs(ny - y[v])});
            x[v] = nx;
            y[v] = ny;
        }
        if (delta < 1e-14L) break;
    }

    for (int bits : {28, 40, 48}) {
        const long double scale = std::ldexp(1.0L, bits);
        const Rational den = Rational(1LL << bits);
        std::vector<Point> snap(pts);
        for (int v = 0; v < m.vertex_count; ++v) {
            if (fixed[v]) continue;
            snap[v] = {Rational(static_cast<long long>(std::llroundl(x[v] * scale))) / den,
                       Rational(static_cast<long long>(std::llroundl(y[v] * scale))) / den};
        }
        if (layout_valid(m, outer_face, snap)) return snap;
    }
    auto exact = solve_exact(m, fixed, adj, pts);
    if (exact && layout_valid(m, outer_face, *exact)) return *exact;
    throw DegenerateGeometryError("no exactly verified layout found");
}

// ------------------------------------------------------------- draw_power --

namespace {

struct Route {
    int x = -1, y = -1;
    std::vector<int> edges; // wbw walk, length l >= 3
    std::vector<int> faces; // l-1 corner faces, pairwise distinct
    std::vector<int> ranks; // i in [1, l-2]: crossing order rank on edges[i]
};

struct ExitItem {
    bool at_vertex = false;
    int id = -1;
};

// Waypoint i of a route sits on edges[i] (endpoints x, y for i = 0, l-1);
// traversal i runs from waypoint i to waypoint i+1 through faces[i].
ExitItem walk_exit(const Route& r, int trav, int dir) {
    const int l = static_cast<int>(r.edges.size());
    if (dir > 0)
        return trav + 1 <= l - 2 ? ExitItem{false, r.edges[trav + 1]} : ExitItem{true, r.y};
    return trav >= 1 ? ExitItem{false, r.edges[trav]} : ExitItem{true, r.x};
}

std::pair<int, int> entry_state(const Route& r, int i, int f) {
    if (r.faces[i] == f) return {i, 1};
    if (r.faces[i - 1] == f) return {i - 1, -1};
    throw Error("internal: side face does not flank the waypoint");
}

// Orders the waypoints crossing one host edge by walking the two routes in
// lockstep into each side face and comparing where they first leave a common
// corridor; the earlier divergence decides when the two sides disagree.
class AnchorOrdering {
public:
    AnchorOrdering(const PlaneMap& m, const std::vector<Route>& routes)
        : m_(m), routes_(routes) {}

    // < 0: waypoint (ra, ia) crosses edge k closer to m.edges[k].first
    int compare(int k, int ra, int ia, int rb, int ib) const {
        const int f1 = m_.dart_face[2 * k], f2 = m_.dart_face[2 * k + 1];
        auto [o1, s1] = side(k, f1, ra, ia, rb, ib);
        auto [o2, s2] = side(k, f2, ra, ia, rb, ib);
        const int p1 = pref(k, f1, o1), p2 = pref(k, f2, o2);
        int p = 0;
        if (p1 == 0) p = p2;
        else if (p2 == 0 || p1 == p2) p = p1;
        else if (s1 != s2) p = s1 < s2 ? p1 : p2;
        else p = f1 < f2 ? p1 : p2;
        if (p) return p;
        return ra != rb ? (ra < rb ? -1 : 1) : (ia < ib ? -1 : 1);
    }

private:
    // translate "exits lefter in face f" into position along the edge
    int pref(int k, int f, int order) const {
        if (!order) return 0;
        const int d = m_.dart_face[2 * k] == f ? 2 * k : 2 * k + 1;
        return m_.head(d) == m_.edges[k].first ? order : -order;
    }

    static int classify(const PlaneMap& m, const ExitItem& e, int left, int right) {
        if (e.at_vertex) return 1;
        auto [u, v] = m.edges[e.id];
        if (u == left || v == left) return 0;
        if (u == right || v == right) return 2;
        throw Error("internal: exit edge outside the current face");
    }

    std::pair<int, int> side(int k, int f, int ra, int ia, int rb, int ib) const {
        auto [ta, da] = entry_state(routes_[ra], ia, f);
        auto [tb, db] = entry_state(routes_[rb], ib, f);
        int g = k, cf = f, steps = 0;
        const int guard = static_cast<int>(routes_[ra].edges.size() +
                                           routes_[rb].edges.size()) + 2;
        while (true) {
            if (++steps > guard) throw Error("internal: corridor walk did not end");
            if (routes_[ra].faces[ta] != cf || routes_[rb].faces[tb] != cf)
                throw Error("internal: corridor walk left its face");
            const int dg = m_.dart_face[2 * g] == cf ? 2 * g : 2 * g + 1;
            const int left = m_.head(dg), right = m_.origin(dg);
            ExitItem ea = walk_exit(routes_[ra], ta, da);
            ExitItem eb = walk_exit(routes_[rb], tb, db);
            const int ca = classify(m_, ea, left, right);
            const int cb = classify(m_, eb, left, right);
            if (ca != cb) return {ca < cb ? -1 : 1, steps};
            if (ca == 1) return {0, steps};
            if (ea.id != eb.id) throw Error("internal: equal exit class, different edge");
            ta += da;
            tb += db;
            g = ea.id;
            cf = m_.dart_face[2 * g] == cf ? m_.dart_face[2 * g + 1] : m_.dart_face[2 * g];
        }
    }

    const PlaneMap& m_;
    const std::vector<Route>& routes_;
};

struct FaceIndex {
    std::map<int, int> vpos;                  // face vertex -> ordinal
    std::map<std::pair<int, int>, int> apos;  // (edge, rank) -> ordinal
    int size = 0;
};

FaceIndex face_index(const PlaneMap& m, int f,
                     const std::vector<std::vector<std::pair<int, int>>>& anchors_on) {
    FaceIndex fi;
    for (int d : m.faces[f]) {
        fi.vpos[m.origin(d)] = fi.size++;
        const int k = m.edge_of(d);
        const int cnt = static_cast<int>(anchors_on[k].size());
        if (m.origin(d) == m.edges[k].first)
            for (int r = 0; r < cnt; ++r) fi.apos[{k, r}] = fi.size++;
        else
            for (int r = cnt - 1; r >= 0; --r) fi.apos[{k, r}] = fi.size++;
    }
    return fi;
}

int waypoint_pos(const FaceIndex& fi, const Route& r, int i) {
    const int l = static_cast<int>(r.edges.size());
    if (i == 0) return fi.vpos.at(r.x);
    if (i == l - 1) return fi.vpos.at(r.y);
    return fi.apos.at({r.edges[i], r.ranks[i]});
}

struct FaceTrav {
    int route = -1;
    int trav = -1;
};

} // namespace

DrawPowerResult draw_power(const PlaneMap& hd, int lambda,
                           const std::vector<std::pair<int, int>>* restrict_new) {
    if (lambda < 1) throw Error("lambda must be positive");
    if (!hd.is_simple()) throw NotSimpleError("drawing host must be simple");
    if (hd.components != 1) throw DisconnectedError("drawing host must be connected");
    for (const auto& fc : hd.faces)
        if (fc.size() != 3) throw Error("drawing host must be a triangulation");
    if (!is_three_connected(hd.graph()))
        throw Error("drawing host must be 3-connected");
    const int n = hd.vertex_count;

    DrawPowerResult res;
    res.lambda = lambda;
    res.host_edge_count = hd.edge_count();
    res.bound = lambda < 62 ? (1LL << lambda) : LLONG_MAX;
    if (lambda >= 3 && lambda <= 60) {
        res.reported_new_edge_bound =
            static_cast<long long>(lambda - 1) * (3 * lambda - 6) << (lambda - 3);
        res.reported_old_edge_bound =
            (static_cast<long long>(lambda - 3) << (lambda - 2)) + 1;
    }

    AbstractGraph hg = hd.graph();
    std::vector<std::pair<int, int>> pairs;
    if (restrict_new) {
        std::set<std::pair<int, int>> ps;
        for (auto [a, b] : *restrict_new) {
            if (a == b || a < 0 || b < 0 || a >= n || b >= n)
                throw Error("routed pair out of range");
            auto p = std::minmax(a, b);
            if (!hg.has_edge(p.first, p.second)) ps.insert(p);
        }
        pairs.assign(ps.begin(), ps.end());
    } else {
        for (auto [a, b] : lambda_power(hd, lambda).edges)
            if (!hg.has_edge(a, b)) pairs.emplace_back(a, b);
    }
    std::vector<std::pair<int, int>> drawn = hd.edges;
    drawn.insert(drawn.end(), pairs.begin(), pairs.end());
    res.power = AbstractGraph::make(n, drawn);

    // shortest wbw walks and their corner faces
    std::vector<Route> routes;
    for (auto [a, b] : pairs) {
        auto cert = wbw_distance(hd, a, b);
        if (!cert || cert->length() > lambda)
            throw BoundViolationError("routed pair not within the requested power");
        Route r;
        r.x = a;
        r.y = b;
        r.edges = cert->edges;
        const int l = static_cast<int>(r.edges.size());
        if (l < 3) throw Error("internal: non-adjacent pair with a short walk");
        r.ranks.assign(l, -1);
        for (int i = 0; i + 1 < l; ++i) {
            const int e1 = r.edges[i], e2 = r.edges[i + 1];
            auto [a1, b1] = hd.edges[e1];
            auto [a2, b2] = hd.edges[e2];
            const int w = (a1 == a2 || a1 == b2) ? a1
                        : (b1 == a2 || b1 == b2) ? b1 : -1;
            if (w < 0) throw Error("internal: walk edges share no vertex");
            const int d1 = 2 * e1 + (hd.edges[e1].first == w ? 0 : 1);
            const int d2 = 2 * e2 + (hd.edges[e2].first == w ? 0 : 1);
            if (hd.rot_next(d1) == d2) r.faces.push_back(hd.dart_face[d2]);
            else if (hd.rot_next(d2) == d1) r.faces.push_back(hd.dart_face[d1]);
            else throw Error("internal: walk edges not attached");
        }
        std::set<int> uniq(r.faces.begin(), r.faces.end());
        if (uniq.size() != r.faces.size())
            throw Error("internal: shortest walk revisits a corner face");
        for (int i = 1; i + 1 < l; ++i) {
            const int e = r.edges[i];
            std::set<int> sides = {hd.dart_face[2 * e], hd.dart_face[2 * e + 1]};
            if (sides != std::set<int>{r.faces[i - 1], r.faces[i]})
                throw Error("internal: crossed edge does not separate its corners");
        }
        routes.push_back(std::move(r));
    }

    // order the waypoints on each crossed edge
    std::vector<std::vector<std::pair<int, int>>> anchors_on(hd.edge_count());
    for (int ri = 0; ri < static_cast<int>(routes.size()); ++ri)
        for (int i = 1; i + 1 < static_cast<int>(routes[ri].edges.size()); ++i)
            anchors_on[routes[ri].edges[i]].emplace_back(ri, i);
    AnchorOrdering ordering(hd, routes);
    for (int k = 0; k < hd.edge_count(); ++k) {
        auto& lst = anchors_on[k];
        std::vector<std::pair<int, int>> ord;
        for (auto inst : lst) {
            size_t p = ord.size();
            while (p > 0 &&
                   ordering.compare(k, inst.first, inst.second,
                                    ord[p - 1].first, ord[p - 1].second) < 0)
                --p;
            ord.insert(ord.begin() + p, inst);
        }
        lst = std::move(ord);
        for (int rk = 0; rk < static_cast<int>(lst.size()); ++rk)
            routes[lst[rk].first].ranks[lst[rk].second] = rk;
    }

    // outer face: least traversed, then lowest id
    std::vector<int> load(hd.face_count(), 0);
    for (const Route& r : routes)
        for (int f : r.faces) ++load[f];
    int outer = 0;
    for (int f = 1; f < hd.face_count(); ++f)
        if (load[f] < load[outer]) outer = f;

    // combinatorial crossing counts: waypoints on host edges, boundary-order
    // interleavings between traversals of a common face
    std::vector<std::vector<FaceTrav>> face_travs(hd.face_count());
    for (int ri = 0; ri < static_cast<int>(routes.size()); ++ri)
        for (int i = 0; i < static_cast<int>(routes[ri].faces.size()); ++i)
            face_travs[routes[ri].faces[i]].push_back({ri, i});

    res.internal_counts.assign(drawn.size(), 0);
    for (int k = 0; k < hd.edge_count(); ++k)
        res.internal_counts[k] = static_cast<int>(anchors_on[k].size());
    for (int ri = 0; ri < static_cast<int>(routes.size()); ++ri)
        res.internal_counts[hd.edge_count() + ri] =
            static_cast<int>(routes[ri].edges.size()) - 2;
    std::map<std::pair<int, int>, int> pair_mult;
    for (int f = 0; f < hd.face_count(); ++f) {
        const auto& ft = face_travs[f];
        if (ft.size() < 2) continue;
        FaceIndex fi = face_index(hd, f, anchors_on);
        std::vector<std::pair<int, int>> iv;
        for (const auto& t : ft) {
            int a = waypoint_pos(fi, routes[t.route], t.trav);
            int b = waypoint_pos(fi, routes[t.route], t.trav + 1);
            iv.push_back(std::minmax(a, b));
        }
        for (size_t p = 0; p < ft.size(); ++p)
            for (size_t q = p + 1; q < ft.size(); ++q) {
                auto [a1, b1] = iv[p];
                auto [a2, b2] = iv[q];
                if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) continue;
                const bool in1 = a1 < a2 && a2 < b1, in2 = a1 < b2 && b2 < b1;
                if (in1 == in2) continue;
                ++res.internal_counts[hd.edge_count() + ft[p].route];
                ++res.internal_counts[hd.edge_count() + ft[q].route];
                ++pair_mult[std::minmax(ft[p].route, ft[q].route)];
            }
    }
    for (const auto& [pr, c] : pair_mult)
        res.pair_multiplicity_max = std::max(res.pair_multiplicity_max, c);

    const std::vector<Point> pts = tutte_layout(hd, outer);

    // outer-face bookkeeping shared by the geometry rounds
    const auto& bd = hd.faces[outer];
    auto boundary_slot = [&](int k) {
        for (int j = 0; j < 3; ++j)
            if (hd.edge_of(bd[j]) == k) return j;
        return -1;
    };
    auto corner_slot = [&](int v) {
        for (int j = 0; j < 3; ++j)
            if (hd.origin(bd[j]) == v) return j;
        throw Error("internal: route endpoint not an outer corner");
    };
    FaceIndex ofi = face_index(hd, outer, anchors_on);
    std::vector<FaceTrav> outer_travs = face_travs[outer];
    // levels ranked by ordinal interval length: containment means lower
    std::vector<int> level_rank(outer_travs.size());
    {
        std::vector<std::pair<int, int>> by_len; // (length, index)
        for (size_t i = 0; i < outer_travs.size(); ++i) {
            int a = waypoint_pos(ofi, routes[outer_travs[i].route], outer_travs[i].trav);
            int b = waypoint_pos(ofi, routes[outer_travs[i].route], outer_travs[i].trav + 1);
            by_len.emplace_back(std::abs(a - b), static_cast<int>(i));
        }
        std::sort(by_len.begin(), by_len.end());
        for (size_t r = 0; r < by_len.size(); ++r) level_rank[by_len[r].second] = static_cast<int>(r);
    }
    const int big_r = static_cast<int>(outer_travs.size());
    Point ocenter{0, 0};
    for (int j = 0; j < 3; ++j) {
        ocenter.x += pts[hd.origin(bd[j])].x / 3;
        ocenter.y += pts[hd.origin(bd[j])].y / 3;
    }

    CrossedEmbedding ce;
    std::vector<Point> node_pts;
    std::vector<std::vector<Point>> final_polys;
    bool assembled = false;
    std::string last_err = "degenerate drawing";
    for (int round = 0; round < 8 && !assembled; ++round) {
        try {
            const Rational tjit(round, round + 8);
            auto t_of = [&](int k, int rank) -> Rational {
                const int cnt = static_cast<int>(anchors_on[k].size());
                return (rank + 1 + tjit) / (cnt + 1);
            };
            auto anchor_point = [&](int k, int rank) {
                const Rational t = t_of(k, rank);
                const Point& a = pts[hd.edges[k].first];
                const Point& b = pts[hd.edges[k].second];
                return Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
            };
            auto theta_anchor = [&](int k, int rank) -> Rational {
                const int j = boundary_slot(k);
                if (j < 0) throw Error("internal: waypoint not on the outer boundary");
                const Rational t = t_of(k, rank);
                return j + (hd.origin(bd[j]) == hd.edges[k].first ? t : 1 - t);
            };
            auto theta_waypoint = [&](const Route& r, int i, bool* vertex_end) -> Rational {
                const int l = static_cast<int>(r.edges.size());
                if (i == 0 || i == l - 1) {
                    *vertex_end = true;
                    return Rational(corner_slot(i == 0 ? r.x : r.y));
                }
                *vertex_end = false;
                return theta_anchor(r.edges[i], r.ranks[i]);
            };
            auto bpoint = [&](const Rational& th) {
                long long j = (numerator(th) / denominator(th)).convert_to<long long>();
                const Rational frac = th - j;
                const int d = bd[j % 3];
                const Point& a = pts[hd.origin(d)];
                const Point& b = pts[hd.head(d)];
                return Point{a.x + frac * (b.x - a.x), a.y + frac * (b.y - a.y)};
            };
            auto scalep = [&](const Point& p, const Rational& k) {
                return Point{ocenter.x + k * (p.x - ocenter.x),
                             ocenter.y + k * (p.y - ocenter.y)};
            };
            const Rational level_fac = 1 + Rational(round, 4 * (round + 2));
            auto level_of = [&](int rank) -> Rational {
                return 1 + Rational(rank + 1) * level_fac / (big_r + 2);
            };
            // corner clearance: half the gap to the nearest boundary item
            const Rational gamma_scale = Rational(1, 3) + Rational(round, 50);
            std::array<Rational, 3> gamma0;
            for (int j = 0; j < 3; ++j) {
                Rational gap = 1;
                for (int side = 0; side < 2; ++side) {
                    const int je = side == 0 ? j : (j + 2) % 3;
                    const int k = hd.edge_of(bd[je]);
                    Rational best = 1;
                    for (int rk = 0; rk < static_cast<int>(anchors_on[k].size()); ++rk) {
                        Rational th = theta_anchor(k, rk) - je;
                        Rational dist = side == 0 ? th : 1 - th;
                        best = std::min(best, dist);
                    }
                    gap = std::min(gap, best);
                }
                gamma0[j] = std::min(Rational(1, 4), gap) * gamma_scale;
            }
            // per outer traversal: level and piece geometry
            std::map<std::pair<int, int>, std::vector<Point>> outer_piece; // (route, trav)
            for (size_t i = 0; i < outer_travs.size(); ++i) {
                const auto& t = outer_travs[i];
                const Route& r = routes[t.route];
                const Rational klev = level_of(level_rank[i]);
                bool va = false, vb = false;
                Rational tha = theta_waypoint(r, t.trav, &va);
                Rational thb = theta_waypoint(r, t.trav + 1, &vb);
                bool swapped = tha > thb;
                if (swapped) { std::swap(tha, thb); std::swap(va, vb); }
                auto fan_g = [&](const Rational& th) -> Rational {
                    const int j = th.convert_to<int>();
                    const Rational gamma =
                        gamma0[j] * (1 - Rational(level_rank[i] + 1, 2 * (big_r + 2)));
                    return gamma * (klev - 1) / klev;
                };
                const Rational lo = va ? tha + fan_g(tha) : tha;
                const Rational hi = vb ? thb - fan_g(thb) : thb;
                if (!(lo < hi)) throw DegenerateGeometryError("outer arc collapsed");
                std::vector<Point> piece;
                piece.push_back(va ? pts[hd.origin(bd[tha.convert_to<int>()])] : bpoint(tha));
                piece.push_back(scalep(bpoint(lo), klev));
                for (long long j = (numerator(lo) / denominator(lo)).convert_to<long long>() + 1;
                     j < hi; ++j)
                    if (Rational(j) > lo)
                        piece.push_back(scalep(pts[hd.origin(bd[j % 3])], klev));
                piece.push_back(scalep(bpoint(hi), klev));
                piece.push_back(vb ? pts[hd.origin(bd[thb.convert_to<int>()])] : bpoint(thb));
                if (swapped) std::reverse(piece.begin(), piece.end());
                outer_piece[{t.route, t.trav}] = std::move(piece);
            }
            // full polylines
            auto waypoint_point = [&](const Route& r, int i) {
                const int l = static_cast<int>(r.edges.size());
                if (i == 0) return pts[r.x];
                if (i == l - 1) return pts[r.y];
                return anchor_point(r.edges[i], r.ranks[i]);
            };
            std::vector<std::vector<Point>> polylines;
            for (int k = 0; k < hd.edge_count(); ++k)
                polylines.push_back({pts[hd.edges[k].first], pts[hd.edges[k].second]});
            for (int ri = 0; ri < static_cast<int>(routes.size()); ++ri) {
                const Route& r = routes[ri];
                std::vector<Point> poly;
                for (int i = 0; i < static_cast<int>(r.faces.size()); ++i) {
                    std::vector<Point> piece;
                    if (r.faces[i] == outer) {
                        piece = outer_piece.at({ri, i});
                    } else {
                        piece = {waypoint_point(r, i), waypoint_point(r, i + 1)};
                    }
                    if (poly.empty()) {
                        poly = std::move(piece);
                    } else {
                        if (poly.back() != piece.front())
                            throw Error("internal: traversal pieces do not meet");
                        poly.insert(poly.end(), piece.begin() + 1, piece.end());
                    }
                }
                polylines.push_back(std::move(poly));
            }
            ce = assemble_crossed_embedding(n, drawn, pts, polylines, true, &node_pts);
            final_polys = std::move(polylines);
            assembled = true;
        } catch (const DegenerateGeometryError& e) {
            last_err = e.what();
        }
    }
    if (!assembled) throw DegenerateGeometryError(last_err);

    CrossingCounts cc = crossings_per_edge(ce);
    if (cc.per_edge != res.internal_counts)
        throw Error("internal: combinatorial and assembled crossing counts differ");
    res.max_count = cc.max;
    for (int k = 0; k < hd.edge_count(); ++k)
        res.max_old_count = std::max(res.max_old_count, cc.per_edge[k]);
    for (size_t i = hd.edge_count(); i < cc.per_edge.size(); ++i)
        res.max_new_count = std::max(res.max_new_count, cc.per_edge[i]);
    if (res.max_count > res.bound)
        throw BoundViolationError("per-edge crossings exceed 2^lambda");
    res.embedding = std::move(ce);
    // the routed polylines bend between planarization nodes, so straightening
    // trails through make_drawing would distort them; keep the real geometry
    {
        Rational minx = node_pts[0].x, maxx = node_pts[0].x;
        Rational miny = node_pts[0].y, maxy = node_pts[0].y;
        auto grow = [&](const Point& p) {
            minx = std::min(minx, p.x); maxx = std::max(maxx, p.x);
            miny = std::min(miny, p.y); maxy = std::max(maxy, p.y);
        };
        for (const Point& p : node_pts) grow(p);
        for (const auto& poly : final_polys)
            for (const Point& p : poly) grow(p);
        Rational span = std::max(maxx - minx, maxy - miny);
        if (span == 0) span = 1;
        auto norm = [&](const Point& p) {
            return Point{(p.x - minx) / span, (p.y - miny) / span};
        };
        for (const Point& p : node_pts) res.drawing.coords.push_back(norm(p));
        for (const auto& poly : final_polys) {
            std::vector<Point> np;
            np.reserve(poly.size());
            for (const Point& p : poly) np.push_back(norm(p));
            res.drawing.polylines.push_back(std::move(np));
        }
    }
    return res;
}

} // namespace flatgraph
