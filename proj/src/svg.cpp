#include "flatgraph/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace flatgraph {

namespace {

struct Canvas {
    std::ostringstream body;
    double minx = 0, miny = 0, scale = 1;

    void fit(const std::vector<Point>& pts) {
        if (pts.empty()) return;
        double maxx, maxy;
        minx = maxx = pts[0].x.convert_to<double>();
        miny = maxy = pts[0].y.convert_to<double>();
        for (const Point& p : pts) {
            double x = p.x.convert_to<double>(), y = p.y.convert_to<double>();
            minx = std::min(minx, x); maxx = std::max(maxx, x);
            miny = std::min(miny, y); maxy = std::max(maxy, y);
        }
        double span = std::max({maxx - minx, maxy - miny, 1e-9});
        scale = 460.0 / span;
    }
    double tx(const Rational& x) const { return 20 + (x.convert_to<double>() - minx) * scale; }
    // svg y grows downward
    double ty(const Rational& y) const { return 480 - (y.convert_to<double>() - miny) * scale; }

    static std::string num(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", v);
        return buf;
    }
    void line(const Point& a, const Point& b, const char* style) {
        body << "<line x1=\"" << num(tx(a.x)) << "\" y1=\"" << num(ty(a.y)) << "\" x2=\""
             << num(tx(b.x)) << "\" y2=\"" << num(ty(b.y)) << "\" " << style << "/>\n";
    }
    void polyline(const std::vector<Point>& pts, const char* style) {
        body << "<polyline points=\"";
        for (size_t i = 0; i < pts.size(); ++i)
            body << (i ? " " : "") << num(tx(pts[i].x)) << ',' << num(ty(pts[i].y));
        body << "\" fill=\"none\" " << style << "/>\n";
    }
    void dot(const Point& p) {
        body << "<circle cx=\"" << num(tx(p.x)) << "\" cy=\"" << num(ty(p.y))
             << "\" r=\"3\" fill=\"black\"/>\n";
    }
    void mark(const Point& p) {
        body << "<circle cx=\"" << num(tx(p.x)) << "\" cy=\"" << num(ty(p.y))
             << "\" r=\"5\" fill=\"none\" stroke=\"red\" stroke-width=\"1.2\"/>\n";
    }
    std::string finish() const {
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"500\" "
               "viewBox=\"0 0 500 500\">\n" +
               body.str() + "</svg>\n";
    }
};

constexpr const char* kEdge = "stroke=\"black\" stroke-width=\"1.5\"";
constexpr const char* kBold = "stroke=\"black\" stroke-width=\"4\"";
constexpr const char* kDotted = "stroke=\"black\" stroke-width=\"1.2\" stroke-dasharray=\"4 3\"";

std::vector<Point> circle_points(int n) {
    std::vector<Point> pts;
    for (long long j = 0; j < n; ++j) {
        long long den = 1 + j * j;
        pts.push_back({Rational(8 * (1 - j * j), den), Rational(16 * j, den)});
    }
    return pts;
}

/// Per-component barycentric layout with side-by-side placement.
std::vector<Point> map_layout(const PlaneMap& m) {
    auto split = split_components(m);
    std::vector<std::vector<Point>> local;
    for (const PlaneMap& c : split.maps) {
        std::vector<Point> pts;
        if (c.vertex_count == 1) {
            pts = {Point{0, 0}};
        } else {
            try {
                pts = tutte_layout(triangulate(c).map, 0);
                pts.resize(c.vertex_count);
            } catch (const Error&) {
                pts = circle_points(c.vertex_count);
            }
        }
        local.push_back(std::move(pts));
    }
    std::vector<Point> out(m.vertex_count, Point{0, 0});
    Rational xoff = 0;
    for (size_t c = 0; c < local.size(); ++c) {
        Rational minx = local[c][0].x, maxx = minx, miny = local[c][0].y;
        for (const Point& p : local[c]) {
            minx = std::min(minx, p.x);
            maxx = std::max(maxx, p.x);
            miny = std::min(miny, p.y);
        }
        for (int v = 0; v < m.vertex_count; ++v)
            if (split.comp_of[v] == static_cast<int>(c))
                out[v] = local[c][split.local_id[v]] + Point{xoff - minx, -miny};
        xoff += maxx - minx + 4;
    }
    return out;
}

void draw_map_edges(Canvas& cv, const PlaneMap& m, const std::vector<Point>& pts,
                    const std::set<int>& bold) {
    for (int k = 0; k < m.edge_count(); ++k)
        cv.line(pts[m.edges[k].first], pts[m.edges[k].second],
                bold.count(k) ? kBold : kEdge);
    for (const Point& p : pts) cv.dot(p);
}

} // namespace

std::string svg_of_map(const PlaneMap& m) {
    auto pts = map_layout(m);
    Canvas cv;
    cv.fit(pts);
    draw_map_edges(cv, m, pts, {});
    return cv.finish();
}

std::string svg_of_power(const PlaneMap& m, int lambda) {
    auto pts = map_layout(m);
    Canvas cv;
    cv.fit(pts);
    AbstractGraph host = m.graph(), power = lambda_power(m, lambda);
    for (const auto& [u, v] : power.edges)
        if (!host.has_edge(u, v)) cv.line(pts[u], pts[v], kDotted);
    draw_map_edges(cv, m, pts, {});
    return cv.finish();
}

std::string svg_of_witness(const AbstractGraph& g, const FlatWitness& w) {
    auto pts = map_layout(w.host);
    Canvas cv;
    cv.fit(pts);
    std::set<int> bold;
    std::map<std::pair<int, int>, int> host_id;
    for (int k = 0; k < w.host.edge_count(); ++k)
        host_id.emplace(std::minmax(w.host.edges[k].first, w.host.edges[k].second), k);
    for (size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        const auto& ec = w.edge_certs[i];
        if (ec.host_edge) {
            auto it = host_id.find(std::minmax(w.tau[u], w.tau[v]));
            if (it != host_id.end()) bold.insert(it->second);
        } else {
            for (int e : ec.cert.edges) bold.insert(e);
            cv.line(pts[w.tau[u]], pts[w.tau[v]], kDotted);
        }
    }
    draw_map_edges(cv, w.host, pts, bold);
    return cv.finish();
}

std::string svg_of_drawing(const Drawing& d) {
    Canvas cv;
    std::vector<Point> all = d.coords;
    for (const auto& poly : d.polylines) all.insert(all.end(), poly.begin(), poly.end());
    cv.fit(all);
    for (const auto& poly : d.polylines) cv.polyline(poly, kEdge);
    for (const Point& p : d.coords) cv.dot(p);
    return cv.finish();
}

std::string svg_of_embedding(const CrossedEmbedding& ce, const Drawing& d) {
    Canvas cv;
    std::vector<Point> all = d.coords;
    for (const auto& poly : d.polylines) all.insert(all.end(), poly.begin(), poly.end());
    cv.fit(all);
    for (const auto& poly : d.polylines) cv.polyline(poly, kEdge);
    for (int v = 0; v < ce.original_vertex_count; ++v) cv.dot(d.coords[v]);
    for (int v : ce.crossing_vertices) cv.mark(d.coords[v]);
    return cv.finish();
}

} // namespace flatgraph
