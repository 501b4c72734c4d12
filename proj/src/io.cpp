#include "flatgraph/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <iostream>
#include <sstream>

namespace flatgraph {

namespace {

struct Tokens {
    std::vector<std::string> toks;
    size_t pos = 0;

    explicit Tokens(std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
            std::string padded;
            for (char c : line)
                if (c == ':') padded += " : ";
                else padded += c;
            std::istringstream ls(padded);
            std::string t;
            while (ls >> t) toks.push_back(t);
        }
    }

    bool done() const { return pos >= toks.size(); }
    const std::string& peek() const {
        if (done()) throw FormatError("unexpected end of input");
        return toks[pos];
    }
    std::string next() {
        auto t = peek();
        ++pos;
        return t;
    }
    void expect(const std::string& word) {
        if (next() != word) throw FormatError("expected '" + word + "'");
    }
    bool accept(const std::string& word) {
        if (!done() && toks[pos] == word) {
            ++pos;
            return true;
        }
        return false;
    }
    long long integer() {
        try {
            return std::stoll(next());
        } catch (const std::exception&) {
            throw FormatError("expected an integer");
        }
    }
    bool at_integer() const {
        if (done()) return false;
        const std::string& t = toks[pos];
        size_t i = t[0] == '-' ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    }
};

PlaneMap read_rot_block(Tokens& tk) {
    int n = static_cast<int>(tk.integer());
    int ec = static_cast<int>(tk.integer());
    if (n < 0 || ec < 0) throw FormatError("negative counts");
    std::vector<std::pair<int, int>> edges(ec);
    for (auto& [u, v] : edges) {
        u = static_cast<int>(tk.integer());
        v = static_cast<int>(tk.integer());
    }
    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw FormatError("edge endpoint out of range");
        ++deg[u];
        ++deg[v];
    }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        rot[v].resize(deg[v]);
        for (int& d : rot[v]) d = static_cast<int>(tk.integer());
    }
    return build_plane_map(n, std::move(edges), std::move(rot));
}

void write_rot_block(std::ostream& out, const PlaneMap& m) {
    out << m.vertex_count << ' ' << m.edge_count() << '\n';
    for (const auto& [u, v] : m.edges) out << u << ' ' << v << '\n';
    for (const auto& rv : m.rotation) {
        for (size_t i = 0; i < rv.size(); ++i) out << (i ? " " : "") << rv[i];
        out << '\n';
    }
}

} // namespace

std::string format_rational(const Rational& r) {
    std::ostringstream s;
    s << numerator(r) << '/' << denominator(r);
    return s.str();
}

Rational parse_rational(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos)
            return Rational(boost::multiprecision::cpp_int(s));
        boost::multiprecision::cpp_int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw FormatError("zero denominator");
        return Rational(num) / Rational(den);
    } catch (const std::runtime_error&) {
        throw FormatError("bad rational '" + s + "'");
    }
}

std::string write_rot(const PlaneMap& m) {
    std::ostringstream out;
    write_rot_block(out, m);
    return out.str();
}

PlaneMap read_rot(std::istream& in) {
    Tokens tk(in);
    PlaneMap m = read_rot_block(tk);
    if (!tk.done()) throw FormatError("trailing tokens after the map");
    return m;
}

std::string write_flatw(const AbstractGraph& g, const FlatWitness& w) {
    std::ostringstream out;
    out << "LAMBDA " << w.lambda << '\n';
    write_rot_block(out, w.host);
    out << "TAU";
    for (int t : w.tau) out << ' ' << t;
    out << '\n';
    for (size_t i = 0; i < g.edges.size(); ++i) {
        out << "EDGE " << g.edges[i].first << ' ' << g.edges[i].second << " :";
        if (w.edge_certs[i].host_edge) {
            out << " HOST";
        } else {
            for (int e : w.edge_certs[i].cert.edges) out << ' ' << e;
        }
        out << '\n';
    }
    return out.str();
}

FlatwFile read_flatw(std::istream& in) {
    Tokens tk(in);
    FlatwFile f;
    tk.expect("LAMBDA");
    f.witness.lambda = static_cast<int>(tk.integer());
    f.witness.host = read_rot_block(tk);
    tk.expect("TAU");
    while (tk.at_integer()) f.witness.tau.push_back(static_cast<int>(tk.integer()));
    std::vector<std::pair<int, int>> edges;
    while (tk.accept("EDGE")) {
        int u = static_cast<int>(tk.integer());
        int v = static_cast<int>(tk.integer());
        if (u >= static_cast<int>(f.witness.tau.size()) ||
            v >= static_cast<int>(f.witness.tau.size()) || u < 0 || v < 0)
            throw FormatError("edge endpoint out of range");
        tk.expect(":");
        FlatWitness::EdgeCert ec;
        if (tk.accept("HOST")) {
            ec.host_edge = true;
        } else {
            while (tk.at_integer()) ec.cert.edges.push_back(static_cast<int>(tk.integer()));
            ec.cert.x = f.witness.tau[u];
            ec.cert.y = f.witness.tau[v];
            // the walk direction is not stored; recover it from the first edge
            if (!ec.cert.edges.empty()) {
                int e0 = ec.cert.edges.front();
                if (e0 < 0 || e0 >= f.witness.host.edge_count())
                    throw FormatError("certificate edge out of range");
                auto [a, b] = f.witness.host.edges[e0];
                if (a != ec.cert.x && b != ec.cert.x) std::swap(ec.cert.x, ec.cert.y);
            }
        }
        edges.emplace_back(u, v);
        f.witness.edge_certs.push_back(std::move(ec));
    }
    if (!tk.done()) throw FormatError("trailing tokens after the witness");
    f.graph = AbstractGraph::make(static_cast<int>(f.witness.tau.size()), edges);
    // make() sorts its edge list; certificates must follow it
    std::vector<size_t> order(edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return std::minmax(edges[a].first, edges[a].second) <
               std::minmax(edges[b].first, edges[b].second);
    });
    std::vector<FlatWitness::EdgeCert> sorted;
    sorted.reserve(order.size());
    for (size_t i : order) sorted.push_back(std::move(f.witness.edge_certs[i]));
    f.witness.edge_certs = std::move(sorted);
    return f;
}

std::string write_cemb(const CrossedEmbedding& ce) {
    std::ostringstream out;
    write_rot_block(out, ce.planarization);
    for (size_t i = 0; i < ce.crossing_vertices.size(); ++i) {
        out << "X " << ce.crossing_vertices[i];
        for (int d : ce.crossing_darts[i]) out << ' ' << d;
        out << '\n';
    }
    for (size_t e = 0; e < ce.edge_trails.size(); ++e) {
        out << "TRAIL " << e << " :";
        for (int d : ce.edge_trails[e]) out << ' ' << d;
        out << '\n';
    }
    return out.str();
}

CrossedEmbedding read_cemb(std::istream& in) {
    Tokens tk(in);
    CrossedEmbedding ce;
    ce.planarization = read_rot_block(tk);
    while (tk.accept("X")) {
        int v = static_cast<int>(tk.integer());
        std::array<int, 4> darts;
        for (int& d : darts) d = static_cast<int>(tk.integer());
        ce.crossing_vertices.push_back(v);
        ce.crossing_darts.push_back(darts);
    }
    std::vector<std::vector<int>> trails;
    while (tk.accept("TRAIL")) {
        size_t e = static_cast<size_t>(tk.integer());
        tk.expect(":");
        if (e != trails.size()) throw FormatError("trails out of order");
        std::vector<int> tr;
        while (tk.at_integer()) tr.push_back(static_cast<int>(tk.integer()));
        if (tr.empty()) throw FormatError("empty trail");
        trails.push_back(std::move(tr));
    }
    if (!tk.done()) throw FormatError("trailing tokens after the trails");
    ce.edge_trails = std::move(trails);
    ce.original_vertex_count =
        ce.planarization.vertex_count - static_cast<int>(ce.crossing_vertices.size());
    for (const auto& tr : ce.edge_trails) {
        for (int d : tr)
            if (d < 0 || d >= ce.planarization.dart_count())
                throw FormatError("trail dart out of range");
        ce.original_edges.emplace_back(ce.planarization.origin(tr.front()),
                                       ce.planarization.head(tr.back()));
    }
    return ce;
}

std::string write_draw(const Drawing& d) {
    std::ostringstream out;
    for (const Point& p : d.coords)
        out << "V " << format_rational(p.x) << ' ' << format_rational(p.y) << '\n';
    for (size_t e = 0; e < d.polylines.size(); ++e) {
        out << "P " << e << " :";
        for (const Point& p : d.polylines[e])
            out << ' ' << format_rational(p.x) << ' ' << format_rational(p.y);
        out << '\n';
    }
    return out.str();
}

Drawing read_draw(std::istream& in) {
    Tokens tk(in);
    Drawing d;
    while (tk.accept("V")) {
        Rational x = parse_rational(tk.next());
        Rational y = parse_rational(tk.next());
        d.coords.push_back({x, y});
    }
    while (tk.accept("P")) {
        size_t e = static_cast<size_t>(tk.integer());
        tk.expect(":");
        if (e != d.polylines.size()) throw FormatError("polylines out of order");
        std::vector<Point> poly;
        while (!tk.done() && tk.peek() != "P") {
            Rational x = parse_rational(tk.next());
            Rational y = parse_rational(tk.next());
            poly.push_back({x, y});
        }
        if (poly.size() < 2) throw FormatError("polyline too short");
        d.polylines.push_back(std::move(poly));
    }
    if (!tk.done()) throw FormatError("trailing tokens after the polylines");
    return d;
}

std::string write_certificate_json(const EquivalenceCertificate& cert,
                                   const FlatWitness& w, const CrossedEmbedding& ce) {
    nlohmann::ordered_json j;
    j["graph"]["vertices"] = cert.graph.vertex_count;
    j["graph"]["edges"] = cert.graph.edges;
    j["lambda_given"] = cert.lambda_given;
    j["xi_given"] = cert.xi_given;
    j["lambda_derived"] = cert.lambda_derived;
    j["xi_derived"] = cert.xi_derived;
    j["lambda_achieved"] = cert.lambda_achieved;
    j["xi_achieved"] = cert.xi_achieved;
    j["xi_upper"] = cert.xi_upper.str();
    j["bounds_hold"] = cert.bounds_hold;
    j["flat_witness"] = write_flatw(cert.graph, w);
    j["drawing"] = write_cemb(ce);
    return j.dump(2) + "\n";
}

std::string slurp(const std::string& path) {
    std::ostringstream out;
    if (path == "-") {
        out << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw FormatError("cannot open '" + path + "'");
        out << in.rdbuf();
    }
    return out.str();
}

} // namespace flatgraph
