#include "flatgraph/generate.hpp"
#include "flatgraph/io.hpp"
#include "flatgraph/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace flatgraph;

namespace {

PlaneMap load_rot(const std::string& path) {
    std::istringstream in(slurp(path));
    return read_rot(in);
}

CrossedEmbedding load_cemb(const std::string& path) {
    std::istringstream in(slurp(path));
    return read_cemb(in);
}

FlatwFile load_flatw(const std::string& path) {
    std::istringstream in(slurp(path));
    return read_flatw(in);
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << text;
}

std::string extension(const std::string& path) {
    auto dot = path.rfind('.');
    return dot == std::string::npos ? "" : path.substr(dot + 1);
}

void print_graph(const AbstractGraph& g) {
    std::cout << g.vertex_count << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges) std::cout << u << ' ' << v << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wall-by-wall metric toolkit: powers of plane graphs, flatness "
                 "witnesses, and crossing-bounded drawings"};
    app.require_subcommand(1);

    std::string input, output, format;
    int lambda = 2, x = 0, y = 0, n = 5;
    std::uint64_t seed = 1;
    std::string gadget_kind = "minor";

    auto* c_wbw = app.add_subcommand("wbw", "distance and certificate between two vertices");
    c_wbw->add_option("map", input)->required();
    c_wbw->add_option("x", x)->required();
    c_wbw->add_option("y", y)->required();

    auto* c_power = app.add_subcommand("power", "emit the lambda-power of a plane map");
    c_power->add_option("map", input)->required();
    c_power->add_option("--lambda", lambda);

    auto* c_transform = app.add_subcommand("transform", "plane transformation of a drawing");
    c_transform->add_option("embedding", input)->required();
    c_transform->add_option("-o,--output", output);

    auto* c_flatten = app.add_subcommand("flatten", "flat witness from a drawing");
    c_flatten->add_option("embedding", input)->required();
    c_flatten->add_option("-o,--output", output);

    auto* c_tri = app.add_subcommand("triangulate", "3-connected triangulation of a map");
    c_tri->add_option("map", input)->required();
    c_tri->add_option("-o,--output", output);

    auto* c_draw = app.add_subcommand("draw-power", "draw a power with bounded crossings");
    c_draw->add_option("map", input)->required();
    c_draw->add_option("--lambda", lambda);
    c_draw->add_option("-o,--output", output);
    c_draw->add_option("--format", format)->check(CLI::IsMember({"draw", "svg"}));

    auto* c_round = app.add_subcommand("roundtrip", "certify both equivalence directions");
    c_round->add_option("witness", input)->required();
    c_round->add_option("-o,--output", output);

    auto* c_gadget = app.add_subcommand("gadget", "non-closure gadget builders");
    c_gadget->add_option("--type", gadget_kind)->check(CLI::IsMember({"minor", "contraction"}));
    c_gadget->add_option("-n", n);
    c_gadget->add_option("--seed", seed);
    c_gadget->add_option("-o,--output", output);

    auto* c_render = app.add_subcommand("render", "SVG of a map, witness, or drawing");
    c_render->add_option("input", input)->required();
    c_render->add_option("--lambda", lambda);
    c_render->add_option("--format", format)->check(CLI::IsMember({"rot", "flatw", "draw", "cemb"}));
    c_render->add_option("-o,--output", output);

    auto* c_check = app.add_subcommand("check", "validate a certificate file");
    c_check->add_option("input", input)->required();
    c_check->add_option("--format", format)->check(CLI::IsMember({"rot", "flatw", "cemb", "draw"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_wbw) {
            PlaneMap m = load_rot(input);
            if (x < 0 || y < 0 || x >= m.vertex_count || y >= m.vertex_count)
                throw Error("vertex out of range");
            auto cert = wbw_distance(m, x, y);
            if (!cert) {
                std::cout << "unreachable\n";
            } else {
                std::cout << cert->length() << '\n';
                for (size_t i = 0; i < cert->edges.size(); ++i)
                    std::cout << (i ? " " : "") << cert->edges[i];
                if (!cert->edges.empty()) std::cout << '\n';
            }
        } else if (*c_power) {
            print_graph(lambda_power(load_rot(input), lambda));
        } else if (*c_transform) {
            emit(output, write_rot(plane_transformation(load_cemb(input)).output));
        } else if (*c_flatten) {
            CrossedEmbedding ce = load_cemb(input);
            FlatWitness w = nearly_planar_to_flat(ce);
            std::cout << "lambda " << w.lambda << '\n';
            emit(output, write_flatw(ce.original_graph(), w));
        } else if (*c_tri) {
            emit(output, write_rot(triangulate(load_rot(input)).map));
        } else if (*c_draw) {
            auto res = draw_power(load_rot(input), lambda);
            std::cout << "edges " << res.power.edge_count() << " max-crossings "
                      << res.max_count << " bound " << res.bound << '\n';
            if (format == "svg")
                emit(output, svg_of_embedding(res.embedding, res.drawing));
            else
                emit(output, write_draw(res.drawing));
        } else if (*c_round) {
            FlatwFile f = load_flatw(input);
            auto drawing = flat_to_nearly_planar(f.graph, f.witness);
            auto cert = certify_equivalence(f.graph, f.witness, drawing.embedding);
            std::cout << "lambda_given " << cert.lambda_given << '\n'
                      << "xi_given " << cert.xi_given << '\n'
                      << "lambda_derived " << cert.lambda_derived << '\n'
                      << "xi_derived " << cert.xi_derived << '\n';
            if (!output.empty())
                emit(output, write_certificate_json(cert, f.witness, drawing.embedding));
        } else if (*c_gadget) {
            if (gadget_kind == "minor") {
                auto gad = gadget_topological_minor(n, seed);
                std::cout << "vertices " << gad.graph.vertex_count << " edges "
                          << gad.graph.edge_count() << " lambda " << gad.witness.lambda
                          << " pattern K" << n << '\n';
                if (!output.empty()) emit(output, write_flatw(gad.graph, gad.witness));
            } else {
                auto gad = gadget_contraction(n);
                std::cout << "vertices " << gad.graph.vertex_count << " edges "
                          << gad.graph.edge_count() << " lambda " << gad.witness.lambda
                          << " quotient K" << n << ',' << n << '\n';
                if (!output.empty()) emit(output, write_flatw(gad.graph, gad.witness));
            }
        } else if (*c_render) {
            std::string kind = format.empty() ? extension(input) : format;
            if (kind == "rot") {
                PlaneMap m = load_rot(input);
                bool overlay = c_render->count("--lambda") > 0 && lambda > 1;
                emit(output, overlay ? svg_of_power(m, lambda) : svg_of_map(m));
            } else if (kind == "flatw") {
                FlatwFile f = load_flatw(input);
                emit(output, svg_of_witness(f.graph, f.witness));
            } else if (kind == "draw") {
                std::istringstream in(slurp(input));
                emit(output, svg_of_drawing(read_draw(in)));
            } else {
                throw FormatError("cannot render '" + kind + "' input");
            }
        } else if (*c_check) {
            std::string kind = format.empty() ? extension(input) : format;
            if (kind == "rot") {
                load_rot(input);
            } else if (kind == "flatw") {
                FlatwFile f = load_flatw(input);
                std::string why;
                if (!check_flat_witness(f.graph, f.witness, &why)) throw Error(why);
            } else if (kind == "cemb") {
                load_cemb(input);
            } else if (kind == "draw") {
                std::istringstream in(slurp(input));
                read_draw(in);
            } else {
                throw FormatError("unknown certificate kind '" + kind + "'");
            }
            std::cout << "ok\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
