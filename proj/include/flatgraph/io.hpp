#pragma once

#include "flatgraph/equivalence.hpp"

#include <iosfwd>
#include <string>

namespace flatgraph {

/// Line-based ASCII formats with '#' comments; parsers are token-driven, so
/// whitespace and blank lines are free. Geometry uses exact rationals p/q.

// ".rot": "V E", then E edge lines "u v", then the cyclic dart order of each
// vertex on its own line.
std::string write_rot(const PlaneMap& m);
PlaneMap read_rot(std::istream& in);

// ".flatw": "LAMBDA l", host in ".rot" form, "TAU v0 v1 ...", then one
// "EDGE u v : HOST" or "EDGE u v : e1 ... el" line per edge of g.
struct FlatwFile {
    AbstractGraph graph;
    FlatWitness witness;
};
std::string write_flatw(const AbstractGraph& g, const FlatWitness& w);
FlatwFile read_flatw(std::istream& in);

// ".cemb": planarization in ".rot" form, "X v d0 d1 d2 d3" per crossing
// (darts in rotation order, opposite pairs (0,2)/(1,3)), "TRAIL e : d..."
// per original edge.
std::string write_cemb(const CrossedEmbedding& ce);
CrossedEmbedding read_cemb(std::istream& in);

// ".draw": "V x y" coordinate lines, then "P e : x1 y1 x2 y2 ..." polylines.
std::string write_draw(const Drawing& d);
Drawing read_draw(std::istream& in);

/// Certificate JSON with stable field order and the two witness payloads
/// embedded as ".flatw" / ".cemb" text.
std::string write_certificate_json(const EquivalenceCertificate& cert,
                                   const FlatWitness& w, const CrossedEmbedding& ce);

/// Whole-file read; "-" reads stdin.
std::string slurp(const std::string& path);

std::string format_rational(const Rational& r);
Rational parse_rational(const std::string& s);

} // namespace flatgraph
