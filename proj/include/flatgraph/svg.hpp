#pragma once

#include "flatgraph/equivalence.hpp"

#include <string>

namespace flatgraph {

/// Deterministic SVG renders: identical input gives byte-identical output.
/// Plane maps are laid out with the exact barycentric method (per component,
/// triangulated first); maps that cannot be triangulated fall back to a
/// circle layout.

std::string svg_of_map(const PlaneMap& m);

/// Host edges solid, the extra lambda-power pairs as dotted chords.
std::string svg_of_power(const PlaneMap& m, int lambda);

/// Host map with every certificate's walk in bold and one dotted chord per
/// non-host edge of g.
std::string svg_of_witness(const AbstractGraph& g, const FlatWitness& w);

/// Polylines of a drawing; crossing points marked with open circles when the
/// matching embedding is supplied.
std::string svg_of_drawing(const Drawing& d);
std::string svg_of_embedding(const CrossedEmbedding& ce, const Drawing& d);

} // namespace flatgraph
