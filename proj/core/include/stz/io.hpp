#pragma once

#include <iosfwd>
#include <string>

#include "stz/homology.hpp"
#include "stz/origami.hpp"

namespace stz {

// Origami text file: lines "squares: N", "h: <cycles>", "v: <cycles>";
// '#' starts a comment; blank lines ignored.
Origami parse_origami(const std::string& text);
Origami read_origami_file(const std::string& path);
std::string format_origami(const Origami& o);

// DOT rendering of an orbit graph: solid T-edges, dashed S-edges.
std::string orbit_to_dot(const OrbitGraph& g);
std::string orbit_to_json(const OrbitGraph& g);

std::string matrix_to_json(const IntMat& m);

}  // namespace stz
