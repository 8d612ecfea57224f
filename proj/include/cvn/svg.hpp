#pragma once

#include <array>
#include <string>
#include <vector>

#include "cvn/marked_graph.hpp"
#include "cvn/polytope.hpp"

namespace cvn {

// Rank-2 drawings. Two-dimensional simplices are triangles of a triangular
// lattice; a simplex sharing a rose face with one already drawn is unfolded
// across that edge, otherwise it starts a new component to the right.
// Lattice points (u, v) map to the plane by u * (1, 0) + v * (1/2, sqrt(3)/2),
// applied as an SVG transform so every coordinate in the file is an exact
// rational rendered with 9 fractional digits.

struct SvgSlice {
  TypePtr simplex;
  Polytope polytope;
};

struct SvgMarker {
  SimplexPoint point;
  std::string label;
};

// Throws Unsupported unless every simplex has rank 2.
std::string envelope_svg(const std::vector<SvgSlice>& slices, const std::vector<SvgMarker>& markers);
std::string path_svg(const std::vector<SimplexPoint>& breakpoints, const std::vector<SvgMarker>& markers);

// One shaded envelope shape read back from a drawing.
struct SvgShape {
  std::size_t simplex = 0;
  std::vector<RVec> vertices;                // data-vertices, exact simplex coordinates
  std::vector<std::array<Rational, 2>> corners;  // data-corners, lattice corners per edge
  std::vector<std::string> drawn;            // points attribute entries, "u,v"
};

std::vector<SvgShape> read_svg_shapes(const std::string& svg);

// "u,v" of sum_e x_e * corner_e with 9 fractional digits.
std::string lattice_point_text(const RVec& x, const std::vector<std::array<Rational, 2>>& corners);

}  // namespace cvn
