#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cvn/envelopes.hpp"
#include "cvn/marked_graph.hpp"
#include "cvn/metric.hpp"

namespace cvn {

struct GeodesicPath {
  std::vector<SimplexPoint> breakpoints;
  // Candidate witnesses of each straight piece, from breakpoint k to k + 1.
  std::vector<std::vector<ConjClass>> segment_witnesses;
  // Breakpoint indices where rigid pieces start and end; first 0, last the final index.
  std::vector<std::size_t> rigid_segments;
  // CW(A_i, B) at the start of each rigid piece.
  std::vector<std::vector<ConjClass>> phase_witnesses;
  std::vector<std::string> notes;
};

bool on_geodesic(const SimplexPoint& a, const SimplexPoint& c, const SimplexPoint& b);

// Candidates of a and c that are witnesses from a to c and from c to b.
std::vector<ConjClass> check_gluing(const SimplexPoint& a, const SimplexPoint& c, const SimplexPoint& b);

GeodesicPath piecewise_rigid_geodesic(const SimplexPoint& a, const SimplexPoint& b,
                                      std::size_t budget = default_budget());

// Largest slice dimension of Env(a, b) over its supporting simplices.
int envelope_dimension(const SimplexPoint& a, const SimplexPoint& b, std::size_t budget = default_budget());

// Throws NotAGeodesic when some breakpoint triple breaks multiplicativity.
bool is_rigid(const GeodesicPath& path);

struct GeneralPosition {
  bool value = false;
  std::optional<ConjClass> gamma;
  std::vector<HalfSpace> strict;  // constraints strictly satisfied at the far point
};

// b in the interior of the out-envelope of a in T(b).
GeneralPosition general_position(const SimplexPoint& a, const SimplexPoint& b);
// a in the interior of the in-envelope of b in T(a).
GeneralPosition general_position_in(const SimplexPoint& a, const SimplexPoint& b);

// Rank 2 only. Consecutive waypoints must lie in the same simplex and within
// symmetric distance eps, measured as Lambda(p,q) * Lambda(q,p) <= 1 + eps.
GeodesicPath local_geodesic_approximation(const std::vector<SimplexPoint>& waypoints, const Rational& eps);

struct RaySample {
  std::size_t s = 0, t = 0;  // indices into points
  int dimension = -1;
};

struct RayAudit {
  std::vector<SimplexPoint> points;       // breakpoints and piece midpoints, in order
  std::vector<std::size_t> crossings;     // indices of breakpoints on simplex faces
  bool unbounded = false;                 // the last piece runs off to infinity
  int initial_dimension = -1;             // dim of the out-envelope slice in T(A)
  std::vector<RaySample> samples;
  // First point index after which every sampled dimension is at most 3n - 5; -1 if none.
  long first_low_index = -1;
};

// Walks `steps` pieces, each ending on a simplex face, unless a piece runs
// off to infinity first; that piece is sampled at 1/2 and 3/4 and ends the walk.
RayAudit ray_dimension_audit(const SimplexPoint& a, const std::vector<ConjClass>& dir, int steps);

}  // namespace cvn
