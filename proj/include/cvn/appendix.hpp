#pragma once

#include <string>
#include <vector>

#include "cvn/marked_graph.hpp"
#include "cvn/metric.hpp"

namespace cvn {

struct RatioRow {
  ConjClass word;
  Rational observed;     // length in A over length in C
  Rational closed_form;
};

// Two thetas A, C on either side of the figure eight X with petals of
// lengths a and 1 - a; the x edges have lengths a + delta and a - delta,
// the tree edge has length eps, and C carries the y edge reversed.
struct ThetaPairScenario {
  SimplexPoint a, x, c;
};
ThetaPairScenario theta_pair_scenario(const Rational& a, const Rational& delta, const Rational& eps);

struct A1Report {
  std::vector<RatioRow> ratios;
  std::vector<ConjClass> cw_ac, cw_ca;
  // Bounds on the x petal of a face point B: B needs alpha >= lower and
  // alpha <= upper to lie on a geodesic in both directions.
  Rational lower, upper;
  bool lp_feasible = true;
  bool pass = false;
};
// Requires 0 < a <= 1/2, 0 < delta < a * eps and a + delta + eps < 1.
A1Report verify_a1(const Rational& a, const Rational& delta, const Rational& eps);

// Barbell A (x loop a, bar b, y loop 1 - a - b), figure eight B (alpha,
// 1 - alpha) and theta C (x edge c, tree edge d, reversed y edge 1 - c - d).
struct BarbellThetaScenario {
  SimplexPoint a, c;
};
BarbellThetaScenario barbell_theta_scenario(const Rational& a, const Rational& b, const Rational& c,
                                            const Rational& d);
SimplexPoint figure_eight(const Rational& alpha);

struct A2Report {
  std::vector<RatioRow> ratios;
  std::vector<ConjClass> cw_ac, cw_ca;
  // From x stretching most from A to B and from B to C.
  Rational lower, upper;
  // From the class shrinking most from A to C (y or xy) doing so on both legs.
  ConjClass shrink_word;
  Rational shrink_lower, shrink_upper;
  // Intersection of both intervals and its midpoint.
  Rational alpha_lower, alpha_upper, alpha;
  bool forward = false, backward = false;  // on_geodesic(A,B,C) and on_geodesic(C,B,A) at alpha
  // The midpoint of [lower, upper] alone, which is not always symmetric.
  Rational stretch_midpoint;
  bool stretch_midpoint_symmetric = false;
  // Figure eights on a geodesic in both directions, solved as a polytope.
  bool symmetric_exists = false;
  Rational symmetric_lower, symmetric_upper;
  bool pass = false;
};
// Requires positive parameters, a + b < 1, c + d < 1 and the branch
// a / (c + d) <= (1 - a - b) / (1 - c).
A2Report verify_a2(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

struct TriangleReport {
  SimplexPoint a, b, c;
  std::vector<ConjClass> cw_ab, cw_bc, cw_ca;
  bool contains_expected = false;  // {x, xy^-1}, {y, xy^-1}, {x, y}
  std::vector<ConjClass> glue_at_a, glue_at_b, glue_at_c;
  bool pass = false;
};
TriangleReport verify_theta_triangle();

}  // namespace cvn
