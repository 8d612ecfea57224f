#include "cvn/appendix.hpp"

#include <algorithm>

#include "cvn/envelopes.hpp"
#include "cvn/error.hpp"
#include "cvn/fixtures.hpp"
#include "cvn/geodesics.hpp"

namespace cvn {

namespace {

const ConjClass kX(Word(2, {1}));
const ConjClass kY(Word(2, {2}));
const ConjClass kXY(Word(2, {1, 2}));
const ConjClass kXYinv(Word(2, {1, -2}));

// Theta with x edge u->v, tree edge u->v and the y edge v->u.
TypePtr reversed_theta() {
  static const TypePtr t = std::make_shared<const TopologicalType>(
      2, std::vector<std::string>{"u", "v"},
      std::vector<EdgeSpec>{{"ex", 0, 1, Word(2, {1}), false}, {"h", 0, 1, Word(2), true}, {"ey", 1, 0, Word(2, {2}), false}});
  return t;
}

std::vector<RatioRow> ratio_rows(const SimplexPoint& a, const SimplexPoint& c, const std::vector<Rational>& closed) {
  std::vector<RatioRow> rows;
  const ConjClass words[] = {kX, kY, kXY, kXYinv};
  for (int k = 0; k < 4; ++k) rows.push_back({words[k], conj_length(a, words[k]) / conj_length(c, words[k]), closed[k]});
  return rows;
}

bool rows_match(const std::vector<RatioRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const RatioRow& r) { return r.observed == r.closed_form; });
}

bool contains(const std::vector<ConjClass>& set, const ConjClass& g) { return std::find(set.begin(), set.end(), g) != set.end(); }

}  // namespace

ThetaPairScenario theta_pair_scenario(const Rational& a, const Rational& delta, const Rational& eps) {
  if (a <= 0 || delta <= 0 || eps <= 0 || a + delta + eps >= 1 || a - delta <= 0)
    throw Error(ErrorCode::ParamOutOfRange, "need positive a - delta, delta, eps and a + delta + eps < 1");
  const Rational plus = a + delta, minus = a - delta;
  return {make_point(theta_type(), {plus, eps, 1 - plus - eps}), make_point(rose_type(2), {a, 1 - a}),
          make_point(reversed_theta(), {minus, eps, 1 - minus - eps})};
}

A1Report verify_a1(const Rational& a, const Rational& delta, const Rational& eps) {
  if (a > Rational(1, 2) || delta >= a * eps)
    throw Error(ErrorCode::ParamOutOfRange, "need a <= 1/2 and delta < a * eps");
  auto s = theta_pair_scenario(a, delta, eps);
  const Rational plus = a + delta, minus = a - delta;
  A1Report r;
  r.ratios = ratio_rows(s.a, s.c,
                        {(plus + eps) / (minus + eps), (1 - plus) / (1 - minus), (1 + eps) / (1 - eps),
                         (1 - eps) / (1 + eps)});
  r.cw_ac = candidate_witnesses(s.a, s.c);
  r.cw_ca = candidate_witnesses(s.c, s.a);
  r.lower = (plus + eps) / (1 + eps);
  r.upper = (minus + eps) / (1 + eps);
  // A face point on a geodesic A -> C keeps the witness xy^-1 on both legs,
  // one on C -> A keeps xy.
  const TopologicalType& face = *s.x.type;
  std::vector<HalfSpace> rows = star_system(s.a, kXYinv, face);
  for (auto&& part : {starstar_system(s.c, kXYinv, face), star_system(s.c, kXY, face), starstar_system(s.a, kXY, face)})
    rows.insert(rows.end(), part.begin(), part.end());
  r.lp_feasible = feasible(rows, face.num_edges());
  r.pass = rows_match(r.ratios) && r.cw_ac == std::vector<ConjClass>{kXYinv} && r.cw_ca == std::vector<ConjClass>{kXY} &&
           r.lower > r.upper && !r.lp_feasible;
  return r;
}

BarbellThetaScenario barbell_theta_scenario(const Rational& a, const Rational& b, const Rational& c,
                                            const Rational& d) {
  if (a <= 0 || b <= 0 || c <= 0 || d <= 0 || a + b >= 1 || c + d >= 1)
    throw Error(ErrorCode::ParamOutOfRange, "need positive parameters with a + b < 1 and c + d < 1");
  return {make_point(barbell_type(), {a, b, 1 - a - b}), make_point(reversed_theta(), {c, d, 1 - c - d})};
}

SimplexPoint figure_eight(const Rational& alpha) {
  if (alpha <= 0 || alpha >= 1) throw Error(ErrorCode::ParamOutOfRange, "need 0 < alpha < 1");
  return make_point(rose_type(2), {alpha, 1 - alpha});
}

A2Report verify_a2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  auto s = barbell_theta_scenario(a, b, c, d);
  if (a / (c + d) > (1 - a - b) / (1 - c))
    throw Error(ErrorCode::ParamOutOfRange, "outside the branch where x stretches least from A to C");
  A2Report r;
  r.ratios = ratio_rows(s.a, s.c, {a / (c + d), (1 - a - b) / (1 - c), (1 + b) / (1 - d), (1 + b) / (1 + d)});
  r.cw_ac = candidate_witnesses(s.a, s.c);
  r.cw_ca = candidate_witnesses(s.c, s.a);
  r.lower = a / (1 - b);
  r.upper = (c + d) / (1 + d);

  const Rational from_a = (a + 2 * b) / (1 + b), from_c = (c - d) / (1 - d);
  if (contains(r.cw_ca, kY)) {
    r.shrink_word = kY;
    r.shrink_lower = from_a;
    r.shrink_upper = from_c;
  } else {
    r.shrink_word = kXY;
    r.shrink_lower = from_c;
    r.shrink_upper = from_a;
  }
  r.alpha_lower = std::max(r.lower, r.shrink_lower);
  r.alpha_upper = std::min(r.upper, r.shrink_upper);
  r.alpha = (r.alpha_lower + r.alpha_upper) / 2;
  if (r.alpha_lower <= r.alpha_upper && r.alpha > 0 && r.alpha < 1) {
    auto mid = figure_eight(r.alpha);
    r.forward = on_geodesic(s.a, mid, s.c);
    r.backward = on_geodesic(s.c, mid, s.a);
  }
  r.stretch_midpoint = (r.lower + r.upper) / 2;
  if (r.lower <= r.upper && r.stretch_midpoint < 1) {
    auto mid = figure_eight(r.stretch_midpoint);
    r.stretch_midpoint_symmetric = on_geodesic(s.a, mid, s.c) && on_geodesic(s.c, mid, s.a);
  }

  // One witness per direction suffices: every witness survives on both legs.
  const TypePtr rose = rose_type(2);
  std::vector<HalfSpace> rows = star_system(s.a, r.cw_ac.front(), *rose);
  for (auto&& part : {starstar_system(s.c, r.cw_ac.front(), *rose), star_system(s.c, r.cw_ca.front(), *rose),
                      starstar_system(s.a, r.cw_ca.front(), *rose)})
    rows.insert(rows.end(), part.begin(), part.end());
  Polytope sym(rose->num_edges(), rows);
  if (!sym.empty()) {
    r.symmetric_exists = true;
    r.symmetric_lower = sym.vertices().front()[0];
    r.symmetric_upper = sym.vertices().back()[0];
  }

  r.pass = rows_match(r.ratios) && r.lower <= r.upper && r.forward && r.backward && r.symmetric_exists &&
           r.symmetric_lower == std::max(r.alpha_lower, Rational(0)) && r.symmetric_upper == r.alpha_upper;
  return r;
}

TriangleReport verify_theta_triangle() {
  TriangleReport r{theta_point(1, 1, 1), theta_point(2, 1, 1), theta_point(1, Rational(1, 3), 1)};
  r.cw_ab = candidate_witnesses(r.a, r.b);
  r.cw_bc = candidate_witnesses(r.b, r.c);
  r.cw_ca = candidate_witnesses(r.c, r.a);
  r.contains_expected = contains(r.cw_ab, kX) && contains(r.cw_ab, kXYinv) && contains(r.cw_bc, kY) &&
                        contains(r.cw_bc, kXYinv) && contains(r.cw_ca, kX) && contains(r.cw_ca, kY);
  r.glue_at_a = check_gluing(r.c, r.a, r.b);
  r.glue_at_b = check_gluing(r.a, r.b, r.c);
  r.glue_at_c = check_gluing(r.b, r.c, r.a);
  r.pass = r.contains_expected && !r.glue_at_a.empty() && !r.glue_at_b.empty() && !r.glue_at_c.empty();
  return r;
}

}  // namespace cvn
