#include <algorithm>
#include <array>

#include "cvn/appendix.hpp"
#include "cvn/error.hpp"
#include "cvn/geodesics.hpp"
#include "doctest.h"

using namespace cvn;

namespace {

ConjClass C(std::initializer_list<Letter> l) { return ConjClass(Word(2, l)); }

Rational R(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Lengths of x, y, xy, xy^-1, read off the edges by hand. In rank 2 every
// candidate of a theta, barbell or rose is one of these four classes.
using Lengths = std::array<Rational, 4>;
const ConjClass kWords[4] = {C({1}), C({2}), C({1, 2}), C({1, -2})};

// Theta with both non-tree edges leaving the same vertex: xy crosses the tree edge twice.
Lengths theta(const Rational& x, const Rational& t, const Rational& y) { return {x + t, y + t, x + y + 2 * t, x + y}; }
// Theta with the y edge reversed: now x y^-1 crosses the tree edge twice.
Lengths reversed(const Rational& x, const Rational& t, const Rational& y) { return {x + t, y + t, x + y, x + y + 2 * t}; }
Lengths barbell(const Rational& x, const Rational& bar, const Rational& y) {
  return {x, y, x + y + 2 * bar, x + y + 2 * bar};
}
Lengths rose(const Rational& x) { return {x, 1 - x, Rational(1), Rational(1)}; }

Rational stretch(const Lengths& p, const Lengths& q) {
  Rational m = 0;
  for (int k = 0; k < 4; ++k) m = std::max(m, Rational(q[k] / p[k]));
  return m;
}

// Simple loops of a theta: the class that crosses the tree edge twice is not one.
const std::vector<int> kThetaLoops{0, 1, 3}, kReversedLoops{0, 1, 2};

// Maximizers among the candidates of the source graph.
std::vector<ConjClass> argmax(const Lengths& p, const Lengths& q, const std::vector<int>& candidates) {
  std::vector<ConjClass> out;
  const Rational m = stretch(p, q);
  for (int k : candidates)
    if (q[k] / p[k] == m) out.push_back(kWords[k]);
  std::sort(out.begin(), out.end());
  return out;
}

bool symmetric(const Lengths& a, const Lengths& b, const Lengths& c) {
  return stretch(a, c) == stretch(a, b) * stretch(b, c) && stretch(c, a) == stretch(c, b) * stretch(b, a);
}

}  // namespace

TEST_CASE("theta pair around a figure eight: ratios, witnesses, no symmetric point") {
  for (long a = 1; a <= 5; ++a)
    for (long e = 1; e <= 4; ++e)
      for (long k = 1; k <= 3; ++k) {
        const Rational av = R(a, 10), eps = R(e, 20), delta = av * eps * R(k, 4);
        CAPTURE(to_string(av));
        CAPTURE(to_string(eps));
        CAPTURE(to_string(delta));
        const Lengths A = theta(av + delta, eps, 1 - av - delta - eps);
        const Lengths Cl = reversed(av - delta, eps, 1 - av + delta - eps);
        A1Report r = verify_a1(av, delta, eps);
        for (int w = 0; w < 4; ++w) {
          CHECK(r.ratios[w].word == kWords[w]);
          CHECK(r.ratios[w].observed == A[w] / Cl[w]);
        }
        CHECK(r.cw_ac == argmax(A, Cl, kThetaLoops));
        CHECK(r.cw_ca == argmax(Cl, A, kReversedLoops));
        CHECK(r.cw_ac == std::vector<ConjClass>{C({1, -2})});
        CHECK(r.cw_ca == std::vector<ConjClass>{C({1, 2})});
        CHECK_FALSE(r.lp_feasible);
        CHECK(r.pass);
        for (long s = 1; s < 200; ++s) CHECK_FALSE(symmetric(A, rose(R(s, 200)), Cl));
      }
}

TEST_CASE("theta pair example values") {
  // a = 1/2, delta = 1/100, eps = 1/10: x is 61/100 over 59/100, xy is 11/10 over 9/10.
  A1Report r = verify_a1(R(1, 2), R(1, 100), R(1, 10));
  CHECK(r.ratios[0].observed == R(61, 59));
  CHECK(r.ratios[2].observed == R(11, 9));
  CHECK(r.ratios[3].observed == R(9, 11));
  CHECK(r.pass);
}

TEST_CASE("barbell and theta: symmetric figure eights form the reported interval") {
  int tuples = 0;
  for (long a = 1; a <= 5; ++a)
    for (long b = 1; b <= 4; ++b)
      for (long c = 2; c <= 6; ++c)
        for (long d = 1; d <= 4; ++d) {
          const Rational av = R(a, 20), bv = R(b, 20), cv = R(c, 10), dv = R(d, 20);
          if (av / (cv + dv) > (1 - av - bv) / (1 - cv)) {
            CHECK_THROWS_AS(verify_a2(av, bv, cv, dv), Error);
            continue;
          }
          ++tuples;
          const Lengths A = barbell(av, bv, 1 - av - bv), Cl = reversed(cv, dv, 1 - cv - dv);
          A2Report r = verify_a2(av, bv, cv, dv);
          for (int w = 0; w < 4; ++w) CHECK(r.ratios[w].observed == A[w] / Cl[w]);
          CHECK(r.lower <= r.upper);
          CHECK(r.pass);
          CHECK(symmetric(A, rose(r.alpha), Cl));
          // Every grid point of (0,1) is symmetric exactly when it lies in the interval.
          for (long s = 1; s < 120; ++s) {
            const Rational x = R(s, 120);
            const bool inside = r.alpha_lower <= x && x <= r.alpha_upper;
            CHECK(symmetric(A, rose(x), Cl) == inside);
          }
        }
  CHECK(tuples >= 20);
}

TEST_CASE("barbell and theta example values") {
  // a/(1-b) = (1/4)/(3/4) and (c+d)/(1+d) = (1/2)/(6/5).
  A2Report r = verify_a2(R(1, 4), R(1, 4), R(3, 10), R(1, 5));
  CHECK(r.lower == R(1, 3));
  CHECK(r.upper == R(5, 12));
  CHECK(r.forward);
  CHECK(r.backward);
  CHECK(r.pass);
}

TEST_CASE("theta triangle witness sets") {
  TriangleReport r = verify_theta_triangle();
  auto has = [](const std::vector<ConjClass>& s, const ConjClass& g) { return std::count(s.begin(), s.end(), g) == 1; };
  CHECK(has(r.cw_ab, C({1})));
  CHECK(has(r.cw_ab, C({1, -2})));
  CHECK(has(r.cw_bc, C({2})));
  CHECK(has(r.cw_bc, C({1, -2})));
  CHECK(has(r.cw_ca, C({1})));
  CHECK(has(r.cw_ca, C({2})));
  // Hand lengths of the three thetas agree with the library witnesses.
  const Lengths A = theta(R(1, 3), R(1, 3), R(1, 3)), B = theta(R(1, 2), R(1, 4), R(1, 4)),
                Cl = theta(R(3, 7), R(1, 7), R(3, 7));
  CHECK(r.cw_ab == argmax(A, B, kThetaLoops));
  CHECK(r.cw_bc == argmax(B, Cl, kThetaLoops));
  CHECK(r.cw_ca == argmax(Cl, A, kThetaLoops));
  CHECK(r.pass);
}

TEST_CASE("appendix parameter checks") {
  CHECK_THROWS_AS(verify_a1(R(3, 5), R(1, 100), R(1, 10)), Error);
  CHECK_THROWS_AS(verify_a1(R(1, 2), R(1, 10), R(1, 10)), Error);
  CHECK_THROWS_AS(theta_pair_scenario(R(1, 2), R(1, 100), R(1, 2)), Error);
  CHECK_THROWS_AS(barbell_theta_scenario(R(1, 2), R(1, 2), R(1, 4), R(1, 4)), Error);
  CHECK_THROWS_AS(figure_eight(Rational(1)), Error);
}
