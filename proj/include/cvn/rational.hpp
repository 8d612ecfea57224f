#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace cvn {

using Rational = mpq_class;
using RVec = std::vector<Rational>;

// Accepts "p/q", "p" or a finite decimal such as "0.125". Throws ParseError.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

// Fixed-point decimal rendering with `digits` fractional digits, rounded half away from zero.
std::string to_fixed(const Rational& r, int digits);

Rational sum(const RVec& v);
Rational dot(const RVec& a, const RVec& b);

}  // namespace cvn
