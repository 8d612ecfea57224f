#include "cvn/rational.hpp"

#include <cctype>

#include "cvn/error.hpp"

namespace cvn {

const char* code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::BadValency: return "BadValency";
    case ErrorCode::WrongRank: return "WrongRank";
    case ErrorCode::NonpositiveLength: return "NonpositiveLength";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::TrivialClass: return "TrivialClass";
    case ErrorCode::NotAForest: return "NotAForest";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::EmptyDirection: return "EmptyDirection";
    case ErrorCode::EmptySlice: return "EmptySlice";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::WalkStuck: return "WalkStuck";
    case ErrorCode::NotAGeodesic: return "NotAGeodesic";
    case ErrorCode::NotMaximalSimplex: return "NotMaximalSimplex";
    case ErrorCode::NoFacetChain: return "NoFacetChain";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SeparatingEdge: return "SeparatingEdge";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
    mpz_class d{std::string(den)};
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    value = Rational(mpz_class(std::string(num)), d);
  } else if (dot != std::string_view::npos) {
    auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || !all_digits(fp))
      throw Error(ErrorCode::ParseError, "malformed decimal '" + std::string(text) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    value = Rational(mpz_class(std::string(ip.empty() ? "0" : ip)) * scale + mpz_class(std::string(fp)), scale);
  } else {
    if (!all_digits(s)) throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
    value = Rational(mpz_class(std::string(s)));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) { return r.get_d(); }

std::string to_fixed(const Rational& r, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Rational scaled = abs(r) * scale;
  mpz_class q = scaled.get_num() / scaled.get_den();
  mpz_class rem = scaled.get_num() - q * scaled.get_den();
  if (2 * rem >= scaled.get_den()) q += 1;
  std::string s = q.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out = (r < 0 && q != 0) ? "-" : "";
  out += s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  return out;
}

Rational sum(const RVec& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

Rational dot(const RVec& a, const RVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace cvn
