#pragma once

#include <utility>
#include <vector>

#include "cvn/candidates.hpp"
#include "cvn/marked_graph.hpp"
#include "cvn/rational.hpp"

namespace cvn {

Rational length_from_counts(const RVec& lengths, const std::vector<int>& counts);
Rational conj_length(const SimplexPoint& p, const ConjClass& gamma);

struct StretchReport {
  Rational lambda;
  std::vector<ConjClass> witnesses;  // CW(A,B), sorted
  std::vector<std::pair<ConjClass, Rational>> per_candidate;
};

StretchReport stretch_report(const SimplexPoint& a, const SimplexPoint& b);
Rational lambda(const SimplexPoint& a, const SimplexPoint& b);
std::vector<ConjClass> candidate_witnesses(const SimplexPoint& a, const SimplexPoint& b);

enum class DistanceMode { Right, Left, Symmetric };

struct Distance {
  Rational lambda;  // multiplicative form; the symmetric mode multiplies both directions
  double log_value;
};

Distance distance(const SimplexPoint& a, const SimplexPoint& b, DistanceMode mode);

bool is_witness(const ConjClass& gamma, const SimplexPoint& a, const SimplexPoint& b);

// Canonical representatives of all nontrivial unoriented conjugacy classes
// with cyclic length <= max_len.
const std::vector<ConjClass>& classes_up_to(int rank, int max_len);

struct BruteForceResult {
  Rational lambda;
  std::vector<ConjClass> argmax;
};

BruteForceResult brute_force_lambda(const SimplexPoint& a, const SimplexPoint& b, int max_len);

}  // namespace cvn
