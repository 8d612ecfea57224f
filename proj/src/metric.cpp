#include "cvn/metric.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>

#include "cvn/error.hpp"

namespace cvn {

Rational length_from_counts(const RVec& lengths, const std::vector<int>& counts) {
  Rational s = 0;
  for (std::size_t e = 0; e < counts.size(); ++e)
    if (counts[e]) s += lengths[e] * counts[e];
  return s;
}

Rational conj_length(const SimplexPoint& p, const ConjClass& gamma) {
  return length_from_counts(p.lengths, p.type->edge_counts(gamma));
}

StretchReport stretch_report(const SimplexPoint& a, const SimplexPoint& b) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::RankMismatch, "points of different rank");
  StretchReport r;
  bool first = true;
  for (const auto& c : enumerate_candidates(*a.type)) {
    Rational ratio = conj_length(b, c.word) / length_from_counts(a.lengths, c.counts);
    if (first || ratio > r.lambda) {
      r.lambda = ratio;
      r.witnesses.clear();
      first = false;
    }
    if (ratio == r.lambda) r.witnesses.push_back(c.word);
    r.per_candidate.emplace_back(c.word, ratio);
  }
  return r;
}

Rational lambda(const SimplexPoint& a, const SimplexPoint& b) { return stretch_report(a, b).lambda; }

std::vector<ConjClass> candidate_witnesses(const SimplexPoint& a, const SimplexPoint& b) {
  return stretch_report(a, b).witnesses;
}

Distance distance(const SimplexPoint& a, const SimplexPoint& b, DistanceMode mode) {
  Rational l;
  switch (mode) {
    case DistanceMode::Right: l = lambda(a, b); break;
    case DistanceMode::Left: l = lambda(b, a); break;
    case DistanceMode::Symmetric: l = lambda(a, b) * lambda(b, a); break;
  }
  return {l, std::log(to_double(l))};
}

bool is_witness(const ConjClass& gamma, const SimplexPoint& a, const SimplexPoint& b) {
  if (gamma.trivial()) throw Error(ErrorCode::TrivialClass, "trivial class");
  return conj_length(b, gamma) / conj_length(a, gamma) == lambda(a, b);
}

const std::vector<ConjClass>& classes_up_to(int rank, int max_len) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<ConjClass>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(rank, max_len);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<ConjClass> out;
  std::vector<Letter> w;
  std::function<void(int)> grow = [&](int len) {
    if (static_cast<int>(w.size()) == len) {
      if (w.front() == -w.back() && len > 1) return;
      ConjClass c(Word(rank, w));
      if (c.rep().letters() == w) out.push_back(c);
      return;
    }
    for (int g = 1; g <= rank; ++g)
      for (int s : {1, -1}) {
        Letter a = s * g;
        if (!w.empty() && w.back() == -a) continue;
        w.push_back(a);
        grow(len);
        w.pop_back();
      }
  };
  for (int len = 1; len <= max_len; ++len) grow(len);
  return cache.emplace(key, std::move(out)).first->second;
}

BruteForceResult brute_force_lambda(const SimplexPoint& a, const SimplexPoint& b, int max_len) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::RankMismatch, "points of different rank");
  if (max_len < 1) throw Error(ErrorCode::ParamOutOfRange, "max_len must be at least 1");
  BruteForceResult r;
  bool first = true;
  for (const auto& c : classes_up_to(a.rank(), max_len)) {
    Rational ratio = length_from_counts(b.lengths, b.type->counts(b.type->tighten_word(c.rep()))) /
                     length_from_counts(a.lengths, a.type->counts(a.type->tighten_word(c.rep())));
    if (first || ratio > r.lambda) {
      r.lambda = ratio;
      r.argmax.clear();
      first = false;
    }
    if (ratio == r.lambda) r.argmax.push_back(c);
  }
  return r;
}

}  // namespace cvn
