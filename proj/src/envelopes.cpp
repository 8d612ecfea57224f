#include "cvn/envelopes.hpp"

#include <cstdlib>
#include <deque>
#include <map>
#include <string>

#include "cvn/candidates.hpp"
#include "cvn/error.hpp"

namespace cvn {

namespace {

// coeffs = p * counts(u) - q * counts(v)
HalfSpace combine(const Rational& p, const std::vector<int>& cu, const Rational& q, const std::vector<int>& cv,
                  Provenance prov, const ConjClass& word) {
  HalfSpace h;
  h.coeffs.resize(cu.size());
  for (std::size_t e = 0; e < cu.size(); ++e) h.coeffs[e] = p * cu[e] - q * cv[e];
  h.provenance = prov;
  h.word = word;
  return h;
}

std::vector<HalfSpace> cross_out(const SimplexPoint& a, const std::vector<ConjClass>& dir,
                                 const TopologicalType& delta) {
  std::vector<HalfSpace> out;
  const auto c0 = delta.edge_counts(dir[0]);
  const Rational l0 = conj_length(a, dir[0]);
  for (std::size_t i = 1; i < dir.size(); ++i) {
    const auto ci = delta.edge_counts(dir[i]);
    const Rational li = conj_length(a, dir[i]);
    // l_C(dir0) / l_A(dir0) == l_C(diri) / l_A(diri)
    HalfSpace h = combine(li, c0, l0, ci, Provenance::Cross, dir[i]);
    HalfSpace neg = h;
    for (auto& c : neg.coeffs) c = -c;
    out.push_back(std::move(h));
    out.push_back(std::move(neg));
  }
  return out;
}

std::vector<HalfSpace> cross_in(const SimplexPoint& b, const std::vector<ConjClass>& dir,
                                const TopologicalType& delta) {
  std::vector<HalfSpace> out;
  const auto c0 = delta.edge_counts(dir[0]);
  const Rational l0 = conj_length(b, dir[0]);
  for (std::size_t i = 1; i < dir.size(); ++i) {
    const auto ci = delta.edge_counts(dir[i]);
    const Rational li = conj_length(b, dir[i]);
    // l_B(dir0) / l_C(dir0) == l_B(diri) / l_C(diri)
    HalfSpace h = combine(l0, ci, li, c0, Provenance::Cross, dir[i]);
    HalfSpace neg = h;
    for (auto& c : neg.coeffs) c = -c;
    out.push_back(std::move(h));
    out.push_back(std::move(neg));
  }
  return out;
}

}  // namespace

std::vector<HalfSpace> star_system(const SimplexPoint& a, const ConjClass& gamma, const TopologicalType& delta) {
  if (gamma.trivial()) throw Error(ErrorCode::TrivialClass, "trivial direction");
  if (a.rank() != delta.rank()) throw Error(ErrorCode::RankMismatch, "point and simplex of different rank");
  std::vector<HalfSpace> out;
  const Rational lg = conj_length(a, gamma);
  const auto cg = delta.edge_counts(gamma);
  for (const auto& w : enumerate_candidates(*a.type)) {
    // l_A(w) #(e, gamma) - l_A(gamma) #(e, w), counts in delta
    out.push_back(combine(length_from_counts(a.lengths, w.counts), cg, lg, delta.edge_counts(w.word),
                          Provenance::Star, w.word));
  }
  return out;
}

std::vector<HalfSpace> starstar_system(const SimplexPoint& b, const ConjClass& gamma, const TopologicalType& delta) {
  if (gamma.trivial()) throw Error(ErrorCode::TrivialClass, "trivial direction");
  if (b.rank() != delta.rank()) throw Error(ErrorCode::RankMismatch, "point and simplex of different rank");
  std::vector<HalfSpace> out;
  const Rational lg = conj_length(b, gamma);
  const auto cg = delta.edge_counts(gamma);
  for (const auto& d : enumerate_candidates(delta)) {
    // l_B(gamma) #(e, d) - l_B(d) #(e, gamma)
    out.push_back(combine(lg, d.counts, conj_length(b, d.word), cg, Provenance::StarStar, d.word));
  }
  return out;
}

Polytope out_envelope(const SimplexPoint& a, const std::vector<ConjClass>& dir, const TopologicalType& delta) {
  if (dir.empty()) throw Error(ErrorCode::EmptyDirection, "direction set is empty");
  std::vector<HalfSpace> hs;
  for (const auto& g : dir) {
    auto s = star_system(a, g, delta);
    hs.insert(hs.end(), s.begin(), s.end());
  }
  auto c = cross_out(a, dir, delta);
  hs.insert(hs.end(), c.begin(), c.end());
  return Polytope(delta.num_edges(), std::move(hs));
}

Polytope in_envelope(const SimplexPoint& b, const std::vector<ConjClass>& dir, const TopologicalType& delta) {
  if (dir.empty()) throw Error(ErrorCode::EmptyDirection, "direction set is empty");
  std::vector<HalfSpace> hs;
  for (const auto& g : dir) {
    auto s = starstar_system(b, g, delta);
    hs.insert(hs.end(), s.begin(), s.end());
  }
  auto c = cross_in(b, dir, delta);
  hs.insert(hs.end(), c.begin(), c.end());
  return Polytope(delta.num_edges(), std::move(hs));
}

EnvelopeSlice envelope_slice(const SimplexPoint& a, const SimplexPoint& b, const TypePtr& delta,
                             const std::optional<ConjClass>& gamma) {
  if (a.rank() != b.rank() || a.rank() != delta->rank())
    throw Error(ErrorCode::RankMismatch, "points and simplex of different rank");
  EnvelopeSlice s;
  s.simplex = delta;
  s.gamma = gamma ? *gamma : candidate_witnesses(a, b).front();
  s.star = star_system(a, s.gamma, *delta);
  s.starstar = starstar_system(b, s.gamma, *delta);
  std::vector<HalfSpace> hs = s.star;
  hs.insert(hs.end(), s.starstar.begin(), s.starstar.end());
  s.polytope = Polytope(delta->num_edges(), std::move(hs));
  return s;
}

Polytope envelope(const SimplexPoint& a, const SimplexPoint& b, const TopologicalType& delta) {
  return envelope_slice(a, b, std::make_shared<const TopologicalType>(delta)).polytope;
}

std::size_t default_budget() {
  if (const char* env = std::getenv("CVN_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 500;
}

Support support(const SimplexPoint& a, const SimplexPoint& b, std::size_t budget) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::RankMismatch, "points of different rank");
  const ConjClass gamma = candidate_witnesses(a, b).front();
  Support sup;
  // Every examined type, accepted or rejected, bucketed by signature.
  std::map<std::string, std::vector<TypePtr>> seen;
  std::size_t examined = 0;
  auto known = [&](const TypePtr& t) {
    auto& bucket = seen[marking_signature(*t)];
    for (const auto& r : bucket)
      if (marking_equivalent(*r, *t)) return true;
    bucket.push_back(t);
    return false;
  };
  auto slice_of = [&](const TypePtr& t) { return envelope_slice(a, b, t, gamma).polytope; };

  known(a.type);
  sup.simplices.push_back({a.type, slice_of(a.type), -1, {}});
  ++examined;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    TypePtr t = sup.simplices[cur].simplex;
    for (auto& adj : adjacent_simplices(*t)) {
      if (known(adj.type)) continue;
      if (++examined > budget)
        throw Error(ErrorCode::BudgetExceeded, "support search exceeded " + std::to_string(budget) + " simplices");
      Polytope p = slice_of(adj.type);
      if (p.empty()) continue;
      TypePtr nt = adj.type;
      sup.simplices.push_back({nt, std::move(p), static_cast<int>(cur), std::move(adj)});
      queue.push_back(sup.simplices.size() - 1);
    }
  }
  return sup;
}

DirectionReduction direction_reduction(const SimplexPoint& a, const std::vector<ConjClass>& dir,
                                       const TypePtr& delta) {
  Polytope slice = out_envelope(a, dir, *delta);
  if (slice.empty()) throw Error(ErrorCode::EmptySlice, "out-envelope slice is empty");
  SimplexPoint b0 = realize(delta, slice.barycenter());
  DirectionReduction r;
  r.direction = candidate_witnesses(a, b0);
  r.verified = out_envelope(a, r.direction, *delta).vertices() == slice.vertices();
  return r;
}

SimplexPoint rainbow_graph(const ConjClass& gamma, const Rational& eps) {
  if (gamma.trivial()) throw Error(ErrorCode::TrivialClass, "trivial class");
  const int n = gamma.rank();
  if (n < 2) throw Error(ErrorCode::Unsupported, "rainbow graphs need rank at least 2");
  if (eps <= 0 || eps >= Rational(1, 4 * n)) throw Error(ErrorCode::ParamOutOfRange, "eps must lie in (0, 1/(4n))");
  std::vector<Word> basis = extend_to_basis(gamma.rep());

  // Vertices a1..a(n-1) then b1..b(n-1); a1 is the base point.
  std::vector<std::string> ids;
  for (int i = 1; i < n; ++i) ids.push_back("a" + std::to_string(i));
  for (int i = 1; i < n; ++i) ids.push_back("b" + std::to_string(i));
  auto A = [](int i) { return i - 1; };
  auto B = [n](int i) { return n - 2 + i; };
  std::vector<EdgeSpec> edges;
  RVec lengths;
  const Word none(n);
  edges.push_back({"t0", A(1), B(1), none, true});
  lengths.push_back(eps / 2);
  for (int i = 1; i + 1 < n; ++i) {
    edges.push_back({"ta" + std::to_string(i), A(i + 1), A(i), none, true});
    lengths.push_back(1);
    edges.push_back({"tb" + std::to_string(i), B(i), B(i + 1), none, true});
    lengths.push_back(1);
  }
  for (int i = 1; i < n; ++i) {
    edges.push_back({"r" + std::to_string(i), B(i), A(i), basis[i - 1], false});
    lengths.push_back(i == 1 ? eps / 2 : Rational(1));
  }
  edges.push_back({"r" + std::to_string(n), B(n - 1), A(n - 1), basis[n - 1], false});
  lengths.push_back(1);

  auto type = std::make_shared<const TopologicalType>(n, ids, edges);
  SimplexPoint p = SimplexPoint::normalized(type, lengths);
  // Re-verify: the gamma loop is the unique shortest candidate by a wide margin.
  const Rational lg = conj_length(p, gamma);
  for (const auto& c : enumerate_candidates(*type)) {
    if (c.word == gamma) continue;
    if (length_from_counts(p.lengths, c.counts) < 2 * lg)
      throw Error(ErrorCode::ParamOutOfRange, "rainbow graph length conditions fail for " + c.word.str());
  }
  return p;
}

}  // namespace cvn
