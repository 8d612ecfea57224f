#include <algorithm>
#include <set>

#include "cvn/envelopes.hpp"
#include "cvn/error.hpp"
#include "cvn/fixtures.hpp"
#include "doctest.h"

using namespace cvn;

namespace {

Word W(std::initializer_list<Letter> l) { return Word(2, l); }
ConjClass C(std::initializer_list<Letter> l) { return ConjClass(W(l)); }

const HalfSpace& for_word(const std::vector<HalfSpace>& hs, const ConjClass& w) {
  for (const auto& h : hs)
    if (h.word && *h.word == w) return h;
  FAIL("no constraint for " << w.str());
  return hs.front();
}

std::vector<ConjClass> all_candidates(const TopologicalType& t) {
  std::vector<ConjClass> out;
  for (const auto& c : enumerate_candidates(t)) out.push_back(c.word);
  return out;
}

bool on_geodesic(const SimplexPoint& a, const SimplexPoint& c, const SimplexPoint& b) {
  return lambda(a, b) == lambda(a, c) * lambda(c, b);
}

struct Pair {
  SimplexPoint a, b;
};

std::vector<Pair> random_pairs(Rng& rng, int count, int rank) {
  std::vector<Pair> out;
  for (int i = 0; i < count; ++i) {
    auto a = random_point(random_maximal_type(rank, rng, 2), rng);
    auto b = random_point(random_maximal_type(rank, rng, 2), rng);
    out.push_back({a, b});
  }
  return out;
}

// Rank-3 envelopes between random points meet thousands of simplices, so
// the rank-3 samples use two points close to a common face.
std::vector<Pair> nearby_pairs(Rng& rng, int count, int rank) {
  std::vector<Pair> out;
  while (static_cast<int>(out.size()) < count) {
    auto t = random_maximal_type(rank, rng, 2);
    auto faces_of = faces(*t);
    const auto& f = faces_of[rng() % faces_of.size()];
    auto ups = maximal_cofaces(*f.type);
    const auto& up = ups[rng() % ups.size()];
    RVec face_len = random_lengths(rng, f.type->num_edges());
    auto lift = [&](const std::vector<int>& to_face) {
      RVec len;
      for (std::size_t e = 0; e < to_face.size(); ++e) {
        const int img = to_face[e];
        len.push_back(img >= 0 ? face_len[img] : random_rational(rng, 1, 10, 400));
      }
      return len;
    };
    out.push_back({make_point(t, lift(f.edge_map)), make_point(up.type, lift(up.edge_map))});
  }
  return out;
}

RVec mix(const std::vector<RVec>& pts, Rng& rng) {
  RVec w = random_lengths(rng, pts.size());
  RVec x(pts.front().size(), Rational(0));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += w[i] * pts[i][k];
  return x;
}

}  // namespace

TEST_CASE("star_system examples") {
  auto rose = make_point(rose_type(2), {Rational(1, 2), Rational(1, 2)});
  auto s = star_system(rose, C({1}), *rose_type(2));
  CHECK(s.size() == 4);
  CHECK(for_word(s, C({2})).coeffs == RVec{Rational(1, 2), Rational(-1, 2)});
  CHECK(for_word(s, C({1})).degenerate());
  for (const auto& h : s) CHECK(h.provenance == Provenance::Star);

  auto th = theta_point(1, 1, 1);
  auto t = star_system(th, C({1}), *theta_type());
  CHECK(t.size() == 3);
  CHECK(for_word(t, C({1, -2})).coeffs == RVec{0, Rational(2, 3), Rational(-2, 3)});
  CHECK(for_word(t, C({1})).degenerate());
  CHECK_THROWS_AS(star_system(th, ConjClass(W({})), *theta_type()), Error);
}

TEST_CASE("starstar_system examples") {
  auto b = theta_point(2, 1, 1);
  auto s = starstar_system(b, C({1}), *theta_type());
  CHECK(s.size() == 3);
  CHECK(for_word(s, C({2})).coeffs == RVec{Rational(-1, 2), Rational(1, 4), Rational(3, 4)});
  CHECK(for_word(s, C({1})).degenerate());
  for (const auto& h : s) CHECK(h.provenance == Provenance::StarStar);
}

TEST_CASE("out_envelope examples") {
  Rng rng(2);
  for (int i = 0; i < 10; ++i) {
    auto a = random_point(random_maximal_type(2 + (i % 4 == 3), rng), rng);
    auto all = out_envelope(a, all_candidates(*a.type), *a.type);
    CHECK(all.vertices() == std::vector<RVec>{a.lengths});
    auto one = out_envelope(a, {enumerate_candidates(*a.type).front().word}, *a.type);
    CHECK(one.dimension() == static_cast<int>(a.type->num_edges()) - 1);
    CHECK(std::count(one.vertices().begin(), one.vertices().end(), a.lengths) == 1);
  }
  auto rose = make_point(rose_type(2), {Rational(2, 5), Rational(3, 5)});
  int thetas = 0;
  for (const auto& adj : maximal_cofaces(*rose.type)) {
    bool loops = false;
    for (const auto& e : adj.type->edges()) loops |= e.from == e.to;
    if (loops) continue;
    ++thetas;
    CHECK(out_envelope(rose, {C({1}), C({2})}, *adj.type).dimension() == 1);
  }
  CHECK(thetas == 2);
  CHECK_THROWS_AS(out_envelope(rose, {}, *rose.type), Error);
}

TEST_CASE("in_envelope examples") {
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    auto b = random_point(random_maximal_type(2 + (i % 4 == 3), rng), rng);
    auto all = in_envelope(b, all_candidates(*b.type), *b.type);
    CHECK(all.vertices() == std::vector<RVec>{b.lengths});
    auto g = enumerate_candidates(*b.type).back().word;
    CHECK(in_envelope(b, {g, g}, *b.type).vertices() == in_envelope(b, {g}, *b.type).vertices());
  }
}

TEST_CASE("envelope examples") {
  auto a = theta_point(1, 1, 1), b = theta_point(2, 1, 1);
  auto env = envelope(a, b, *theta_type());
  CHECK(env.contains(a.lengths, Membership::Closed));
  CHECK(env.contains(b.lengths, Membership::Closed));
  RVec mid(3);
  for (int k = 0; k < 3; ++k) mid[k] = (a.lengths[k] + b.lengths[k]) / 2;
  CHECK(env.contains(mid, Membership::Closed));
  CHECK(envelope(a, a, *theta_type()).vertices() == std::vector<RVec>{a.lengths});
  CHECK_THROWS_AS(envelope(a, make_point(rose_type(3), {1, 1, 1}), *theta_type()), Error);
}

TEST_CASE("envelope vertices realise the triangle equality") {
  Rng rng(4);
  auto pairs = random_pairs(rng, 12, 2);
  auto more = nearby_pairs(rng, 4, 3);
  pairs.insert(pairs.end(), more.begin(), more.end());
  for (const auto& [a, b] : pairs) {
    auto sup = support(a, b, 3000);
    CHECK(!sup.simplices.empty());
    for (const auto& s : sup.simplices)
      for (const auto& v : s.slice.vertices()) CHECK(on_geodesic(a, realize(s.simplex, v), b));
  }
}

TEST_CASE("witness membership characterization") {
  Rng rng(5);
  int inside = 0, outside = 0;
  for (const auto& [a, b] : random_pairs(rng, 15, 2)) {
    const auto sup = support(a, b);
    for (const auto& s : sup.simplices) {
      std::vector<RVec> samples;
      for (int k = 0; k < 4; ++k) samples.push_back(random_lengths(rng, s.simplex->num_edges()));
      for (int k = 0; k < 4; ++k) {
        RVec x = mix(s.slice.vertices(), rng);
        if (std::all_of(x.begin(), x.end(), [](const Rational& r) { return r > 0; })) samples.push_back(x);
      }
      for (const auto& x : samples) {
        const bool in = s.slice.contains(x, Membership::Closed);
        CHECK(in == on_geodesic(a, SimplexPoint{s.simplex, x}, b));
        (in ? inside : outside)++;
      }
    }
  }
  CHECK(inside > 0);
  CHECK(outside > 0);
}

TEST_CASE("envelope is independent of the chosen witness") {
  Rng rng(6);
  int multi = 0;
  for (const auto& [a, b] : random_pairs(rng, 40, 2)) {
    auto cw = candidate_witnesses(a, b);
    for (const auto& delta : {a.type, b.type}) {
      auto ref = envelope_slice(a, b, delta, cw.front()).polytope.vertices();
      for (const auto& g : cw) CHECK(envelope_slice(a, b, delta, g).polytope.vertices() == ref);
    }
    multi += cw.size() > 1;
  }
  // Ties need exact coincidences; the theta triangle provides them.
  auto a = theta_point(1, 1, 1), b = theta_point(2, 1, 1);
  auto cw = candidate_witnesses(a, b);
  CHECK(cw.size() == 2);
  CHECK(envelope_slice(a, b, theta_type(), cw[0]).polytope.vertices() ==
        envelope_slice(a, b, theta_type(), cw[1]).polytope.vertices());
}

TEST_CASE("nesting and diameter bound") {
  Rng rng(7);
  for (const auto& [a, b] : random_pairs(rng, 8, 2)) {
    const Rational bound = lambda(a, b) * lambda(a, b) * lambda(b, a);
    const auto sup = support(a, b);
    for (const auto& s : sup.simplices) {
      const auto& vs = s.slice.vertices();
      for (const auto& x : vs)
        for (const auto& y : vs) CHECK(lambda(realize(s.simplex, x), realize(s.simplex, y)) <= bound);
      for (const auto& v : vs) {
        auto c = realize(s.simplex, v);
        for (const auto& sub : {envelope(a, c, *s.simplex), envelope(c, b, *s.simplex)})
          for (const auto& w : sub.vertices()) CHECK(s.slice.contains(w, Membership::Closed));
      }
    }
  }
}

TEST_CASE("out-envelopes of candidates cover") {
  Rng rng(8);
  for (int i = 0; i < 60; ++i) {
    int n = i % 5 == 4 ? 3 : 2;
    auto a = random_point(random_maximal_type(n, rng, 2), rng);
    auto b = random_point(random_maximal_type(n, rng, 2), rng);
    bool covered = false;
    for (const auto& c : enumerate_candidates(*a.type))
      covered |= out_envelope(a, {c.word}, *b.type).contains(b.lengths, Membership::Closed);
    CHECK(covered);
  }
}

TEST_CASE("support examples") {
  auto a = theta_point(1, 1, 1);
  auto near = theta_point(Rational(101, 100), 1, 1);
  auto sup = support(a, near);
  CHECK(marking_equivalent(*sup.simplices.front().simplex, *a.type));
  for (const auto& s : sup.simplices) CHECK(!s.slice.empty());
  CHECK(support(a, a).simplices.size() == 1);

  auto cfg = dimension_drop_config(Rational(2, 5), Rational(1, 20));
  auto cw = candidate_witnesses(cfg.a, cfg.b);
  CHECK(cw == std::vector<ConjClass>{C({1, 2})});
  auto sd = support(cfg.a, cfg.b);
  auto has = [&](const TopologicalType& t) {
    return std::any_of(sd.simplices.begin(), sd.simplices.end(),
                       [&](const SupportEntry& e) { return marking_equivalent(*e.simplex, t); });
  };
  CHECK(has(*cfg.a.type));
  CHECK(has(*cfg.b.type));
  CHECK(has(*cfg.rose.type));
  CHECK_THROWS_AS(support(cfg.a, cfg.b, 1), Error);
}

TEST_CASE("direction_reduction") {
  Rng rng(9);
  for (int i = 0; i < 15; ++i) {
    auto a = random_point(random_maximal_type(2, rng, 2), rng);
    auto delta = random_maximal_type(2, rng, 2);
    auto cands = all_candidates(*a.type);
    std::vector<ConjClass> m{cands[i % cands.size()]};
    if (out_envelope(a, m, *delta).empty()) continue;
    auto r = direction_reduction(a, m, delta);
    CHECK(r.verified);
    for (const auto& g : r.direction) CHECK(std::count(cands.begin(), cands.end(), g) == 1);
  }
  // A long non-candidate word.
  auto a = theta_point(1, 2, 3);
  auto r = direction_reduction(a, {C({1, 1, -2})}, theta_type());
  CHECK(r.verified);
  CHECK(!r.direction.empty());
  CHECK_THROWS_AS(direction_reduction(a, {}, theta_type()), Error);
}

TEST_CASE("rainbow graphs") {
  for (const auto& g : {C({1}), C({1, 2}), ConjClass(Word(3, {1, 2, -3}))}) {
    const Rational eps(1, 100);
    auto r = rainbow_graph(g, eps);
    CHECK(conj_length(r, g) < 2 * eps);
    CHECK(r.type->trivalent());
    for (const auto& c : enumerate_candidates(*r.type))
      if (c.word != g) CHECK(length_from_counts(r.lengths, c.counts) >= 2 * conj_length(r, g));
  }
  CHECK(extend_to_basis(W({1, 2})) == std::vector<Word>{W({1, 2}), W({2})});
  CHECK_THROWS_AS(rainbow_graph(C({1, 2, 1, -2}), Rational(1, 100)), Error);
  CHECK_THROWS_AS(rainbow_graph(C({1}), Rational(1, 8)), Error);
}

TEST_CASE("rainbow graphs sit inside in-envelopes") {
  Rng rng(10);
  for (int i = 0; i < 30; ++i) {
    int n = i % 3 == 2 ? 3 : 2;
    auto b = random_point(random_maximal_type(n, rng, 2), rng);
    auto g = ConjClass(random_automorphism(n, rng, 3).front());
    Rational eps = std::min(Rational(1, 4 * n + 1), Rational(conj_length(b, g) / 100));
    auto r = rainbow_graph(g, eps);
    CHECK(is_witness(g, r, b));
    CHECK(in_envelope(b, {g}, *r.type).contains(r.lengths, Membership::RelativeInterior));
  }
}
