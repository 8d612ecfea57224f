#include <set>

#include "cvn/candidates.hpp"
#include "cvn/error.hpp"
#include "cvn/fixtures.hpp"
#include "cvn/marked_graph.hpp"
#include "cvn/metric.hpp"
#include "doctest.h"

using namespace cvn;

namespace {

Word W(std::initializer_list<Letter> l) { return Word(2, l); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

MarkedGraph theta_graph(Rational a, Rational b, Rational c) {
  MarkedGraph g;
  g.rank = 2;
  g.vertices = {"u", "v"};
  g.edges = {{"e1", "u", "v", a, W({1})}, {"e2", "u", "v", b, W({})}, {"e3", "u", "v", c, W({2})}};
  g.tree = {"e2"};
  return g;
}

bool same_cycle(const EdgePath& p, const EdgePath& q) {
  if (p.size() != q.size()) return false;
  for (const auto& cand : {q, invert_path(q)})
    for (std::size_t r = 0; r < cand.size(); ++r) {
      bool ok = true;
      for (std::size_t k = 0; k < p.size() && ok; ++k) ok = p[k] == cand[(r + k) % cand.size()];
      if (ok) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("validate_and_normalize examples") {
  MarkedGraph rose;
  rose.rank = 2;
  rose.vertices = {"v"};
  rose.edges = {{"x", "v", "v", 1, W({1})}, {"y", "v", "v", 1, W({2})}};
  auto p = validate_and_normalize(rose);
  CHECK(p.lengths == RVec{Rational(1, 2), Rational(1, 2)});

  auto t = validate_and_normalize(theta_graph(1, 1, 1));
  CHECK(t.lengths == RVec{Rational(1, 3), Rational(1, 3), Rational(1, 3)});
  CHECK(sum(t.lengths) == 1);

  MarkedGraph sub = theta_graph(1, 1, 1);
  sub.vertices.push_back("w");
  sub.edges[1].to = "w";
  sub.edges.push_back({"e4", "w", "v", 1, W({})});
  sub.tree.push_back("e4");
  CHECK(code_of([&] { validate_and_normalize(sub); }) == ErrorCode::BadValency);

  MarkedGraph neg = theta_graph(1, 0, 1);
  CHECK(code_of([&] { validate_and_normalize(neg); }) == ErrorCode::NonpositiveLength);

  MarkedGraph nb = theta_graph(1, 1, 1);
  nb.edges[2].label = W({1, 1});
  CHECK(code_of([&] { validate_and_normalize(nb); }) == ErrorCode::NotABasis);

  MarkedGraph wr = theta_graph(1, 1, 1);
  wr.rank = 3;
  wr.edges[0].label = Word(3, {1});
  wr.edges[2].label = Word(3, {2});
  CHECK(code_of([&] { validate_and_normalize(wr); }) == ErrorCode::WrongRank);

  MarkedGraph disc;
  disc.rank = 2;
  disc.vertices = {"a", "b"};
  disc.edges = {{"x", "a", "a", 1, W({1})}, {"y", "b", "b", 1, W({2})}, {"z", "a", "a", 1, W({1, 2})}};
  CHECK(code_of([&] { validate_and_normalize(disc); }) == ErrorCode::DisconnectedGraph);
}

TEST_CASE("loop_word examples") {
  auto rose = rose_type(2);
  CHECK(rose->loop_word({1}) == ConjClass(W({1})));
  auto th = theta_type();
  CHECK(th->loop_word({1, -2}) == ConjClass(W({1})));
  CHECK(th->loop_word({1, -3}) == ConjClass(W({1, -2})));
  CHECK(code_of([&] { th->loop_word({1, 2}); }) == ErrorCode::NotClosed);
}

TEST_CASE("tighten examples") {
  auto rose = rose_type(2);
  CHECK(rose->tighten(ConjClass(W({1}))) == EdgePath{1});
  auto th = theta_type();
  auto p = th->tighten(ConjClass(W({1, -2})));
  CHECK(same_cycle(p, {1, -3}));
  auto q = th->tighten(ConjClass(W({1, 2})));
  CHECK(same_cycle(q, {1, -2, 3, -2}));
  CHECK(th->counts(q) == std::vector<int>{1, 2, 1});
  CHECK(code_of([&] { th->tighten(ConjClass(W({}))); }) == ErrorCode::TrivialClass);
}

TEST_CASE("tighten inverts loop_word on every embedded cycle") {
  Rng rng(4);
  std::vector<TypePtr> types{rose_type(2), theta_type(), barbell_type(), rose_type(3)};
  for (int i = 0; i < 10; ++i) types.push_back(random_maximal_type(3, rng));
  for (int i = 0; i < 5; ++i) types.push_back(random_maximal_type(2, rng));
  for (const auto& t : types)
    for (const auto& c : simple_cycles(*t)) CHECK(same_cycle(t->tighten(t->loop_word(c)), c));
}

TEST_CASE("collapse_forest examples") {
  auto th = theta_type();
  auto f = collapse_forest(*th, {1});
  CHECK(f.face->num_edges() == 2);
  CHECK(marking_equivalent(*f.face, *rose_type(2)));
  CHECK(f.edge_map == std::vector<int>{0, -1, 1});

  auto bb = barbell_type();
  CHECK(marking_equivalent(*collapse_forest(*bb, {1}).face, *rose_type(2)));
  CHECK(code_of([&] { collapse_forest(*bb, {0}); }) == ErrorCode::NotAForest);
  // A non-tree edge: the marking is carried by a tree exchange.
  auto g = collapse_forest(*th, {0});
  CHECK(g.face->num_edges() == 2);
  CHECK(!marking_equivalent(*g.face, *rose_type(2)));
}

TEST_CASE("blow_up_vertex examples and round trip") {
  auto rose = rose_type(2);
  auto bb = blow_up_vertex(*rose, 0, {{1, false}, {1, true}});
  CHECK(marking_equivalent(*bb, *barbell_type()));
  auto th = blow_up_vertex(*rose, 0, {{0, true}, {1, true}});
  CHECK(marking_equivalent(*th, *theta_type()));
  for (const auto& t : {bb, th}) {
    auto back = collapse_forest(*t, {static_cast<int>(t->num_edges()) - 1});
    CHECK(marking_equivalent(*back.face, *rose));
  }
  CHECK(code_of([&] { blow_up_vertex(*theta_type(), 0, {{0, false}, {1, false}}); }) == ErrorCode::BadPartition);
  CHECK(code_of([&] { blow_up_vertex(*rose, 0, {{0, false}}); }) == ErrorCode::BadPartition);
}

TEST_CASE("collapse of a blow-up is marking equivalent to the original") {
  Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    auto t = apply_outer_automorphism(*rose_type(3), random_automorphism(3, rng, 4));
    std::vector<HalfEdge> hs;
    for (int e = 0; e < 3; ++e) {
      hs.push_back({e, false});
      hs.push_back({e, true});
    }
    std::shuffle(hs.begin(), hs.end(), rng);
    std::uniform_int_distribution<int> k(2, 4);
    std::vector<HalfEdge> moved(hs.begin(), hs.begin() + k(rng));
    auto up = blow_up_vertex(*t, 0, moved);
    auto down = collapse_forest(*up, {static_cast<int>(up->num_edges()) - 1});
    CHECK(marking_equivalent(*down.face, *t));
  }
}

TEST_CASE("adjacent simplices of the rank-2 rose and theta") {
  auto rose = rose_type(2);
  auto adj = adjacent_simplices(*rose);
  // Three 2+2 partitions of the four half-edges, pairwise inequivalent.
  CHECK(adj.size() == 3);
  int thetas = 0, barbells = 0;
  for (const auto& a : adj) {
    CHECK(a.coface);
    CHECK(a.type->trivalent());
    int loops = 0;
    for (const auto& e : a.type->edges()) loops += e.from == e.to;
    (loops ? barbells : thetas)++;
  }
  CHECK(thetas == 2);
  CHECK(barbells == 1);
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (std::size_t j = i + 1; j < adj.size(); ++j) CHECK(!marking_equivalent(*adj[i].type, *adj[j].type));

  auto th = adjacent_simplices(*theta_type());
  CHECK(th.size() == 3);
  for (const auto& a : th) {
    CHECK(!a.coface);
    CHECK(a.type->num_vertices() == 1);
  }
  CHECK(maximal_cofaces(*theta_type()).empty());
}

TEST_CASE("marking equivalence examples") {
  auto rose = rose_type(2);
  std::vector<EdgeSpec> swapped{{"q", 0, 0, W({2}), false}, {"p", 0, 0, W({1}), false}};
  auto rose2 = std::make_shared<const TopologicalType>(2, std::vector<std::string>{"w"}, swapped);
  CHECK(marking_equivalent(*rose, *rose2));
  std::vector<EdgeSpec> other{{"p", 0, 0, W({1}), false}, {"q", 0, 0, W({1, 2}), false}};
  auto rose3 = std::make_shared<const TopologicalType>(2, std::vector<std::string>{"w"}, other);
  CHECK(!marking_equivalent(*rose, *rose3));
}

TEST_CASE("marking equivalence of points agrees with the metric criterion") {
  Rng rng(8);
  for (int i = 0; i < 60; ++i) {
    int n = i % 3 == 0 ? 3 : 2;
    auto t = random_maximal_type(n, rng);
    auto p = random_point(t, rng);
    // Inner automorphisms never change the point.
    Word g = random_word(n, rng, 4);
    std::vector<Word> inner;
    for (int j = 1; j <= n; ++j) inner.push_back(g * Word(n, {j}) * g.inverse());
    auto q = apply_outer_automorphism(p, inner);
    CHECK(marking_equivalent(p, q));
    CHECK(lambda(p, q) * lambda(q, p) == 1);
    auto r = apply_outer_automorphism(p, random_automorphism(n, rng, 3));
    CHECK(marking_equivalent(p, r) == (lambda(p, r) * lambda(r, p) == 1));
  }
}

TEST_CASE("outer automorphisms act by isometries") {
  Rng rng(10);
  for (int i = 0; i < 40; ++i) {
    int n = i % 4 == 0 ? 3 : 2;
    auto a = random_point(random_maximal_type(n, rng), rng);
    auto b = random_point(random_maximal_type(n, rng), rng);
    auto phi = random_automorphism(n, rng, 4);
    CHECK(lambda(apply_outer_automorphism(a, phi), apply_outer_automorphism(b, phi)) == lambda(a, b));
  }
  auto p = theta_point(1, 1, 1);
  CHECK(marking_equivalent(apply_outer_automorphism(p, {W({1}), W({2})}), p));
  CHECK(code_of([&] { apply_outer_automorphism(p, {W({1, 1}), W({2})}); }) == ErrorCode::NotAnAutomorphism);
}

TEST_CASE("separating edges") {
  CHECK(barbell_type()->separating_edges() == std::vector<int>{1});
  CHECK(theta_type()->separating_edges().empty());
  CHECK(code_of([&] { require_reduced(*barbell_type()); }) == ErrorCode::SeparatingEdge);
}

TEST_CASE("realize collapses zero coordinates") {
  auto th = theta_type();
  auto p = realize(th, {Rational(1, 2), 0, Rational(1, 2)});
  CHECK(p.type->num_edges() == 2);
  CHECK(marking_equivalent(*p.type, *rose_type(2)));
  CHECK(code_of([&] { realize(barbell_type(), {0, Rational(1, 2), Rational(1, 2)}); }) == ErrorCode::NotAForest);
}
