#include <queue>

#include "cvn/error.hpp"
#include "cvn/fixtures.hpp"
#include "cvn/metric.hpp"
#include "doctest.h"

using namespace cvn;

namespace {

Word W(std::initializer_list<Letter> l) { return Word(2, l); }
ConjClass C(std::initializer_list<Letter> l) { return ConjClass(W(l)); }

// Length of the immersed loop, computed from the raw edge data: rewrite the
// word over the non-tree edges, expand through tree paths found by BFS, then
// cancel with a stack.
Rational oracle_length(const SimplexPoint& p, const Word& w) {
  const auto& t = *p.type;
  std::vector<int> nontree;
  std::vector<Word> labels;
  for (std::size_t e = 0; e < t.num_edges(); ++e)
    if (!t.edge(e).in_tree) {
      nontree.push_back(static_cast<int>(e));
      labels.push_back(t.edge(e).label);
    }
  Word over_edges = BasisInverse(labels).rewrite(w);

  std::vector<EdgePath> tp(t.num_vertices());
  std::vector<bool> seen(t.num_vertices(), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (std::size_t e = 0; e < t.num_edges(); ++e) {
      const auto& s = t.edge(e);
      if (!s.in_tree) continue;
      int o = 0, u = -1;
      if (s.from == v && !seen[s.to]) o = static_cast<int>(e) + 1, u = s.to;
      else if (s.to == v && !seen[s.from]) o = -(static_cast<int>(e) + 1), u = s.from;
      if (u < 0) continue;
      seen[u] = true;
      tp[u] = tp[v];
      tp[u].push_back(o);
      q.push(u);
    }
  }

  EdgePath stack;
  auto push = [&](int o) {
    if (!stack.empty() && stack.back() == -o) stack.pop_back();
    else stack.push_back(o);
  };
  for (Letter l : over_edges.letters()) {
    const int e = nontree[std::abs(l) - 1];
    EdgePath loop = tp[t.edge(e).from];
    loop.push_back(e + 1);
    for (auto it = tp[t.edge(e).to].rbegin(); it != tp[t.edge(e).to].rend(); ++it) loop.push_back(-*it);
    if (l < 0) {
      std::reverse(loop.begin(), loop.end());
      for (auto& o : loop) o = -o;
    }
    for (int o : loop) push(o);
  }
  std::size_t i = 0, j = stack.size();
  while (j - i > 1 && stack[i] == -stack[j - 1]) ++i, --j;
  Rational len = 0;
  for (std::size_t k = i; k < j; ++k) len += p.lengths[edge_index(stack[k])];
  return len;
}

Rational oracle_lambda(const SimplexPoint& a, const SimplexPoint& b, int max_len) {
  Rational best = 0;
  for (const auto& c : classes_up_to(a.rank(), max_len)) {
    Rational r = oracle_length(b, c.rep()) / oracle_length(a, c.rep());
    if (r > best) best = r;
  }
  return best;
}

std::size_t longest_candidate(const SimplexPoint& p) {
  std::size_t m = 0;
  for (const auto& c : enumerate_candidates(*p.type)) m = std::max(m, c.word.rep().size());
  return m;
}

}  // namespace

TEST_CASE("conj_length examples") {
  auto p = theta_point(1, 1, 1);
  CHECK(conj_length(p, C({1})) == Rational(2, 3));
  CHECK(conj_length(p, C({1, 2})) == Rational(4, 3));
  CHECK(conj_length(p, ConjClass(W({2, -1, 2, 2, 1, -2}))) == conj_length(p, C({2, 2})));
  CHECK_THROWS_AS(conj_length(p, ConjClass(W({}))), Error);
}

TEST_CASE("conj_length agrees with the raw-edge oracle") {
  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    int n = i % 3 ? 2 : 3;
    auto p = random_point(random_maximal_type(n, rng), rng);
    for (int k = 0; k < 20; ++k) {
      Word w = random_word(n, rng, 9);
      if (cyclic_reduction(w).empty()) continue;
      CHECK(conj_length(p, ConjClass(w)) == oracle_length(p, w));
    }
  }
}

TEST_CASE("stretch_report on the theta triangle") {
  auto a = theta_point(1, 1, 1), b = theta_point(2, 1, 1), c = theta_point(1, Rational(1, 3), 1);
  auto ab = stretch_report(a, b);
  CHECK(ab.lambda == Rational(9, 8));
  CHECK(ab.witnesses == std::vector<ConjClass>{C({1}), C({1, -2})});
  CHECK(ab.per_candidate.size() == 3);
  CHECK(stretch_report(b, c).witnesses == std::vector<ConjClass>{C({2}), C({1, -2})});
  CHECK(stretch_report(c, a).witnesses == std::vector<ConjClass>{C({1}), C({2})});
  // Oracle values for the other two legs.
  CHECK(lambda(b, c) == Rational(8, 7));
  CHECK(lambda(c, a) == Rational(7, 6));
  CHECK(oracle_lambda(b, c, 4) == Rational(8, 7));
  CHECK(oracle_lambda(c, a, 4) == Rational(7, 6));
}

TEST_CASE("distance and witness examples") {
  auto a = theta_point(1, 1, 1), b = theta_point(2, 1, 1);
  auto d = distance(a, a, DistanceMode::Right);
  CHECK(d.lambda == 1);
  CHECK(d.log_value == 0.0);
  CHECK(distance(a, b, DistanceMode::Right).lambda == Rational(9, 8));
  CHECK(distance(a, b, DistanceMode::Left).lambda == lambda(b, a));
  CHECK(distance(a, b, DistanceMode::Symmetric).lambda == lambda(a, b) * lambda(b, a));
  CHECK(distance(a, b, DistanceMode::Symmetric).log_value > 0);
  CHECK(!is_witness(C({2}), a, b));
  for (const auto& w : candidate_witnesses(a, b)) {
    CHECK(is_witness(w, a, b));
    CHECK(is_witness(ConjClass(w.rep().power(2)), a, b));
  }
  CHECK(!is_witness(ConjClass(W({2, 2})), a, b));
  CHECK_THROWS_AS(stretch_report(a, make_point(rose_type(3), {1, 1, 1})), Error);
}

TEST_CASE("classes_up_to counts") {
  CHECK(classes_up_to(2, 1).size() == 2);
  // x, y, x^2, y^2, xy, xy^-1
  CHECK(classes_up_to(2, 2).size() == 6);
}

TEST_CASE("brute force examples") {
  auto a = make_point(rose_type(2), {Rational(1, 2), Rational(1, 2)});
  auto b = make_point(rose_type(2), {Rational(1, 3), Rational(2, 3)});
  auto r1 = brute_force_lambda(a, b, 1);
  CHECK(r1.lambda == Rational(4, 3));
  CHECK(r1.argmax == std::vector<ConjClass>{C({2})});
  Rational prev = 0;
  for (int L = 1; L <= 6; ++L) {
    auto r = brute_force_lambda(theta_point(1, 2, 3), theta_point(3, 1, 1), L);
    CHECK(r.lambda >= prev);
    prev = r.lambda;
  }
}

TEST_CASE("candidate maximum equals the brute-force supremum") {
  Rng rng(31);
  int rank2 = 0, rank3 = 0;
  for (int attempt = 0; attempt < 2000 && (rank2 < 100 || rank3 < 20); ++attempt) {
    const int n = rank2 < 100 ? 2 : 3;
    auto a = random_point(random_maximal_type(n, rng, 1), rng);
    auto b = random_point(random_maximal_type(n, rng, 1), rng);
    std::size_t L = longest_candidate(a);
    if (L > (n == 2 ? 8u : 6u)) continue;
    L = std::max(L, n == 2 ? std::size_t{7} : std::size_t{5});
    const Rational lam = lambda(a, b);
    CHECK(oracle_lambda(a, b, static_cast<int>(L)) == lam);
    CHECK(brute_force_lambda(a, b, static_cast<int>(L)).lambda == lam);
    (n == 2 ? rank2 : rank3)++;
  }
  CHECK(rank2 >= 100);
  CHECK(rank3 >= 20);
}

TEST_CASE("metric axioms on random triples") {
  Rng rng(41);
  for (int i = 0; i < 60; ++i) {
    int n = i % 4 ? 2 : 3;
    auto a = random_point(random_maximal_type(n, rng), rng);
    auto b = random_point(random_maximal_type(n, rng), rng);
    auto c = random_point(random_maximal_type(n, rng), rng);
    CHECK(lambda(a, a) == 1);
    CHECK(lambda(a, c) <= lambda(a, b) * lambda(b, c));
    CHECK(lambda(a, b) * lambda(b, a) >= 1);
    auto rep = stretch_report(a, b);
    CHECK(!rep.witnesses.empty());
    for (const auto& [w, r] : rep.per_candidate) CHECK(r <= rep.lambda);
  }
}
