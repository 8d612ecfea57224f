#include <functional>
#include <map>
#include <set>

#include "cvn/candidates.hpp"
#include "cvn/fixtures.hpp"
#include "cvn/metric.hpp"
#include "doctest.h"

using namespace cvn;

namespace {

Word W(std::initializer_list<Letter> l) { return Word(2, l); }

std::set<ConjClass> words_of(const TopologicalType& t) {
  std::set<ConjClass> s;
  for (const auto& c : enumerate_candidates(t)) s.insert(c.word);
  return s;
}

std::set<ConjClass> classes(std::initializer_list<Word> ws) {
  std::set<ConjClass> s;
  for (const auto& w : ws) s.insert(ConjClass(w));
  return s;
}

// Shape of the image of an immersed cyclic path, decided from edge
// multiplicities and vertex degrees in the image subgraph.
bool candidate_shape(const TopologicalType& t, const EdgePath& path) {
  auto counts = t.counts(path);
  std::map<int, int> deg;
  int edges = 0;
  std::vector<int> doubled;
  for (std::size_t e = 0; e < counts.size(); ++e) {
    if (!counts[e]) continue;
    if (counts[e] > 2) return false;
    ++edges;
    deg[t.edge(e).from]++;
    deg[t.edge(e).to]++;
    if (counts[e] == 2) doubled.push_back(static_cast<int>(e));
  }
  const int verts = static_cast<int>(deg.size());
  const int betti = edges - verts + 1;
  int d3 = 0, d4 = 0, other = 0;
  for (auto [v, d] : deg) {
    if (d == 3) ++d3;
    else if (d == 4) ++d4;
    else if (d != 2) ++other;
  }
  if (other) return false;
  if (betti == 1) return doubled.empty() && d3 == 0 && d4 == 0;
  if (betti != 2) return false;
  if (doubled.empty()) return d4 == 1 && d3 == 0;
  // Barbell: the doubled edges form an arc whose removal leaves two cycles.
  if (d3 != 2 || d4 != 0) return false;
  std::map<int, int> rest;
  for (std::size_t e = 0; e < counts.size(); ++e)
    if (counts[e] == 1) {
      rest[t.edge(e).from]++;
      rest[t.edge(e).to]++;
    }
  for (auto [v, d] : rest)
    if (d != 2) return false;
  // ...and those cycles are disjoint: the single edges split into two components.
  std::map<int, int> comp;
  for (auto [v, d] : rest) comp[v] = v;
  std::function<int(int)> find = [&](int v) { return comp[v] == v ? v : comp[v] = find(comp[v]); };
  for (std::size_t e = 0; e < counts.size(); ++e)
    if (counts[e] == 1) comp[find(t.edge(e).from)] = find(t.edge(e).to);
  std::set<int> roots;
  for (auto [v, d] : rest) roots.insert(find(v));
  return roots.size() == 2;
}

}  // namespace

TEST_CASE("candidate sets of the rank-2 types") {
  CHECK(words_of(*theta_type()) == classes({W({1}), W({2}), W({1, -2})}));
  CHECK(words_of(*barbell_type()) == classes({W({1}), W({2}), W({1, 2}), W({1, -2})}));
  CHECK(words_of(*rose_type(2)) == classes({W({1}), W({2}), W({1, 2}), W({1, -2})}));
}

TEST_CASE("edge_counts examples") {
  auto th = theta_type();
  CHECK(edge_counts(*th, ConjClass(W({1}))) == std::vector<int>{1, 1, 0});
  CHECK(edge_counts(*th, ConjClass(W({1, 2}))) == std::vector<int>{1, 2, 1});
  CHECK(edge_counts(*rose_type(2), ConjClass(W({1, 1}))) == std::vector<int>{2, 0});
}

TEST_CASE("candidate invariants across random types") {
  Rng rng(6);
  for (int i = 0; i < 30; ++i) {
    int n = i % 2 ? 3 : 2;
    auto t = random_maximal_type(n, rng);
    const auto& cands = enumerate_candidates(*t);
    if (n == 2) {
      int loops = 0;
      for (const auto& e : t->edges()) loops += e.from == e.to;
      CHECK(cands.size() == (loops ? 4u : 3u));
    }
    for (const auto& c : cands) {
      CHECK(c.counts == edge_counts(*t, c.word));
      CHECK(candidate_shape(*t, c.path));
      for (int k : {2, 3}) {
        auto ck = edge_counts(*t, ConjClass(c.word.rep().power(k)));
        for (std::size_t e = 0; e < ck.size(); ++e) CHECK(ck[e] == k * c.counts[e]);
      }
    }
  }
}

TEST_CASE("every short word with candidate shape is enumerated") {
  Rng rng(13);
  std::vector<TypePtr> types{theta_type(), barbell_type(), rose_type(2), rose_type(3)};
  for (int i = 0; i < 3; ++i) types.push_back(random_maximal_type(3, rng));
  for (int i = 0; i < 3; ++i) types.push_back(random_maximal_type(2, rng));
  for (const auto& t : types) {
    auto have = words_of(*t);
    int hits = 0;
    for (const auto& c : classes_up_to(t->rank(), 6)) {
      auto path = t->tighten(c);
      if (!candidate_shape(*t, path)) continue;
      // A proper power traverses an embedded loop more than once.
      int k = 1;
      primitive_root(c.rep(), &k);
      if (k != 1) continue;
      ++hits;
      CHECK_MESSAGE(have.count(c), c.str() << " on " << t->key());
    }
    CHECK(hits > 0);
  }
}
