#include "cvn/fixtures.hpp"

#include <map>
#include <mutex>

#include "cvn/error.hpp"

namespace cvn {

TypePtr rose_type(int n) {
  std::vector<EdgeSpec> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({"p" + std::to_string(i), 0, 0, Word(n, {i}), false});
  return std::make_shared<const TopologicalType>(n, std::vector<std::string>{"v"}, edges);
}

TypePtr theta_type() {
  std::vector<EdgeSpec> edges{{"e1", 0, 1, Word(2, {1}), false},
                              {"e2", 0, 1, Word(2), true},
                              {"e3", 0, 1, Word(2, {2}), false}};
  return std::make_shared<const TopologicalType>(2, std::vector<std::string>{"u", "v"}, edges);
}

TypePtr barbell_type() {
  std::vector<EdgeSpec> edges{{"ex", 0, 0, Word(2, {1}), false},
                              {"h", 0, 1, Word(2), true},
                              {"ey", 1, 1, Word(2, {2}), false}};
  return std::make_shared<const TopologicalType>(2, std::vector<std::string>{"u", "v"}, edges);
}

SimplexPoint make_point(const TypePtr& t, const RVec& lengths) { return SimplexPoint::normalized(t, lengths); }

SimplexPoint theta_point(const Rational& l1, const Rational& l2, const Rational& l3) {
  static const TypePtr theta = theta_type();
  return make_point(theta, {l1, l2, l3});
}

Rational random_rational(Rng& rng, long lo, long hi, long den) {
  std::uniform_int_distribution<long> d(lo, hi);
  Rational r(d(rng), den);
  r.canonicalize();
  return r;
}

RVec random_lengths(Rng& rng, std::size_t n) {
  RVec v(n);
  for (auto& x : v) x = random_rational(rng, 1, 1000, 1);
  Rational s = sum(v);
  for (auto& x : v) x /= s;
  return v;
}

std::vector<Word> random_automorphism(int n, Rng& rng, int moves) {
  std::vector<Word> img;
  for (int j = 1; j <= n; ++j) img.push_back(Word(n, {j}));
  std::uniform_int_distribution<int> gen(1, n), kind(0, 2), sign(0, 1);
  for (int m = 0; m < moves; ++m) {
    int i = gen(rng), j = gen(rng);
    int k = n == 1 ? 2 : kind(rng);
    if (k == 2 || i == j) {
      if (sign(rng)) img[i - 1] = img[i - 1].inverse();
      continue;
    }
    Word xj = sign(rng) ? img[j - 1] : img[j - 1].inverse();
    img[i - 1] = k == 0 ? img[i - 1] * xj : xj * img[i - 1];
  }
  return img;
}

Word random_word(int n, Rng& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, n), sign(0, 1);
  std::vector<Letter> l;
  int target = len(rng);
  for (int i = 0; i < target; ++i) l.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return Word(n, l);
}

TypePtr random_maximal_type(int n, Rng& rng, int moves) {
  static std::mutex mu;
  static std::map<int, std::vector<Adjacent>> cache;
  std::vector<Adjacent> ups;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, maximal_cofaces(*rose_type(n))).first;
    ups = it->second;
  }
  std::uniform_int_distribution<std::size_t> pick(0, ups.size() - 1);
  TypePtr base = ups[pick(rng)].type;
  return apply_outer_automorphism(*base, random_automorphism(n, rng, moves));
}

SimplexPoint random_point(const TypePtr& t, Rng& rng) { return SimplexPoint{t, random_lengths(rng, t->num_edges())}; }

DimensionDropConfig dimension_drop_config(const Rational& p, const Rational& eps) {
  if (p <= 0 || p >= 1 || eps <= 0) throw Error(ErrorCode::ParamOutOfRange, "need 0 < p < 1 and eps > 0");
  TypePtr rose = rose_type(2);
  SimplexPoint c = make_point(rose, {p, 1 - p});
  // Half-edges at the rose vertex: petal 0 is x, petal 1 is y.
  SimplexPoint a = blow_up_vertex(c, 0, {{0, false}, {1, true}}, eps);
  SimplexPoint b = blow_up_vertex(c, 0, {{0, false}, {1, false}}, eps);
  return {c, a, b};
}

}  // namespace cvn
