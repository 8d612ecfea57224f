#include "cvn/free_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "cvn/error.hpp"

namespace cvn {

namespace {

void check_letters(std::span<const Letter> letters, int rank) {
  for (Letter a : letters)
    if (a == 0 || std::abs(a) > rank)
      throw Error(ErrorCode::IndexOutOfRange,
                  "letter " + std::to_string(a) + " invalid for rank " + std::to_string(rank));
}

void push_reduced(std::vector<Letter>& out, Letter a) {
  if (!out.empty() && out.back() == -a)
    out.pop_back();
  else
    out.push_back(a);
}

}  // namespace

int letter_key(Letter a) { return 2 * std::abs(a) - (a > 0 ? 1 : 0); }

bool letters_less(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](Letter p, Letter q) { return letter_key(p) < letter_key(q); });
}

Word::Word(int rank, std::span<const Letter> letters) : rank_(rank) {
  check_letters(letters, rank);
  letters_.reserve(letters.size());
  for (Letter a : letters) push_reduced(letters_, a);
}

Word reduce(std::span<const Letter> letters, int rank) { return Word(rank, letters); }

Word Word::inverse() const {
  Word r(rank_);
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(-*it);
  return r;
}

Word Word::power(int k) const {
  Word base = k < 0 ? inverse() : *this;
  Word r(rank_);
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

Word Word::operator*(const Word& other) const {
  Word r(std::max(rank_, other.rank_));
  r.letters_ = letters_;
  for (Letter a : other.letters_) push_reduced(r.letters_, a);
  return r;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (letters_.size() != other.letters_.size()) return letters_.size() <=> other.letters_.size();
  if (letters_less(letters_, other.letters_)) return std::strong_ordering::less;
  if (letters_less(other.letters_, letters_)) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  static const char* names[] = {"x", "y", "z"};
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    int g = std::abs(letters_[i]);
    s += rank_ <= 3 ? std::string(names[g - 1]) : "x" + std::to_string(g);
    if (letters_[i] < 0) s += "^-1";
  }
  return s;
}

Word cyclic_reduction(const Word& w, Word* conjugator) {
  const auto& l = w.letters();
  std::size_t i = 0, j = l.size();
  while (j - i >= 2 && l[i] == -l[j - 1]) {
    ++i;
    --j;
  }
  if (conjugator) *conjugator = Word(w.rank(), std::span<const Letter>(l.data(), i));
  return Word(w.rank(), std::span<const Letter>(l.data() + i, j - i));
}

ConjClass::ConjClass(const Word& w) {
  Word c = cyclic_reduction(w);
  const std::size_t n = c.size();
  if (n == 0) {
    rep_ = c;
    return;
  }
  std::vector<Letter> best;
  Word ci = c.inverse();
  std::vector<Letter> buf(n);
  for (const Word& base : {c, ci}) {
    const auto& l = base.letters();
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) buf[k] = l[(r + k) % n];
      if (best.empty() || letters_less(buf, best)) best = buf;
    }
  }
  rep_ = Word(w.rank(), best);
}

ConjClass conj_normal_form(const Word& w) { return ConjClass(w); }

// Stallings folding of the petal graph spelled by the basis words. Every edge
// carries a tag over basis letters; along any closed path at the base vertex
// the product of tags spells that path's element in terms of the basis.
BasisInverse::BasisInverse(std::span<const Word> basis) {
  rank_ = static_cast<int>(basis.size());
  if (rank_ == 0) throw Error(ErrorCode::NotABasis, "empty basis");
  const int n = basis.front().rank();
  if (n != rank_)
    throw Error(ErrorCode::NotABasis,
                std::to_string(rank_) + " words cannot form a basis of a rank " + std::to_string(n) + " group");

  struct FEdge {
    int from, to, letter;
    Word tag;
    bool alive = true;
  };
  std::vector<FEdge> edges;
  int nverts = 1;
  const int base = 0;
  for (int i = 0; i < rank_; ++i) {
    const Word& b = basis[i];
    if (b.rank() != n) throw Error(ErrorCode::RankMismatch, "basis words of different rank");
    if (b.empty()) throw Error(ErrorCode::NotABasis, "trivial word in basis");
    int cur = base;
    for (std::size_t k = 0; k < b.size(); ++k) {
      int next = (k + 1 == b.size()) ? base : nverts++;
      Letter a = b[k];
      Word tag(rank_);
      if (k == 0) tag = Word(rank_, {a > 0 ? i + 1 : -(i + 1)});
      if (a > 0)
        edges.push_back({cur, next, a, tag});
      else
        edges.push_back({next, cur, -a, tag});
      cur = next;
    }
  }

  struct Half {
    int edge, letter, end;
    Word tag;
  };
  auto halves_at = [&](int v) {
    std::vector<Half> hs;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      const auto& ed = edges[e];
      if (!ed.alive) continue;
      if (ed.from == v) hs.push_back({e, ed.letter, ed.to, ed.tag});
      if (ed.to == v) hs.push_back({e, -ed.letter, ed.from, ed.tag.inverse()});
    }
    return hs;
  };
  auto gauge = [&](int u, const Word& g) {
    Word gi = g.inverse();
    for (auto& ed : edges) {
      if (!ed.alive) continue;
      if (ed.to == u) ed.tag = ed.tag * g;
      if (ed.from == u) ed.tag = gi * ed.tag;
    }
  };
  auto merge = [&](int u, int into) {
    for (auto& ed : edges) {
      if (ed.from == u) ed.from = into;
      if (ed.to == u) ed.to = into;
    }
  };

  bool folded = true;
  while (folded) {
    folded = false;
    for (int v = 0; v < nverts && !folded; ++v) {
      auto hs = halves_at(v);
      std::map<int, std::size_t> by_letter;
      for (std::size_t i = 0; i < hs.size() && !folded; ++i) {
        auto [it, fresh] = by_letter.emplace(hs[i].letter, i);
        if (fresh) continue;
        const Half& h1 = hs[it->second];
        const Half& h2 = hs[i];
        if (h1.end == h2.end) {
          if (h1.tag != h2.tag) throw Error(ErrorCode::NotABasis, "words satisfy a relation");
          edges[h2.edge].alive = false;
        } else if (h2.end != base) {
          gauge(h2.end, h2.tag.inverse() * h1.tag);
          merge(h2.end, h1.end);
          edges[h2.edge].alive = false;
        } else {
          gauge(h1.end, h1.tag.inverse() * h2.tag);
          merge(h1.end, h2.end);
          edges[h1.edge].alive = false;
        }
        folded = true;
      }
    }
  }

  images_.assign(n, Word(rank_));
  std::vector<bool> seen(n + 1, false);
  int loops = 0;
  for (const auto& ed : edges) {
    if (!ed.alive) continue;
    if (ed.from != base || ed.to != base || seen[ed.letter])
      throw Error(ErrorCode::NotABasis, "words do not generate the free group");
    seen[ed.letter] = true;
    images_[ed.letter - 1] = ed.tag;
    ++loops;
  }
  if (loops != n) throw Error(ErrorCode::NotABasis, "words do not generate the free group");
}

Word BasisInverse::rewrite(const Word& w) const {
  Word r(rank_);
  for (Letter a : w.letters()) {
    if (std::abs(a) > static_cast<int>(images_.size()))
      throw Error(ErrorCode::IndexOutOfRange, "letter exceeds basis rank");
    r = r * (a > 0 ? images_[a - 1] : images_[-a - 1].inverse());
  }
  return r;
}

Word rewrite_in_basis(const Word& w, std::span<const Word> basis) { return BasisInverse(basis).rewrite(w); }

bool is_basis(std::span<const Word> words, int rank) {
  if (static_cast<int>(words.size()) != rank) return false;
  try {
    BasisInverse inv(words);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotABasis) return false;
    throw;
  }
}

Word apply_endomorphism(const Word& w, std::span<const Word> images) {
  if (static_cast<int>(images.size()) < w.rank())
    throw Error(ErrorCode::IndexOutOfRange, "not enough images for the word's rank");
  Word r(images.empty() ? 0 : images.front().rank());
  for (Letter a : w.letters()) r = r * (a > 0 ? images[a - 1] : images[-a - 1].inverse());
  return r;
}

std::vector<long> abelianize(const Word& w) {
  std::vector<long> v(w.rank(), 0);
  for (Letter a : w.letters()) v[std::abs(a) - 1] += a > 0 ? 1 : -1;
  return v;
}

namespace {

// All Whitehead automorphisms that multiply generators by a fixed letter on
// either side; permutations and inversions never shorten a cyclic word.
std::vector<std::vector<Word>> whitehead_moves(int n) {
  std::vector<std::vector<Word>> moves;
  for (int m = 1; m <= n; ++m) {
    for (int sign : {1, -1}) {
      Letter a = sign * m;
      int others = n - 1;
      int combos = 1;
      for (int i = 0; i < others; ++i) combos *= 4;
      for (int code = 1; code < combos; ++code) {
        std::vector<Word> images;
        int c = code;
        for (int j = 1; j <= n; ++j) {
          if (j == m) {
            images.push_back(Word(n, {j}));
            continue;
          }
          int choice = c % 4;
          c /= 4;
          switch (choice) {
            case 0: images.push_back(Word(n, {j})); break;
            case 1: images.push_back(Word(n, {j, a})); break;
            case 2: images.push_back(Word(n, {-a, j})); break;
            default: images.push_back(Word(n, {-a, j, a})); break;
          }
        }
        moves.push_back(std::move(images));
      }
    }
  }
  return moves;
}

}  // namespace

std::vector<Word> extend_to_basis(const Word& w) {
  const int n = w.rank();
  if (n > 3) throw Error(ErrorCode::Unsupported, "primitivity search is limited to rank <= 3");
  if (w.empty()) throw Error(ErrorCode::NotPrimitive, "trivial word");

  // Cheap first: replace one standard generator by w.
  for (int drop = 1; drop <= n; ++drop) {
    std::vector<Word> cand{w};
    for (int j = 1; j <= n; ++j)
      if (j != drop) cand.push_back(Word(n, {j}));
    if (is_basis(cand, n)) return cand;
  }

  Word c = cyclic_reduction(w);
  std::vector<Word> phi;
  for (int j = 1; j <= n; ++j) phi.push_back(Word(n, {j}));
  const auto moves = whitehead_moves(n);
  while (c.size() > 1) {
    bool progressed = false;
    for (const auto& tau : moves) {
      Word next = cyclic_reduction(apply_endomorphism(c, tau));
      if (next.size() < c.size()) {
        c = next;
        for (auto& img : phi) img = apply_endomorphism(img, tau);
        progressed = true;
        break;
      }
    }
    if (!progressed) throw Error(ErrorCode::NotPrimitive, w.str() + " is not primitive");
  }
  if (c.empty()) throw Error(ErrorCode::NotPrimitive, w.str() + " is not primitive");

  // phi(w) is conjugate to x_k^s; pull the standard basis back through phi.
  const Letter k = std::abs(c[0]);
  const int s = c[0] > 0 ? 1 : -1;
  std::vector<Word> psi = BasisInverse(phi).generator_images();
  for (auto& p : psi) p = Word(n, p.letters());
  Word target = psi[k - 1].power(s);
  Word single[] = {target};
  Word goal[] = {w};
  auto g = find_simultaneous_conjugator(single, goal);
  if (!g) throw Error(ErrorCode::NotPrimitive, "conjugator not found for " + w.str());
  Word gi = g->inverse();
  std::vector<Word> out{w};
  for (int j = 1; j <= n; ++j)
    if (j != k) out.push_back(*g * psi[j - 1] * gi);
  if (!is_basis(out, n)) throw Error(ErrorCode::NotPrimitive, "basis verification failed for " + w.str());
  return out;
}

Word primitive_root(const Word& w, int* exponent) {
  Word u;
  Word c = cyclic_reduction(w, &u);
  const std::size_t n = c.size();
  if (n == 0) {
    if (exponent) *exponent = 1;
    return w;
  }
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = c[i] == c[i - d];
    if (periodic) {
      if (exponent) *exponent = static_cast<int>(n / d);
      Word root(w.rank(), std::span<const Letter>(c.letters().data(), d));
      return u * root * u.inverse();
    }
  }
  return w;
}

namespace {

// g with g v g^-1 == u for one pair.
std::optional<Word> conjugator_pair(const Word& v, const Word& u) {
  Word p, q;
  Word c = cyclic_reduction(v, &p);
  Word d = cyclic_reduction(u, &q);
  if (c.size() != d.size()) return std::nullopt;
  const std::size_t n = c.size();
  if (n == 0) return q * p.inverse();
  for (std::size_t r = 0; r < n; ++r) {
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) ok = c[(r + k) % n] == d[k];
    if (!ok) continue;
    // d = s^-1 c s with s the first r letters of c.
    Word s(c.rank(), std::span<const Letter>(c.letters().data(), r));
    return q * s.inverse() * p.inverse();
  }
  return std::nullopt;
}

}  // namespace

std::optional<Word> find_simultaneous_conjugator(std::span<const Word> vs, std::span<const Word> us) {
  if (vs.size() != us.size()) return std::nullopt;
  std::size_t first = vs.size();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].empty() != us[i].empty()) return std::nullopt;
    if (!vs[i].empty() && first == vs.size()) first = i;
  }
  int rank = 0;
  for (const auto& v : vs) rank = std::max(rank, v.rank());
  if (first == vs.size()) return Word(rank);
  auto g0 = conjugator_pair(vs[first], us[first]);
  if (!g0) return std::nullopt;
  auto works = [&](const Word& g) {
    Word gi = g.inverse();
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (g * vs[i] * gi != us[i]) return false;
    return true;
  };
  if (works(*g0)) return g0;
  // Other solutions differ by the centralizer of vs[first], generated by its root.
  Word root = primitive_root(vs[first]);
  long bound = 2;
  for (std::size_t i = 0; i < vs.size(); ++i) bound += vs[i].size() + us[i].size();
  Word up = root, down = root.inverse();
  Word plus = *g0, minus = *g0;
  for (long k = 1; k <= bound; ++k) {
    plus = plus * up;
    minus = minus * down;
    if (works(plus)) return plus;
    if (works(minus)) return minus;
  }
  return std::nullopt;
}

}  // namespace cvn
