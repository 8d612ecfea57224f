#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cvn {

using Letter = int;

// Letter order x < x^-1 < y < y^-1 < ...; words compare lexicographically by it.
int letter_key(Letter a);
bool letters_less(const std::vector<Letter>& a, const std::vector<Letter>& b);

// Freely reduced word over generators 1..rank; letter -i is the inverse of i.
class Word {
 public:
  Word() = default;
  explicit Word(int rank) : rank_(rank) {}
  // Validates indices and freely reduces.
  Word(int rank, std::span<const Letter> letters);
  Word(int rank, std::initializer_list<Letter> letters)
      : Word(rank, std::span<const Letter>(letters.begin(), letters.size())) {}

  static Word generator(int rank, Letter a) { return Word(rank, {a}); }

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word power(int k) const;
  Word operator*(const Word& other) const;

  bool operator==(const Word& other) const { return letters_ == other.letters_; }
  // Shorter words first, then lexicographic in letter order.
  std::strong_ordering operator<=>(const Word& other) const;

  // "x y^-1" for rank <= 3, "x1 x2^-1" otherwise; "1" for the empty word.
  std::string str() const;

 private:
  int rank_ = 0;
  std::vector<Letter> letters_;
};

Word reduce(std::span<const Letter> letters, int rank);

// Writes w = u c u^-1 with c cyclically reduced; returns c and stores u.
Word cyclic_reduction(const Word& w, Word* conjugator = nullptr);

// Unoriented conjugacy class with its canonical representative.
class ConjClass {
 public:
  ConjClass() = default;
  explicit ConjClass(const Word& w);

  const Word& rep() const { return rep_; }
  int rank() const { return rep_.rank(); }
  bool trivial() const { return rep_.empty(); }
  std::string str() const { return rep_.str(); }

  bool operator==(const ConjClass& o) const { return rep_ == o.rep_; }
  std::strong_ordering operator<=>(const ConjClass& o) const { return rep_ <=> o.rep_; }

 private:
  Word rep_;
};

ConjClass conj_normal_form(const Word& w);

// The images of the standard generators expressed over the letters of `basis`
// (letter i stands for basis[i-1]). Built once by Stallings folding.
class BasisInverse {
 public:
  explicit BasisInverse(std::span<const Word> basis);
  int rank() const { return rank_; }
  const std::vector<Word>& generator_images() const { return images_; }
  Word rewrite(const Word& w) const;

 private:
  int rank_ = 0;
  std::vector<Word> images_;
};

Word rewrite_in_basis(const Word& w, std::span<const Word> basis);
bool is_basis(std::span<const Word> words, int rank);

std::vector<Word> extend_to_basis(const Word& w);

Word apply_endomorphism(const Word& w, std::span<const Word> images);

std::vector<long> abelianize(const Word& w);

// Some g with g * vs[i] * g^-1 == us[i] for all i, if one exists.
std::optional<Word> find_simultaneous_conjugator(std::span<const Word> vs, std::span<const Word> us);

// The r with w == r^k and k >= 1 maximal.
Word primitive_root(const Word& w, int* exponent = nullptr);

}  // namespace cvn
