#pragma once

#include <random>
#include <vector>

#include "cvn/marked_graph.hpp"

namespace cvn {

// Standard rank-2 and rank-n marked graphs used by the CLI scenarios and tests.
TypePtr rose_type(int n);
// Vertices u, v; e1: u->v labelled x, e2: u->v tree, e3: u->v labelled y.
TypePtr theta_type();
// Loop x at u, handle u->v in the tree, loop y at v.
TypePtr barbell_type();

SimplexPoint make_point(const TypePtr& t, const RVec& lengths);  // normalizes
SimplexPoint theta_point(const Rational& l1, const Rational& l2, const Rational& l3);

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, long lo, long hi, long den);
RVec random_lengths(Rng& rng, std::size_t n);
// Product of `moves` random elementary Nielsen automorphisms.
std::vector<Word> random_automorphism(int n, Rng& rng, int moves);
Word random_word(int n, Rng& rng, int max_len);
// A random trivalent marked type of rank n.
TypePtr random_maximal_type(int n, Rng& rng, int moves = 3);
SimplexPoint random_point(const TypePtr& t, Rng& rng);

// Rose with petals x, y of lengths p, 1 - p, relaxed at its vertex in the two
// ways that keep the petals embedded: `a` has xy embedded, `b` has x y^-1.
struct DimensionDropConfig {
  SimplexPoint rose;
  SimplexPoint a;
  SimplexPoint b;
};
DimensionDropConfig dimension_drop_config(const Rational& p, const Rational& eps);

}  // namespace cvn
