#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cvn/free_group.hpp"
#include "cvn/rational.hpp"

namespace cvn {

enum class Provenance { Star, StarStar, Cross, Boundary, Other };

const char* provenance_name(Provenance p);

// coeffs . x + offset >= 0 on the simplex {x >= 0, sum x = 1}.
struct HalfSpace {
  RVec coeffs;
  Rational offset = 0;
  Provenance provenance = Provenance::Other;
  std::optional<ConjClass> word;

  Rational eval(const RVec& x) const { return dot(coeffs, x) + offset; }
  // Identically zero on the affine hull of the simplex; stored but inert.
  bool degenerate() const;
  // coeffs + offset * (1,...,1): the same constraint as a linear form.
  RVec homogenized() const;
};

enum class Membership { Closed, RelativeInterior };

class Polytope {
 public:
  Polytope() = default;
  Polytope(std::size_t ambient, std::vector<HalfSpace> halfspaces);

  std::size_t ambient() const { return ambient_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
  bool empty() const { return vertices_.empty(); }
  // Sorted lexicographically.
  const std::vector<RVec>& vertices() const { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  int dimension() const { return dim_; }

  // Indices of half-spaces with value 0 at x.
  std::vector<std::size_t> tight(const RVec& x) const;
  bool contains(const RVec& x, Membership mode) const;
  // Vertex barycenter; requires nonempty.
  RVec barycenter() const;

 private:
  std::size_t ambient_ = 0;
  std::vector<HalfSpace> halfspaces_;
  std::vector<RVec> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  int dim_ = -1;
};

bool feasible(const std::vector<HalfSpace>& hs, std::size_t ambient);
const std::vector<RVec>& vertices(const Polytope& p);  // throws Infeasible when empty
int dimension(const Polytope& p);
const std::vector<std::pair<std::size_t, std::size_t>>& skeleton_edges(const Polytope& p);
bool membership(const Polytope& p, const RVec& x, Membership mode);

int affine_dimension(const std::vector<RVec>& points);

}  // namespace cvn
