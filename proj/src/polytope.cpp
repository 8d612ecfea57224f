#include "cvn/polytope.hpp"

#include <algorithm>
#include <cstdint>

#include "cvn/error.hpp"
#include "cvn/lp.hpp"

namespace cvn {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Star: return "star";
    case Provenance::StarStar: return "starstar";
    case Provenance::Cross: return "cross";
    case Provenance::Boundary: return "simplex-boundary";
    case Provenance::Other: return "other";
  }
  return "?";
}

RVec HalfSpace::homogenized() const {
  RVec h = coeffs;
  for (auto& c : h) c += offset;
  return h;
}

bool HalfSpace::degenerate() const {
  for (const auto& c : homogenized())
    if (c != 0) return false;
  return true;
}

namespace {

struct Bits {
  std::vector<std::uint64_t> w;
  explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
  void set(std::size_t i) {
    if (i / 64 >= w.size()) w.resize(i / 64 + 1, 0);
    w[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    r.w.resize(std::min(w.size(), o.w.size()));
    for (std::size_t i = 0; i < r.w.size(); ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint64_t ow = i < o.w.size() ? o.w[i] : 0;
      if (w[i] & ~ow) return false;
    }
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }
};

struct Ray {
  RVec v;
  Bits zeros;
};

void normalize_ray(RVec& v) {
  Rational s = sum(v);
  for (auto& x : v) x /= s;
}

// Two extreme rays are adjacent when no third ray is tight on every
// constraint the two share.
bool adjacent(const std::vector<Ray>& rays, std::size_t a, std::size_t b, const Bits& common) {
  for (std::size_t t = 0; t < rays.size(); ++t) {
    if (t == a || t == b) continue;
    if (common.subset_of(rays[t].zeros)) return false;
  }
  return true;
}

}  // namespace

// Vertices via the double description method on the cone over the simplex:
// the cone {x >= 0, h(x) >= 0} is pointed and its extreme rays, scaled to
// sum 1, are the vertices.
Polytope::Polytope(std::size_t ambient, std::vector<HalfSpace> halfspaces)
    : ambient_(ambient), halfspaces_(std::move(halfspaces)) {
  if (ambient_ == 0) throw Error(ErrorCode::DimensionMismatch, "ambient dimension must be positive");
  for (const auto& h : halfspaces_)
    if (h.coeffs.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "half-space has the wrong length");

  std::vector<RVec> rows;
  for (std::size_t e = 0; e < ambient_; ++e) {
    RVec r(ambient_, 0);
    r[e] = 1;
    rows.push_back(r);
  }
  for (const auto& h : halfspaces_)
    if (!h.degenerate()) rows.push_back(h.homogenized());

  std::vector<Ray> rays;
  for (std::size_t e = 0; e < ambient_; ++e) {
    Ray r{RVec(ambient_, 0), Bits(rows.size())};
    r.v[e] = 1;
    for (std::size_t k = 0; k < ambient_; ++k)
      if (k != e) r.zeros.set(k);
    rays.push_back(std::move(r));
  }

  for (std::size_t k = ambient_; k < rows.size() && !rays.empty(); ++k) {
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(rows[k], rays[i].v);
      if (val[i] > 0) pos.push_back(i);
      if (val[i] < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (val[i] == 0) rays[i].zeros.set(k);
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        Bits common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < ambient_) continue;
        if (!adjacent(rays, p, q, common)) continue;
        Ray r{RVec(ambient_), common};
        for (std::size_t j = 0; j < ambient_; ++j) r.v[j] = val[p] * rays[q].v[j] - val[q] * rays[p].v[j];
        normalize_ray(r.v);
        r.zeros.set(k);
        next.push_back(std::move(r));
      }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] < 0) continue;
      if (val[i] == 0) rays[i].zeros.set(k);
      next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }

  std::sort(rays.begin(), rays.end(), [](const Ray& a, const Ray& b) { return a.v < b.v; });
  rays.erase(std::unique(rays.begin(), rays.end(), [](const Ray& a, const Ray& b) { return a.v == b.v; }),
             rays.end());
  for (const auto& r : rays) vertices_.push_back(r.v);
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      Bits common = rays[i].zeros & rays[j].zeros;
      if (adjacent(rays, i, j, common)) edges_.emplace_back(i, j);
    }
  dim_ = affine_dimension(vertices_);
}

std::vector<std::size_t> Polytope::tight(const RVec& x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < halfspaces_.size(); ++i)
    if (halfspaces_[i].eval(x) == 0) out.push_back(i);
  return out;
}

bool Polytope::contains(const RVec& x, Membership mode) const {
  if (x.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "point has the wrong length");
  if (empty() || sum(x) != 1) return false;
  for (const auto& c : x)
    if (c < 0) return false;
  for (const auto& h : halfspaces_)
    if (h.eval(x) < 0) return false;
  if (mode == Membership::Closed) return true;
  auto strict_needed = [&](auto&& f) {
    for (const auto& v : vertices_)
      if (f(v) != 0) return true;
    return false;
  };
  for (std::size_t e = 0; e < ambient_; ++e)
    if (x[e] == 0 && strict_needed([e](const RVec& v) { return v[e]; })) return false;
  for (const auto& h : halfspaces_) {
    if (h.degenerate()) continue;
    if (h.eval(x) == 0 && strict_needed([&h](const RVec& v) { return h.eval(v); })) return false;
  }
  return true;
}

RVec Polytope::barycenter() const {
  if (empty()) throw Error(ErrorCode::Infeasible, "empty polytope");
  RVec b(ambient_, 0);
  for (const auto& v : vertices_)
    for (std::size_t i = 0; i < ambient_; ++i) b[i] += v[i];
  for (auto& c : b) c /= static_cast<long>(vertices_.size());
  return b;
}

bool feasible(const std::vector<HalfSpace>& hs, std::size_t ambient) {
  std::vector<RVec> rows;
  RVec offsets;
  for (const auto& h : hs) {
    if (h.coeffs.size() != ambient) throw Error(ErrorCode::DimensionMismatch, "half-space has the wrong length");
    rows.push_back(h.coeffs);
    offsets.push_back(h.offset);
  }
  return lp_feasible(rows, offsets, ambient);
}

const std::vector<RVec>& vertices(const Polytope& p) {
  if (p.empty()) throw Error(ErrorCode::Infeasible, "empty polytope has no vertices");
  return p.vertices();
}

int dimension(const Polytope& p) { return p.dimension(); }

const std::vector<std::pair<std::size_t, std::size_t>>& skeleton_edges(const Polytope& p) {
  if (p.empty()) throw Error(ErrorCode::Infeasible, "empty polytope has no edges");
  return p.edges();
}

bool membership(const Polytope& p, const RVec& x, Membership mode) { return p.contains(x, mode); }

int affine_dimension(const std::vector<RVec>& points) {
  if (points.empty()) return -1;
  std::vector<RVec> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RVec d(points[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return matrix_rank(std::move(diffs));
}

}  // namespace cvn
