#include "cvn/geodesics.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "cvn/candidates.hpp"
#include "cvn/error.hpp"
#include "cvn/lp.hpp"

namespace cvn {

namespace {

void require_same_rank(const SimplexPoint& a, const SimplexPoint& b) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::RankMismatch, "points of different rank");
}

bool is_forest(const TopologicalType& t, const std::vector<int>& edges) {
  std::vector<int> root(t.num_vertices());
  for (std::size_t v = 0; v < root.size(); ++v) root[v] = static_cast<int>(v);
  std::function<int(int)> find = [&](int v) { return root[v] == v ? v : root[v] = find(root[v]); };
  for (int e : edges) {
    const auto& spec = t.edges()[e];
    const int a = find(spec.from), b = find(spec.to);
    if (a == b) return false;
    root[a] = b;
  }
  return true;
}

// A closed simplex containing x, with x in its coordinates.
struct Host {
  TypePtr simplex;
  RVec x;
};

std::vector<Host> hosts_of(const SimplexPoint& x) {
  std::vector<Host> out{{x.type, x.lengths}};
  for (const auto& up : maximal_cofaces(*x.type)) {
    RVec lifted(up.type->num_edges(), Rational(0));
    for (std::size_t e = 0; e < lifted.size(); ++e)
      if (up.edge_map[e] >= 0) lifted[e] = x.lengths[up.edge_map[e]];
    out.push_back({up.type, std::move(lifted)});
  }
  return out;
}

// The segment xv lies on a line cut out by envelope rows tight at both ends
// and the normalization. Simplex faces do not count: the out-envelope
// continues through them into the neighbouring simplices.
bool on_line(const std::vector<HalfSpace>& rows, const RVec& x, const RVec& v) {
  const std::size_t n = x.size();
  std::vector<RVec> tight;
  for (const auto& h : rows)
    if (h.provenance != Provenance::Boundary && !h.degenerate() && h.eval(x) == 0 && h.eval(v) == 0) tight.push_back(h.homogenized());
  tight.emplace_back(n, Rational(1));
  return matrix_rank(std::move(tight)) == static_cast<int>(n) - 1;
}

struct Move {
  TypePtr simplex;
  RVec from, to;
  SimplexPoint point;  // the far end, or the midpoint when it lies at infinity
  bool line = false;
  bool unbounded = false;
};

bool move_less(const Move& a, const Move& b) {
  if (a.point.lengths != b.point.lengths) return a.point.lengths < b.point.lengths;
  return a.point.type->key() < b.point.type->key();
}

RVec along(const RVec& x, const RVec& v, const Rational& t) {
  RVec p(x.size());
  for (std::size_t e = 0; e < p.size(); ++e) p[e] = x[e] + t * (v[e] - x[e]);
  return p;
}

using RowsIn = std::function<std::vector<HalfSpace>(const TypePtr&)>;

// The segment is an edge of the out-envelope in every maximal simplex
// containing it, not only in the host where it was found.
bool rigid_move(const TypePtr& host, const RVec& x, const RVec& v, const RowsIn& rows_in) {
  std::vector<int> common;
  for (std::size_t e = 0; e < x.size(); ++e)
    if (x[e] == 0 && v[e] == 0) common.push_back(static_cast<int>(e));
  if (common.empty() && host->trivalent()) return on_line(rows_in(host), x, v);
  TypePtr face = host;
  RVec fx = x, fv = v;
  if (!common.empty()) {
    FaceMap fm = collapse_forest(*host, common);
    face = fm.face;
    fx.assign(face->num_edges(), Rational(0));
    fv.assign(face->num_edges(), Rational(0));
    for (std::size_t e = 0; e < fm.edge_map.size(); ++e)
      if (fm.edge_map[e] >= 0) {
        fx[fm.edge_map[e]] = x[e];
        fv[fm.edge_map[e]] = v[e];
      }
  }
  for (const auto& up : maximal_cofaces(*face)) {
    RVec ux(up.type->num_edges(), Rational(0)), uv(up.type->num_edges(), Rational(0));
    for (std::size_t e = 0; e < ux.size(); ++e)
      if (up.edge_map[e] >= 0) {
        ux[e] = fx[up.edge_map[e]];
        uv[e] = fv[up.edge_map[e]];
      }
    if (!on_line(rows_in(up.type), ux, uv)) return false;
  }
  return true;
}

// Polytope edges leaving x in every host simplex.
std::vector<Move> moves_from(const SimplexPoint& x, const std::function<Polytope(const TypePtr&)>& polytope_in,
                             const RowsIn& rows_in) {
  std::vector<Move> out;
  for (auto& h : hosts_of(x)) {
    Polytope p = polytope_in(h.simplex);
    const auto& vs = p.vertices();
    auto it = std::find(vs.begin(), vs.end(), h.x);
    if (it == vs.end()) continue;
    const std::size_t ix = static_cast<std::size_t>(it - vs.begin());
    for (auto [i, j] : p.edges()) {
      if (i != ix && j != ix) continue;
      const RVec& v = vs[i == ix ? j : i];
      // Vertices collapsing a cycle sit at infinity, outside the space.
      const bool unbounded = !is_forest(*h.simplex, zero_set(v));
      Move m{h.simplex, h.x, v, realize(h.simplex, unbounded ? along(h.x, v, Rational(1, 2)) : v),
             rigid_move(h.simplex, h.x, v, rows_in), unbounded};
      out.push_back(std::move(m));
    }
  }
  return out;
}

bool same_point(const SimplexPoint& p, const SimplexPoint& q) { return lambda(p, q) == 1; }

void fill_segment_witnesses(GeodesicPath& path) {
  path.segment_witnesses.clear();
  for (std::size_t k = 0; k + 1 < path.breakpoints.size(); ++k)
    path.segment_witnesses.push_back(candidate_witnesses(path.breakpoints[k], path.breakpoints[k + 1]));
}

}  // namespace

bool on_geodesic(const SimplexPoint& a, const SimplexPoint& c, const SimplexPoint& b) {
  require_same_rank(a, b);
  require_same_rank(a, c);
  return lambda(a, b) == lambda(a, c) * lambda(c, b);
}

std::vector<ConjClass> check_gluing(const SimplexPoint& a, const SimplexPoint& c, const SimplexPoint& b) {
  require_same_rank(a, b);
  require_same_rank(a, c);
  std::set<ConjClass> pool;
  for (const auto& w : enumerate_candidates(*a.type)) pool.insert(w.word);
  for (const auto& w : enumerate_candidates(*c.type)) pool.insert(w.word);
  std::vector<ConjClass> out;
  for (const auto& g : pool)
    if (is_witness(g, a, c) && is_witness(g, c, b)) out.push_back(g);
  return out;
}

GeodesicPath piecewise_rigid_geodesic(const SimplexPoint& a, const SimplexPoint& b, std::size_t budget) {
  require_same_rank(a, b);
  GeodesicPath path;
  path.breakpoints.push_back(a);
  path.rigid_segments.push_back(0);
  SimplexPoint base = a, x = a;
  std::vector<ConjClass> dir = candidate_witnesses(a, b);
  path.phase_witnesses.push_back(dir);
  std::size_t steps = 0;

  auto start_phase = [&](const SimplexPoint& p) {
    base = p;
    dir = candidate_witnesses(p, b);
    path.rigid_segments.push_back(path.breakpoints.size() - 1);
    path.phase_witnesses.push_back(dir);
  };

  while (!same_point(x, b)) {
    if (++steps > budget) throw Error(ErrorCode::BudgetExceeded, "geodesic walk exceeded its step budget");
    const ConjClass gamma = dir.front();
    auto polytope_in = [&](const TypePtr& delta) { return envelope_slice(base, b, delta, gamma).polytope; };
    auto rows_in = [&](const TypePtr& delta) { return out_envelope(base, dir, *delta).halfspaces(); };
    std::vector<Move> line, other;
    for (auto& m : moves_from(x, polytope_in, rows_in)) {
      if (m.unbounded || m.from == m.to || !on_geodesic(base, x, m.point) || !on_geodesic(base, m.point, b)) continue;
      (m.line ? line : other).push_back(std::move(m));
    }
    const bool forced = line.empty();
    auto& pick_from = forced ? other : line;
    if (pick_from.empty()) {
      if (same_point(x, base)) throw Error(ErrorCode::WalkStuck, "no admissible envelope edge");
      path.notes.push_back("phase ended without a new witness at breakpoint " +
                           std::to_string(path.breakpoints.size() - 1));
      start_phase(x);
      continue;
    }
    std::sort(pick_from.begin(), pick_from.end(), move_less);
    if (pick_from.size() > 1)
      path.notes.push_back(std::to_string(pick_from.size()) + " admissible edges at breakpoint " +
                           std::to_string(path.breakpoints.size() - 1));
    x = pick_from.front().point;
    path.breakpoints.push_back(x);
    if (same_point(x, b)) break;
    // A newly tight starstar hyperplane shows up as a new witness to b.
    bool fresh = false;
    for (const auto& g : candidate_witnesses(x, b))
      if (!is_witness(g, base, b)) fresh = true;
    if (fresh || forced) start_phase(x);
  }
  if (path.rigid_segments.back() != path.breakpoints.size() - 1)
    path.rigid_segments.push_back(path.breakpoints.size() - 1);
  fill_segment_witnesses(path);
  return path;
}

int envelope_dimension(const SimplexPoint& a, const SimplexPoint& b, std::size_t budget) {
  int d = -1;
  for (const auto& s : support(a, b, budget).simplices) d = std::max(d, s.slice.dimension());
  return d;
}

bool is_rigid(const GeodesicPath& path) {
  const auto& p = path.breakpoints;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      for (std::size_t k = j + 1; k < p.size(); ++k)
        if (!on_geodesic(p[i], p[j], p[k]))
          throw Error(ErrorCode::NotAGeodesic, "breakpoints " + std::to_string(i) + ", " + std::to_string(j) + ", " +
                                                   std::to_string(k) + " break multiplicativity");
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (envelope_dimension(p[i], p[j]) > 1) return false;
  return true;
}

GeneralPosition general_position(const SimplexPoint& a, const SimplexPoint& b) {
  require_same_rank(a, b);
  if (!a.type->trivalent() || !b.type->trivalent())
    throw Error(ErrorCode::NotMaximalSimplex, "general position needs points in maximal simplices");
  GeneralPosition r;
  for (const auto& g : candidate_witnesses(a, b)) {
    Polytope p = out_envelope(a, {g}, *b.type);
    if (p.dimension() == static_cast<int>(b.type->num_edges()) - 1 &&
        p.contains(b.lengths, Membership::RelativeInterior)) {
      r.value = true;
      r.gamma = g;
      for (const auto& h : p.halfspaces())
        if (!h.degenerate()) r.strict.push_back(h);
      return r;
    }
  }
  return r;
}

GeneralPosition general_position_in(const SimplexPoint& a, const SimplexPoint& b) {
  require_same_rank(a, b);
  if (!a.type->trivalent() || !b.type->trivalent())
    throw Error(ErrorCode::NotMaximalSimplex, "general position needs points in maximal simplices");
  GeneralPosition r;
  for (const auto& g : candidate_witnesses(a, b)) {
    Polytope p = in_envelope(b, {g}, *a.type);
    if (p.dimension() == static_cast<int>(a.type->num_edges()) - 1 &&
        p.contains(a.lengths, Membership::RelativeInterior)) {
      r.value = true;
      r.gamma = g;
      for (const auto& h : p.halfspaces())
        if (!h.degenerate()) r.strict.push_back(h);
      return r;
    }
  }
  return r;
}

namespace {

Rational sym_lambda(const SimplexPoint& p, const SimplexPoint& q) { return lambda(p, q) * lambda(q, p); }

// Shortest chain from `from` to `to` among candidates of a whose out-envelope
// cells in T(a) meet along a hyperplane.
std::optional<std::vector<ConjClass>> facet_chain(const SimplexPoint& a, const ConjClass& from, const ConjClass& to) {
  std::vector<ConjClass> cands;
  for (const auto& c : enumerate_candidates(*a.type)) cands.push_back(c.word);
  const int wall = static_cast<int>(a.type->num_edges()) - 2;
  std::map<ConjClass, ConjClass> parent;
  std::deque<ConjClass> queue{from};
  parent.emplace(from, from);
  while (!queue.empty()) {
    ConjClass cur = queue.front();
    queue.pop_front();
    if (cur == to) break;
    for (const auto& next : cands) {
      if (parent.count(next)) continue;
      if (out_envelope(a, {cur, next}, *a.type).dimension() != wall) continue;
      parent.emplace(next, cur);
      queue.push_back(next);
    }
  }
  if (!parent.count(to)) return std::nullopt;
  std::vector<ConjClass> chain{to};
  while (!(chain.back() == from)) chain.push_back(parent.at(chain.back()));
  std::reverse(chain.begin(), chain.end());
  return chain;
}

// Points a = p_0, p_1, ..., p_n stepping along walls between consecutive
// chain cells, each within the step bound; nullopt if the walls vanish.
std::optional<std::vector<SimplexPoint>> wall_steps(const SimplexPoint& a, const std::vector<ConjClass>& chain,
                                                    const Rational& t, const Rational& step_bound) {
  std::vector<SimplexPoint> pts;
  SimplexPoint cur = a;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    Polytope wall = out_envelope(cur, {chain[i - 1], chain[i]}, *a.type);
    const RVec* far = nullptr;
    for (const auto& v : wall.vertices())
      if (v != cur.lengths) {
        far = &v;
        break;
      }
    if (!far) return std::nullopt;
    RVec next(cur.lengths.size());
    for (std::size_t e = 0; e < next.size(); ++e) next[e] = cur.lengths[e] + t * ((*far)[e] - cur.lengths[e]);
    for (const auto& l : next)
      if (l <= 0) return std::nullopt;
    SimplexPoint np{a.type, next};
    if (sym_lambda(cur, np) > 1 + step_bound) return std::nullopt;
    pts.push_back(np);
    cur = np;
  }
  return pts;
}

SimplexPoint transport(const SimplexPoint& p, const TypePtr& t) {
  if (p.type == t) return p;
  auto iso = find_isomorphism(*t, *p.type);
  if (!iso) throw Error(ErrorCode::ParamOutOfRange, "waypoints must lie in one simplex");
  RVec len(t->num_edges());
  for (std::size_t e = 0; e < len.size(); ++e) len[e] = p.lengths[edge_index(iso->edge_map[e])];
  return SimplexPoint{t, len};
}

}  // namespace

GeodesicPath local_geodesic_approximation(const std::vector<SimplexPoint>& waypoints, const Rational& eps) {
  if (waypoints.empty()) throw Error(ErrorCode::ParamOutOfRange, "no waypoints");
  if (eps <= 0) throw Error(ErrorCode::ParamOutOfRange, "eps must be positive");
  if (waypoints.front().rank() != 2) throw Error(ErrorCode::Unsupported, "local approximation is implemented in rank 2");
  const TypePtr t = waypoints.front().type;
  if (!t->trivalent()) throw Error(ErrorCode::NotMaximalSimplex, "waypoints must lie in a maximal simplex");
  std::vector<SimplexPoint> w;
  for (const auto& p : waypoints) {
    require_same_rank(p, waypoints.front());
    w.push_back(transport(p, t));
  }
  const std::size_t m = w.size();
  for (std::size_t j = 0; j + 1 < m; ++j)
    if (sym_lambda(w[j], w[j + 1]) > 1 + eps)
      throw Error(ErrorCode::ParamOutOfRange, "waypoints " + std::to_string(j) + " and " + std::to_string(j + 1) +
                                                  " are farther apart than eps");
  const bool closed = m > 2 && w.front().lengths == w.back().lengths;

  // One direction per leg; the last piece of a leg always keeps it as a
  // witness. Picking it from the next leg's witnesses too avoids a detour there.
  const std::size_t legs = m - 1;
  std::vector<std::vector<ConjClass>> cw;
  for (std::size_t j = 0; j < legs; ++j) cw.push_back(candidate_witnesses(w[j], w[j + 1]));
  std::vector<ConjClass> leg_dir;
  for (std::size_t j = 0; j < legs; ++j) {
    leg_dir.push_back(cw[j].front());
    if (j + 1 == legs && !closed) continue;
    for (const auto& g : cw[j])
      if (is_witness(g, w[(j + 1) % legs], w[(j + 1) % legs + 1])) {
        leg_dir.back() = g;
        break;
      }
  }

  GeodesicPath path;
  for (std::size_t j = 0; j < legs; ++j) {
    path.breakpoints.push_back(w[j]);
    path.rigid_segments.push_back(path.breakpoints.size() - 1);
    std::optional<ConjClass> incoming;
    if (j > 0) incoming = leg_dir[j - 1];
    else if (closed) incoming = leg_dir[legs - 1];
    if (!incoming || is_witness(*incoming, w[j], w[j + 1])) continue;
    auto chain = facet_chain(w[j], *incoming, leg_dir[j]);
    if (!chain)
      throw Error(ErrorCode::NoFacetChain,
                  "no chain of adjacent out-envelopes from " + incoming->str() + " to " + leg_dir[j].str());
    const Rational bound = eps / (2 * static_cast<long>(chain->size()));
    Rational step(1, 2);
    std::optional<std::vector<SimplexPoint>> pts;
    for (int tries = 0; tries < 64; ++tries, step /= 2) {
      pts = wall_steps(w[j], *chain, step, bound);
      if (pts && is_witness(leg_dir[j], pts->back(), w[j + 1])) break;
      pts.reset();
    }
    if (!pts)
      throw Error(ErrorCode::NoFacetChain, "could not place the face-jumping detour at waypoint " + std::to_string(j));
    path.notes.push_back("detour of " + std::to_string(pts->size()) + " steps at waypoint " + std::to_string(j));
    path.breakpoints.insert(path.breakpoints.end(), pts->begin(), pts->end());
  }
  path.breakpoints.push_back(w.back());
  path.rigid_segments.push_back(path.breakpoints.size() - 1);

  const auto& p = path.breakpoints;
  for (std::size_t k = 1; k + 1 < p.size(); ++k)
    if (!on_geodesic(p[k - 1], p[k], p[k + 1]))
      throw Error(ErrorCode::NotAGeodesic, "pieces do not glue at breakpoint " + std::to_string(k));
  if (closed && p.size() > 2 && !on_geodesic(p[p.size() - 2], p[0], p[1]))
    throw Error(ErrorCode::NotAGeodesic, "pieces do not glue at the closing point");
  fill_segment_witnesses(path);
  return path;
}

RayAudit ray_dimension_audit(const SimplexPoint& a, const std::vector<ConjClass>& dir, int steps) {
  if (dir.empty()) throw Error(ErrorCode::EmptyDirection, "direction set is empty");
  if (steps < 0) throw Error(ErrorCode::ParamOutOfRange, "steps must be nonnegative");
  if (steps > 0 && a.rank() != 2) throw Error(ErrorCode::Unsupported, "ray walks are implemented in rank 2");
  RayAudit r;
  {
    Polytope o = out_envelope(a, dir, *a.type);
    if (o.empty()) throw Error(ErrorCode::EmptySlice, "out-envelope slice is empty");
    r.initial_dimension = o.dimension();
  }
  r.points.push_back(a);
  SimplexPoint x = a;
  for (int piece = 0; piece < steps;) {
    if (r.points.size() > 64 * static_cast<std::size_t>(steps + 1))
      throw Error(ErrorCode::BudgetExceeded, "ray walk does not cross faces");
    auto polytope_in = [&](const TypePtr& delta) { return out_envelope(x, dir, *delta); };
    auto rows_in = [&](const TypePtr& delta) { return out_envelope(x, dir, *delta).halfspaces(); };
    std::vector<Move> finite, unbounded;
    for (auto& m : moves_from(x, polytope_in, rows_in))
      if (m.line && m.from != m.to && on_geodesic(a, x, m.point)) (m.unbounded ? unbounded : finite).push_back(std::move(m));
    if (finite.empty() && unbounded.empty()) throw Error(ErrorCode::WalkStuck, "the out-envelope has no forward edge");
    if (finite.empty()) {
      // The ray leaves every compact set inside this simplex.
      std::sort(unbounded.begin(), unbounded.end(), move_less);
      const Move& m = unbounded.front();
      r.points.push_back(m.point);
      r.points.push_back(realize(m.simplex, along(m.from, m.to, Rational(3, 4))));
      r.unbounded = true;
      break;
    }
    std::sort(finite.begin(), finite.end(), move_less);
    const Move& m = finite.front();
    r.points.push_back(realize(m.simplex, along(m.from, m.to, Rational(1, 2))));
    x = m.point;
    r.points.push_back(x);
    if (!zero_set(m.to).empty()) {
      ++piece;
      r.crossings.push_back(r.points.size() - 1);
    }
  }

  const int low = 3 * a.rank() - 5;
  std::vector<int> worst_from(r.points.size() + 1, -1);
  for (std::size_t s = 0; s < r.points.size(); ++s)
    for (std::size_t t = s + 1; t < r.points.size(); ++t) {
      int d = envelope_dimension(r.points[s], r.points[t]);
      r.samples.push_back({s, t, d});
    }
  for (std::size_t i = r.points.size(); i-- > 0;) {
    int worst = worst_from[i + 1];
    for (const auto& smp : r.samples)
      if (smp.s == i) worst = std::max(worst, smp.dimension);
    worst_from[i] = worst;
  }
  for (std::size_t i = 0; i < r.points.size(); ++i)
    if (worst_from[i] <= low) {
      r.first_low_index = static_cast<long>(i);
      break;
    }
  return r;
}

}  // namespace cvn
