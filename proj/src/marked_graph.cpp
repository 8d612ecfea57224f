#include "cvn/marked_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "cvn/candidates.hpp"
#include "cvn/error.hpp"

namespace cvn {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent[a] = b;
    return true;
  }
};

bool connected(std::size_t nv, const std::vector<EdgeSpec>& edges, int skip = -1) {
  if (nv == 0) return false;
  UnionFind uf(nv);
  std::size_t comps = nv;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (static_cast<int>(e) != skip && uf.unite(edges[e].from, edges[e].to)) --comps;
  return comps == 1;
}

std::string fresh_id(const std::vector<std::string>& taken, const std::string& prefix) {
  std::set<std::string> used(taken.begin(), taken.end());
  for (int k = static_cast<int>(taken.size());; ++k) {
    std::string id = prefix + std::to_string(k);
    if (!used.count(id)) return id;
  }
}

}  // namespace

EdgePath reduce_path(const EdgePath& path, bool cyclic) {
  EdgePath out;
  out.reserve(path.size());
  for (OrientedEdge o : path) {
    if (!out.empty() && out.back() == -o)
      out.pop_back();
    else
      out.push_back(o);
  }
  if (cyclic) {
    std::size_t i = 0, j = out.size();
    while (j - i >= 2 && out[i] == -out[j - 1]) {
      ++i;
      --j;
    }
    out = EdgePath(out.begin() + i, out.begin() + j);
  }
  return out;
}

EdgePath invert_path(const EdgePath& path) {
  EdgePath r(path.rbegin(), path.rend());
  for (auto& o : r) o = -o;
  return r;
}

TopologicalType::TopologicalType(int rank, std::vector<std::string> vertex_ids, std::vector<EdgeSpec> edges)
    : rank_(rank), vertex_ids_(std::move(vertex_ids)), edges_(std::move(edges)) {
  const std::size_t nv = vertex_ids_.size();
  if (rank_ < 1) throw Error(ErrorCode::WrongRank, "rank must be positive");
  if (nv == 0) throw Error(ErrorCode::DisconnectedGraph, "graph has no vertices");
  valence_.assign(nv, 0);
  for (const auto& e : edges_) {
    if (e.from < 0 || e.to < 0 || e.from >= static_cast<int>(nv) || e.to >= static_cast<int>(nv))
      throw Error(ErrorCode::IndexOutOfRange, "edge " + e.id + " has an unknown endpoint");
    if (e.in_tree && !e.label.empty())
      throw Error(ErrorCode::NotABasis, "tree edge " + e.id + " carries a nontrivial label");
    if (!e.in_tree && e.label.rank() != rank_)
      throw Error(ErrorCode::RankMismatch, "label of edge " + e.id + " has the wrong rank");
    ++valence_[e.from];
    ++valence_[e.to];
  }
  if (!connected(nv, edges_)) throw Error(ErrorCode::DisconnectedGraph, "graph is not connected");
  for (std::size_t v = 0; v < nv; ++v)
    if (valence_[v] < 3)
      throw Error(ErrorCode::BadValency, "vertex " + vertex_ids_[v] + " has valency " + std::to_string(valence_[v]));
  if (static_cast<long>(edges_.size()) - static_cast<long>(nv) + 1 != rank_)
    throw Error(ErrorCode::WrongRank, "first Betti number differs from rank " + std::to_string(rank_));

  UnionFind uf(nv);
  std::size_t tree_edges = 0;
  for (const auto& e : edges_) {
    if (!e.in_tree) continue;
    ++tree_edges;
    if (!uf.unite(e.from, e.to)) throw Error(ErrorCode::NotAForest, "tree contains a cycle at edge " + e.id);
  }
  if (tree_edges + 1 != nv) throw Error(ErrorCode::NotAForest, "tree does not span the graph");

  // Tree paths from the base vertex.
  tree_paths_.assign(nv, {});
  std::vector<bool> seen(nv, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (!edges_[e].in_tree) continue;
      const auto& ed = edges_[e];
      int w = -1;
      OrientedEdge o = 0;
      if (ed.from == v && !seen[ed.to]) {
        w = ed.to;
        o = orient(e, true);
      } else if (ed.to == v && !seen[ed.from]) {
        w = ed.from;
        o = orient(e, false);
      }
      if (w < 0) continue;
      seen[w] = true;
      tree_paths_[w] = tree_paths_[v];
      tree_paths_[w].push_back(o);
      q.push(w);
    }
  }

  std::vector<int> nontree;
  std::vector<Word> labels;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (!edges_[e].in_tree) {
      nontree.push_back(static_cast<int>(e));
      labels.push_back(edges_[e].label);
    }
  BasisInverse inv(labels);
  std::vector<EdgePath> loops;
  for (int e : nontree) {
    EdgePath p = tree_paths_[edges_[e].from];
    p.push_back(orient(e, true));
    auto back = invert_path(tree_paths_[edges_[e].to]);
    p.insert(p.end(), back.begin(), back.end());
    loops.push_back(reduce_path(p, false));
  }
  for (const Word& img : inv.generator_images()) {
    EdgePath p;
    for (Letter a : img.letters()) {
      const EdgePath& l = loops[std::abs(a) - 1];
      if (a > 0)
        p.insert(p.end(), l.begin(), l.end());
      else {
        auto li = invert_path(l);
        p.insert(p.end(), li.begin(), li.end());
      }
    }
    generator_paths_.push_back(reduce_path(p, false));
  }
  cache_ = std::make_shared<detail::CandidateCache>();
}

bool TopologicalType::trivalent() const {
  return std::all_of(valence_.begin(), valence_.end(), [](int v) { return v == 3; });
}

Word TopologicalType::label_along(OrientedEdge o) const {
  const auto& e = edges_[edge_index(o)];
  if (e.in_tree) return Word(rank_);
  return o > 0 ? e.label : e.label.inverse();
}

std::vector<OrientedEdge> TopologicalType::half_edges_at(int v) const {
  std::vector<OrientedEdge> out;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].from == v) out.push_back(orient(e, true));
    if (edges_[e].to == v) out.push_back(orient(e, false));
  }
  return out;
}

EdgePath TopologicalType::tighten_word(const Word& w) const {
  EdgePath p;
  for (Letter a : w.letters()) {
    const EdgePath& g = generator_paths_[std::abs(a) - 1];
    if (a > 0) {
      p.insert(p.end(), g.begin(), g.end());
    } else {
      for (auto it = g.rbegin(); it != g.rend(); ++it) p.push_back(-*it);
    }
  }
  return reduce_path(p, true);
}

EdgePath TopologicalType::tighten(const ConjClass& gamma) const {
  if (gamma.trivial()) throw Error(ErrorCode::TrivialClass, "cannot tighten the trivial class");
  if (gamma.rank() != rank_) throw Error(ErrorCode::RankMismatch, "class and graph have different ranks");
  return tighten_word(gamma.rep());
}

Word TopologicalType::path_word(const EdgePath& path) const {
  Word w(rank_);
  for (OrientedEdge o : path) w = w * label_along(o);
  return w;
}

ConjClass TopologicalType::loop_word(const EdgePath& cycle) const {
  if (cycle.empty()) throw Error(ErrorCode::NotClosed, "empty path");
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (edge_index(cycle[i]) >= static_cast<int>(edges_.size()))
      throw Error(ErrorCode::IndexOutOfRange, "unknown edge in path");
  }
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (head(cycle[i]) != tail(cycle[(i + 1) % cycle.size()]))
      throw Error(ErrorCode::NotClosed, "path is not a closed edge path");
  return ConjClass(path_word(cycle));
}

std::vector<int> TopologicalType::counts(const EdgePath& path) const {
  std::vector<int> c(edges_.size(), 0);
  for (OrientedEdge o : path) ++c[edge_index(o)];
  return c;
}

std::vector<int> TopologicalType::separating_edges() const {
  std::vector<int> out;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].from != edges_[e].to && !connected(vertex_ids_.size(), edges_, static_cast<int>(e)))
      out.push_back(static_cast<int>(e));
  return out;
}

std::string TopologicalType::key() const {
  std::ostringstream os;
  os << rank_ << ';' << vertex_ids_.size();
  for (const auto& e : edges_) {
    os << ';' << e.from << '>' << e.to << (e.in_tree ? "t" : ":");
    for (Letter a : e.label.letters()) os << a << ',';
  }
  return os.str();
}

SimplexPoint SimplexPoint::normalized(TypePtr type, RVec lengths, Rational* scale) {
  if (lengths.size() != type->num_edges())
    throw Error(ErrorCode::DimensionMismatch, "length vector does not match the edge count");
  for (std::size_t e = 0; e < lengths.size(); ++e)
    if (lengths[e] <= 0)
      throw Error(ErrorCode::NonpositiveLength, "edge " + type->edge(e).id + " has nonpositive length");
  Rational total = sum(lengths);
  Rational s = 1 / total;
  for (auto& l : lengths) l *= s;
  if (scale) *scale = s;
  return SimplexPoint{std::move(type), std::move(lengths)};
}

SimplexPoint validate_and_normalize(const MarkedGraph& g, Rational* scale) {
  std::map<std::string, int> vindex;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    if (!vindex.emplace(g.vertices[i], static_cast<int>(i)).second)
      throw Error(ErrorCode::ParseError, "duplicate vertex id " + g.vertices[i]);
  std::set<std::string> tree(g.tree.begin(), g.tree.end());
  std::set<std::string> ids;
  std::vector<EdgeSpec> edges;
  RVec lengths;
  for (const auto& e : g.edges) {
    if (!ids.insert(e.id).second) throw Error(ErrorCode::ParseError, "duplicate edge id " + e.id);
    auto f = vindex.find(e.from), t = vindex.find(e.to);
    if (f == vindex.end() || t == vindex.end())
      throw Error(ErrorCode::ParseError, "edge " + e.id + " references an unknown vertex");
    if (e.length <= 0) throw Error(ErrorCode::NonpositiveLength, "edge " + e.id + " has nonpositive length");
    bool in_tree = tree.count(e.id) > 0;
    Word label = in_tree && e.label.empty() ? Word(g.rank) : e.label;
    if (label.rank() != g.rank) label = Word(g.rank, label.letters());
    edges.push_back({e.id, f->second, t->second, label, in_tree});
    lengths.push_back(e.length);
  }
  for (const auto& id : g.tree)
    if (!ids.count(id)) throw Error(ErrorCode::ParseError, "tree references unknown edge " + id);
  auto type = std::make_shared<const TopologicalType>(g.rank, g.vertices, std::move(edges));
  return SimplexPoint::normalized(type, std::move(lengths), scale);
}

MarkedGraph to_marked_graph(const SimplexPoint& p) {
  MarkedGraph g;
  const auto& t = *p.type;
  g.rank = t.rank();
  g.vertices = t.vertex_ids();
  for (std::size_t e = 0; e < t.num_edges(); ++e) {
    const auto& ed = t.edge(e);
    g.edges.push_back({ed.id, t.vertex_ids()[ed.from], t.vertex_ids()[ed.to], p.lengths[e], ed.label});
    if (ed.in_tree) g.tree.push_back(ed.id);
  }
  return g;
}

void require_reduced(const TopologicalType& t) {
  auto sep = t.separating_edges();
  if (!sep.empty()) throw Error(ErrorCode::SeparatingEdge, "separating edge " + t.edge(sep.front()).id);
}

FaceMap collapse_forest(const TopologicalType& t, const std::vector<int>& forest) {
  const std::size_t nv = t.num_vertices(), ne = t.num_edges();
  std::vector<bool> in_forest(ne, false);
  UnionFind uf(nv);
  for (int e : forest) {
    if (e < 0 || e >= static_cast<int>(ne)) throw Error(ErrorCode::IndexOutOfRange, "forest edge out of range");
    if (in_forest[e]) continue;
    in_forest[e] = true;
    const auto& ed = t.edge(e);
    if (ed.from == ed.to) throw Error(ErrorCode::NotAForest, "cannot collapse loop edge " + ed.id);
    if (!uf.unite(ed.from, ed.to)) throw Error(ErrorCode::NotAForest, "forest contains a cycle");
  }

  // Spanning tree containing the forest: forest, then old tree, then the rest.
  std::vector<bool> in_new_tree(ne, false);
  UnionFind span(nv);
  for (int pass = 0; pass < 3; ++pass)
    for (std::size_t e = 0; e < ne; ++e) {
      bool take = pass == 0 ? static_cast<bool>(in_forest[e])
                            : (pass == 1 ? t.edge(e).in_tree : true);
      if (take && !in_new_tree[e] && span.unite(t.edge(e).from, t.edge(e).to)) in_new_tree[e] = true;
    }

  // Gauge so that the new tree edges read trivially; base point fixed.
  std::vector<std::optional<Word>> g(nv);
  g[0] = Word(t.rank());
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t e = 0; e < ne; ++e) {
      if (!in_new_tree[e]) continue;
      const auto& ed = t.edge(e);
      Word l = t.label_along(orient(e, true));
      if (g[ed.from] && !g[ed.to]) {
        g[ed.to] = *g[ed.from] * l;
        grew = true;
      } else if (g[ed.to] && !g[ed.from]) {
        g[ed.from] = *g[ed.to] * l.inverse();
        grew = true;
      }
    }
  }

  std::vector<int> rep(nv);
  for (std::size_t v = 0; v < nv; ++v) rep[v] = uf.find(static_cast<int>(v));
  std::map<int, int> new_index;
  std::vector<std::string> ids;
  for (std::size_t v = 0; v < nv; ++v)
    if (rep[v] == static_cast<int>(v)) {
      new_index[static_cast<int>(v)] = static_cast<int>(ids.size());
      ids.push_back(t.vertex_ids()[v]);
    }

  FaceMap out;
  out.edge_map.assign(ne, -1);
  std::vector<EdgeSpec> edges;
  for (std::size_t e = 0; e < ne; ++e) {
    if (in_forest[e]) continue;
    const auto& ed = t.edge(e);
    EdgeSpec ns;
    ns.id = ed.id;
    ns.from = new_index[rep[ed.from]];
    ns.to = new_index[rep[ed.to]];
    ns.in_tree = in_new_tree[e];
    ns.label = ns.in_tree ? Word(t.rank()) : *g[ed.from] * t.label_along(orient(e, true)) * g[ed.to]->inverse();
    out.edge_map[e] = static_cast<int>(edges.size());
    edges.push_back(std::move(ns));
  }
  out.face = std::make_shared<const TopologicalType>(t.rank(), std::move(ids), std::move(edges));
  return out;
}

SimplexPoint collapse_forest(const SimplexPoint& p, const std::vector<int>& forest) {
  FaceMap fm = collapse_forest(*p.type, forest);
  RVec lengths(fm.face->num_edges());
  for (std::size_t e = 0; e < fm.edge_map.size(); ++e)
    if (fm.edge_map[e] >= 0) lengths[fm.edge_map[e]] = p.lengths[e];
  return SimplexPoint::normalized(fm.face, std::move(lengths));
}

TypePtr blow_up_vertex(const TopologicalType& t, int v, const std::vector<HalfEdge>& moved) {
  if (v < 0 || v >= static_cast<int>(t.num_vertices())) throw Error(ErrorCode::IndexOutOfRange, "no such vertex");
  const int val = t.valences()[v];
  if (val < 4) throw Error(ErrorCode::BadPartition, "vertex " + t.vertex_ids()[v] + " has valency below 4");
  std::set<HalfEdge> seen;
  for (const auto& h : moved) {
    if (h.edge < 0 || h.edge >= static_cast<int>(t.num_edges()))
      throw Error(ErrorCode::BadPartition, "half-edge references an unknown edge");
    const auto& ed = t.edge(h.edge);
    if ((h.head ? ed.to : ed.from) != v) throw Error(ErrorCode::BadPartition, "half-edge is not at the vertex");
    if (!seen.insert(h).second) throw Error(ErrorCode::BadPartition, "repeated half-edge");
  }
  if (moved.size() < 2 || val - static_cast<int>(moved.size()) < 2)
    throw Error(ErrorCode::BadPartition, "both sides of the partition need at least two half-edges");
  std::vector<std::string> ids = t.vertex_ids();
  const int nv = static_cast<int>(ids.size());
  ids.push_back(fresh_id(ids, "v"));
  std::vector<EdgeSpec> edges = t.edges();
  for (const auto& h : moved) (h.head ? edges[h.edge].to : edges[h.edge].from) = nv;
  std::vector<std::string> eids;
  for (const auto& e : edges) eids.push_back(e.id);
  edges.push_back({fresh_id(eids, "e"), v, nv, Word(t.rank()), true});
  return std::make_shared<const TopologicalType>(t.rank(), std::move(ids), std::move(edges));
}

SimplexPoint blow_up_vertex(const SimplexPoint& p, int v, const std::vector<HalfEdge>& moved, const Rational& length) {
  if (length <= 0) throw Error(ErrorCode::NonpositiveLength, "new edge needs positive length");
  TypePtr t = blow_up_vertex(*p.type, v, moved);
  RVec lengths = p.lengths;
  lengths.push_back(length);
  return SimplexPoint::normalized(t, std::move(lengths));
}

std::optional<Isomorphism> find_isomorphism(const TopologicalType& a, const TopologicalType& b,
                                            const std::function<bool(const Isomorphism&)>& accept) {
  const std::size_t ne = a.num_edges(), nv = a.num_vertices();
  if (a.rank() != b.rank() || ne != b.num_edges() || nv != b.num_vertices()) return std::nullopt;
  {
    auto va = a.valences(), vb = b.valences();
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    if (va != vb) return std::nullopt;
    auto loops = [](const TopologicalType& t) {
      int c = 0;
      for (const auto& e : t.edges()) c += e.from == e.to;
      return c;
    };
    if (loops(a) != loops(b)) return std::nullopt;
  }

  // Edges of a in an order where each one touches an earlier vertex.
  std::vector<int> order;
  {
    std::vector<bool> vseen(nv, false), eseen(ne, false);
    vseen[0] = true;
    while (order.size() < ne) {
      bool added = false;
      for (std::size_t e = 0; e < ne && !added; ++e) {
        if (eseen[e]) continue;
        if (vseen[a.edge(e).from] || vseen[a.edge(e).to]) {
          eseen[e] = true;
          vseen[a.edge(e).from] = vseen[a.edge(e).to] = true;
          order.push_back(static_cast<int>(e));
          added = true;
        }
      }
      if (!added) break;
    }
  }

  // Based loops of a for its non-tree edges, with their labels.
  std::vector<EdgePath> loops;
  std::vector<Word> labels;
  for (std::size_t e = 0; e < ne; ++e) {
    if (a.edge(e).in_tree) continue;
    EdgePath p = a.tree_path(a.edge(e).from);
    p.push_back(orient(e, true));
    auto back = invert_path(a.tree_path(a.edge(e).to));
    p.insert(p.end(), back.begin(), back.end());
    loops.push_back(p);
    labels.push_back(a.edge(e).label);
  }

  Isomorphism iso;
  iso.edge_map.assign(ne, 0);
  iso.vertex_map.assign(nv, -1);
  std::vector<bool> eused(ne, false), vused(nv, false);
  std::optional<Isomorphism> found;

  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == ne) {
      std::vector<Word> images;
      for (const auto& p : loops) {
        Word w(a.rank());
        for (OrientedEdge o : p) {
          OrientedEdge img = iso.edge_map[edge_index(o)];
          w = w * b.label_along(o > 0 ? img : -img);
        }
        images.push_back(w);
      }
      auto g = find_simultaneous_conjugator(labels, images);
      if (!g) return false;
      iso.conjugator = *g;
      if (accept && !accept(iso)) return false;
      found = iso;
      return true;
    }
    const int e = order[k];
    const int u = a.edge(e).from, w = a.edge(e).to;
    for (std::size_t j = 0; j < ne; ++j) {
      if (eused[j]) continue;
      const auto& bj = b.edge(j);
      if ((u == w) != (bj.from == bj.to)) continue;
      for (int s : {1, -1}) {
        int bu = s > 0 ? bj.from : bj.to, bw = s > 0 ? bj.to : bj.from;
        std::vector<int> assigned;
        auto bind = [&](int av, int bv) {
          if (iso.vertex_map[av] >= 0) return iso.vertex_map[av] == bv;
          if (vused[bv] || a.valences()[av] != b.valences()[bv]) return false;
          iso.vertex_map[av] = bv;
          vused[bv] = true;
          assigned.push_back(av);
          return true;
        };
        bool ok = bind(u, bu) && bind(w, bw);
        if (ok) {
          eused[j] = true;
          iso.edge_map[e] = orient(static_cast<int>(j), s > 0);
          if (rec(k + 1)) return true;
          eused[j] = false;
        }
        for (int av : assigned) {
          vused[iso.vertex_map[av]] = false;
          iso.vertex_map[av] = -1;
        }
      }
    }
    return false;
  };
  rec(0);
  return found;
}

bool marking_equivalent(const TopologicalType& a, const TopologicalType& b) {
  return find_isomorphism(a, b).has_value();
}

std::optional<Isomorphism> point_isomorphism(const SimplexPoint& a, const SimplexPoint& b) {
  return find_isomorphism(*a.type, *b.type, [&](const Isomorphism& iso) {
    for (std::size_t e = 0; e < iso.edge_map.size(); ++e)
      if (a.lengths[e] != b.lengths[edge_index(iso.edge_map[e])]) return false;
    return true;
  });
}

bool marking_equivalent(const SimplexPoint& a, const SimplexPoint& b) { return point_isomorphism(a, b).has_value(); }

std::vector<Adjacent> faces(const TopologicalType& t) {
  const std::size_t ne = t.num_edges();
  std::vector<Adjacent> out;
  std::map<std::string, std::vector<const TopologicalType*>> seen;
  for (unsigned mask = 1; mask < (1u << ne); ++mask) {
    std::vector<int> forest;
    bool ok = true;
    UnionFind uf(t.num_vertices());
    for (std::size_t e = 0; e < ne && ok; ++e) {
      if (!(mask >> e & 1u)) continue;
      const auto& ed = t.edge(e);
      ok = ed.from != ed.to && uf.unite(ed.from, ed.to);
      forest.push_back(static_cast<int>(e));
    }
    if (!ok) continue;
    FaceMap fm = collapse_forest(t, forest);
    auto& bucket = seen[marking_signature(*fm.face)];
    bool dup = false;
    for (const auto* f : bucket)
      if (marking_equivalent(*f, *fm.face)) {
        dup = true;
        break;
      }
    if (!dup) {
      out.push_back({fm.face, false, fm.edge_map});
      bucket.push_back(fm.face.get());
    }
  }
  return out;
}

std::vector<Adjacent> maximal_cofaces(const TopologicalType& t) {
  std::vector<Adjacent> out;
  if (t.trivalent()) return out;
  std::map<std::string, std::vector<const TopologicalType*>> seen;
  std::function<void(const TypePtr&, const std::vector<int>&)> resolve = [&](const TypePtr& cur,
                                                                           const std::vector<int>& map) {
    int v = -1;
    for (std::size_t i = 0; i < cur->num_vertices(); ++i)
      if (cur->valences()[i] >= 4) {
        v = static_cast<int>(i);
        break;
      }
    if (v < 0) {
      auto& bucket = seen[marking_signature(*cur)];
      for (const auto* f : bucket)
        if (marking_equivalent(*f, *cur)) return;
      out.push_back({cur, true, map});
      bucket.push_back(cur.get());
      return;
    }
    std::vector<HalfEdge> hs;
    for (std::size_t e = 0; e < cur->num_edges(); ++e) {
      if (cur->edge(e).from == v) hs.push_back({static_cast<int>(e), false});
      if (cur->edge(e).to == v) hs.push_back({static_cast<int>(e), true});
    }
    const std::size_t k = hs.size();
    // The first half-edge stays, so each unordered partition is seen once.
    for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
      std::vector<HalfEdge> moved;
      for (std::size_t i = 1; i < k; ++i)
        if (mask >> (i - 1) & 1u) moved.push_back(hs[i]);
      if (moved.size() < 2 || k - moved.size() < 2) continue;
      TypePtr next = blow_up_vertex(*cur, v, moved);
      std::vector<int> nmap = map;
      nmap.push_back(-1);
      resolve(next, nmap);
    }
  };
  std::vector<int> ident(t.num_edges());
  std::iota(ident.begin(), ident.end(), 0);
  resolve(std::make_shared<const TopologicalType>(t), ident);
  return out;
}

std::vector<Adjacent> adjacent_simplices(const TopologicalType& t) {
  auto out = faces(t);
  auto up = maximal_cofaces(t);
  out.insert(out.end(), up.begin(), up.end());
  return out;
}

TypePtr apply_outer_automorphism(const TopologicalType& t, const std::vector<Word>& images) {
  if (static_cast<int>(images.size()) != t.rank() || !is_basis(images, t.rank()))
    throw Error(ErrorCode::NotAnAutomorphism, "images do not define an automorphism");
  std::vector<EdgeSpec> edges = t.edges();
  for (auto& e : edges)
    if (!e.in_tree) e.label = apply_endomorphism(e.label, images);
  return std::make_shared<const TopologicalType>(t.rank(), t.vertex_ids(), std::move(edges));
}

SimplexPoint apply_outer_automorphism(const SimplexPoint& p, const std::vector<Word>& images) {
  return SimplexPoint{apply_outer_automorphism(*p.type, images), p.lengths};
}

std::vector<int> zero_set(const RVec& coords) {
  std::vector<int> z;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] == 0) z.push_back(static_cast<int>(i));
  return z;
}

SimplexPoint realize(const TypePtr& t, const RVec& coords) {
  if (coords.size() != t->num_edges()) throw Error(ErrorCode::DimensionMismatch, "coordinate count mismatch");
  for (const auto& c : coords)
    if (c < 0) throw Error(ErrorCode::NonpositiveLength, "negative coordinate");
  auto z = zero_set(coords);
  if (z.empty()) return SimplexPoint::normalized(t, coords);
  FaceMap fm = collapse_forest(*t, z);
  RVec lengths(fm.face->num_edges());
  for (std::size_t e = 0; e < fm.edge_map.size(); ++e)
    if (fm.edge_map[e] >= 0) lengths[fm.edge_map[e]] = coords[e];
  return SimplexPoint::normalized(fm.face, std::move(lengths));
}

}  // namespace cvn
