#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cvn/free_group.hpp"
#include "cvn/rational.hpp"

namespace cvn {

namespace detail {
struct CandidateCache;
}

// Oriented edge: +(e+1) traverses edge e forward, -(e+1) backward.
using OrientedEdge = int;
using EdgePath = std::vector<OrientedEdge>;

inline int edge_index(OrientedEdge o) { return (o > 0 ? o : -o) - 1; }
inline OrientedEdge orient(int e, bool forward) { return forward ? e + 1 : -(e + 1); }

struct EdgeSpec {
  std::string id;
  int from = 0;
  int to = 0;
  Word label;  // trivial on tree edges
  bool in_tree = false;
};

// A half-edge is an end of an edge: the tail (head == false) or the head.
struct HalfEdge {
  int edge = 0;
  bool head = false;
  bool operator==(const HalfEdge&) const = default;
  auto operator<=>(const HalfEdge&) const = default;
};

// Marked graph without lengths. Vertex 0 is the base point; the edge order
// fixes simplex coordinates.
class TopologicalType {
 public:
  TopologicalType(int rank, std::vector<std::string> vertex_ids, std::vector<EdgeSpec> edges);

  int rank() const { return rank_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_vertices() const { return vertex_ids_.size(); }
  const std::vector<EdgeSpec>& edges() const { return edges_; }
  const EdgeSpec& edge(std::size_t e) const { return edges_[e]; }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::vector<int>& valences() const { return valence_; }
  bool trivalent() const;

  int tail(OrientedEdge o) const { return o > 0 ? edges_[o - 1].from : edges_[-o - 1].to; }
  int head(OrientedEdge o) const { return o > 0 ? edges_[o - 1].to : edges_[-o - 1].from; }
  Word label_along(OrientedEdge o) const;
  std::vector<OrientedEdge> half_edges_at(int v) const;  // outgoing orientations

  // Tree path from the base vertex to v.
  const EdgePath& tree_path(int v) const { return tree_paths_[v]; }
  // Reduced based loop realizing generator a (1-based).
  const EdgePath& generator_path(int a) const { return generator_paths_[a - 1]; }

  // Immersed cyclic representative; throws TrivialClass.
  EdgePath tighten(const ConjClass& gamma) const;
  EdgePath tighten_word(const Word& w) const;
  ConjClass loop_word(const EdgePath& cycle) const;
  Word path_word(const EdgePath& path) const;
  std::vector<int> counts(const EdgePath& path) const;
  std::vector<int> edge_counts(const ConjClass& gamma) const { return counts(tighten(gamma)); }

  std::vector<int> separating_edges() const;
  // Deterministic structural serialization, used for ordering.
  std::string key() const;

  detail::CandidateCache& candidate_cache() const { return *cache_; }

 private:
  int rank_;
  std::vector<std::string> vertex_ids_;
  std::vector<EdgeSpec> edges_;
  std::vector<int> valence_;
  std::vector<EdgePath> tree_paths_;
  std::vector<EdgePath> generator_paths_;
  std::shared_ptr<detail::CandidateCache> cache_;
};

using TypePtr = std::shared_ptr<const TopologicalType>;

// Free reduction of an edge path; with cyclic = true also across the ends.
EdgePath reduce_path(const EdgePath& path, bool cyclic);
EdgePath invert_path(const EdgePath& path);

// Normalized point of an open simplex.
struct SimplexPoint {
  TypePtr type;
  RVec lengths;

  int rank() const { return type->rank(); }
  // Positive lengths, rescaled to total 1.
  static SimplexPoint normalized(TypePtr type, RVec lengths, Rational* scale = nullptr);
};

// Input/output form with vertex ids and lengths.
struct MarkedGraph {
  struct Edge {
    std::string id, from, to;
    Rational length;
    Word label;
  };
  int rank = 0;
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<std::string> tree;
};

SimplexPoint validate_and_normalize(const MarkedGraph& g, Rational* scale = nullptr);
MarkedGraph to_marked_graph(const SimplexPoint& p);
void require_reduced(const TopologicalType& t);  // throws SeparatingEdge

struct FaceMap {
  TypePtr face;
  std::vector<int> edge_map;  // old edge -> face edge, -1 when collapsed
};

FaceMap collapse_forest(const TopologicalType& t, const std::vector<int>& forest);
SimplexPoint collapse_forest(const SimplexPoint& p, const std::vector<int>& forest);

// Moves the half-edges in `moved` to a new vertex joined to v by a new tree
// edge appended last; the remaining half-edges at v stay.
TypePtr blow_up_vertex(const TopologicalType& t, int v, const std::vector<HalfEdge>& moved);
SimplexPoint blow_up_vertex(const SimplexPoint& p, int v, const std::vector<HalfEdge>& moved, const Rational& length);

struct Isomorphism {
  std::vector<OrientedEdge> edge_map;  // edge of a -> oriented edge of b
  std::vector<int> vertex_map;
  Word conjugator;
};

// First marking-compatible isomorphism a -> b accepted by `accept`.
std::optional<Isomorphism> find_isomorphism(const TopologicalType& a, const TopologicalType& b,
                                            const std::function<bool(const Isomorphism&)>& accept = {});
bool marking_equivalent(const TopologicalType& a, const TopologicalType& b);
bool marking_equivalent(const SimplexPoint& a, const SimplexPoint& b);
std::optional<Isomorphism> point_isomorphism(const SimplexPoint& a, const SimplexPoint& b);

struct Adjacent {
  TypePtr type;
  bool coface = false;
  // Face: edge of t -> edge of face (-1 collapsed). Coface: edge of coface -> edge of t (-1 new).
  std::vector<int> edge_map;
};

std::vector<Adjacent> adjacent_simplices(const TopologicalType& t);
std::vector<Adjacent> faces(const TopologicalType& t);
std::vector<Adjacent> maximal_cofaces(const TopologicalType& t);

SimplexPoint apply_outer_automorphism(const SimplexPoint& p, const std::vector<Word>& images);
TypePtr apply_outer_automorphism(const TopologicalType& t, const std::vector<Word>& images);

// Point of the closed simplex of t given by coordinates summing to 1; zero
// coordinates are collapsed. Throws NotAForest when they contain a cycle.
SimplexPoint realize(const TypePtr& t, const RVec& coords);
// Indices of the zero coordinates.
std::vector<int> zero_set(const RVec& coords);

}  // namespace cvn
