#include "cvn/candidates.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>

#include "cvn/error.hpp"

namespace cvn {

const char* kind_name(CandidateKind kind) {
  switch (kind) {
    case CandidateKind::SimpleLoop: return "simple-loop";
    case CandidateKind::FigureEight: return "figure-eight";
    case CandidateKind::Barbell: return "barbell";
  }
  return "?";
}

namespace {

struct Cycle {
  EdgePath path;
  std::uint64_t edges = 0;
  std::uint64_t verts = 0;
};

std::uint64_t vertex_mask(const TopologicalType& t, const EdgePath& p) {
  std::uint64_t m = 0;
  for (OrientedEdge o : p) m |= std::uint64_t{1} << t.tail(o);
  return m;
}

EdgePath rotate_to(const TopologicalType& t, const EdgePath& cycle, int v) {
  for (std::size_t k = 0; k < cycle.size(); ++k)
    if (t.tail(cycle[k]) == v) {
      EdgePath r(cycle.begin() + k, cycle.end());
      r.insert(r.end(), cycle.begin(), cycle.begin() + k);
      return r;
    }
  return cycle;
}

EdgePath concat(std::initializer_list<const EdgePath*> parts) {
  EdgePath r;
  for (const auto* p : parts) r.insert(r.end(), p->begin(), p->end());
  return r;
}

}  // namespace

std::vector<EdgePath> simple_cycles(const TopologicalType& t) {
  if (t.num_edges() > 64 || t.num_vertices() > 64)
    throw Error(ErrorCode::Unsupported, "graph too large for cycle enumeration");
  std::vector<EdgePath> out;
  std::map<std::uint64_t, bool> seen;
  const int nv = static_cast<int>(t.num_vertices());
  for (int s = 0; s < nv; ++s) {
    EdgePath path;
    std::vector<bool> visited(nv, false);
    std::uint64_t used = 0;
    std::function<void(int)> dfs = [&](int cur) {
      for (OrientedEdge o : t.half_edges_at(cur)) {
        const std::uint64_t bit = std::uint64_t{1} << edge_index(o);
        if (used & bit) continue;
        const int w = t.head(o);
        if (w == s) {
          std::uint64_t mask = used | bit;
          if (!seen[mask]) {
            seen[mask] = true;
            path.push_back(o);
            out.push_back(path);
            path.pop_back();
          }
        } else if (w > s && !visited[w]) {
          visited[w] = true;
          used |= bit;
          path.push_back(o);
          dfs(w);
          path.pop_back();
          used &= ~bit;
          visited[w] = false;
        }
      }
    };
    visited[s] = true;
    dfs(s);
  }
  return out;
}

const std::vector<Candidate>& enumerate_candidates(const TopologicalType& t) {
  auto& cache = t.candidate_cache();
  std::call_once(cache.once, [&] {
    std::vector<Cycle> cycles;
    for (auto& p : simple_cycles(t)) {
      Cycle c;
      c.verts = vertex_mask(t, p);
      for (OrientedEdge o : p) c.edges |= std::uint64_t{1} << edge_index(o);
      c.path = std::move(p);
      cycles.push_back(std::move(c));
    }

    std::map<ConjClass, Candidate> found;
    auto add = [&](CandidateKind kind, EdgePath path) {
      ConjClass w = t.loop_word(path);
      if (found.count(w)) return;
      auto counts = t.counts(path);
      found.emplace(w, Candidate{kind, std::move(path), w, std::move(counts)});
    };

    for (const auto& c : cycles) add(CandidateKind::SimpleLoop, c.path);

    const int nv = static_cast<int>(t.num_vertices());
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      for (std::size_t j = i + 1; j < cycles.size(); ++j) {
        const Cycle& a = cycles[i];
        const Cycle& b = cycles[j];
        if (a.edges & b.edges) continue;
        const std::uint64_t common = a.verts & b.verts;
        if (common && !(common & (common - 1))) {
          int v = 0;
          while (!(common >> v & 1u)) ++v;
          EdgePath pa = rotate_to(t, a.path, v), pb = rotate_to(t, b.path, v);
          EdgePath pbi = invert_path(pb);
          add(CandidateKind::FigureEight, concat({&pa, &pb}));
          add(CandidateKind::FigureEight, concat({&pa, &pbi}));
        } else if (!common) {
          // Embedded arcs from a to b whose interiors avoid both cycles.
          const std::uint64_t blocked_edges = a.edges | b.edges;
          EdgePath arc;
          std::vector<bool> visited(nv, false);
          std::function<void(int, int)> walk = [&](int start, int cur) {
            for (OrientedEdge o : t.half_edges_at(cur)) {
              if (blocked_edges >> edge_index(o) & 1u) continue;
              const int w = t.head(o);
              if (visited[w] || (a.verts >> w & 1u)) continue;
              arc.push_back(o);
              if (b.verts >> w & 1u) {
                EdgePath pa = rotate_to(t, a.path, start), pb = rotate_to(t, b.path, w);
                EdgePath pbi = invert_path(pb), back = invert_path(arc);
                add(CandidateKind::Barbell, concat({&pa, &arc, &pb, &back}));
                add(CandidateKind::Barbell, concat({&pa, &arc, &pbi, &back}));
              } else {
                visited[w] = true;
                walk(start, w);
                visited[w] = false;
              }
              arc.pop_back();
            }
          };
          for (int u = 0; u < nv; ++u) {
            if (!(a.verts >> u & 1u)) continue;
            visited.assign(nv, false);
            visited[u] = true;
            walk(u, u);
          }
        }
      }
    }
    for (auto& [w, c] : found) cache.list.push_back(std::move(c));
  });
  return cache.list;
}

std::string marking_signature(const TopologicalType& t) {
  std::string s = std::to_string(t.num_edges()) + "/" + std::to_string(t.num_vertices());
  for (const auto& c : enumerate_candidates(t)) s += ";" + c.word.str();
  return s;
}

std::vector<int> edge_counts(const TopologicalType& t, const ConjClass& gamma) { return t.edge_counts(gamma); }

}  // namespace cvn
