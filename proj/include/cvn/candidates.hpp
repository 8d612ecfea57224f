#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "cvn/free_group.hpp"
#include "cvn/marked_graph.hpp"

namespace cvn {

enum class CandidateKind { SimpleLoop, FigureEight, Barbell };

const char* kind_name(CandidateKind kind);

struct Candidate {
  CandidateKind kind;
  EdgePath path;
  ConjClass word;
  std::vector<int> counts;
};

namespace detail {
struct CandidateCache {
  std::once_flag once;
  std::vector<Candidate> list;
};
}  // namespace detail

// Sorted by word; computed once per type object.
const std::vector<Candidate>& enumerate_candidates(const TopologicalType& t);

std::vector<int> edge_counts(const TopologicalType& t, const ConjClass& gamma);

// Invariant of the marking-equivalence class: edge and vertex counts plus the
// candidate words. Used to bucket types before isomorphism tests.
std::string marking_signature(const TopologicalType& t);

// Embedded simple cycles, one orientation each.
std::vector<EdgePath> simple_cycles(const TopologicalType& t);

}  // namespace cvn
