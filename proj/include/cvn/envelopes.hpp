#pragma once

#include <optional>
#include <vector>

#include "cvn/marked_graph.hpp"
#include "cvn/metric.hpp"
#include "cvn/polytope.hpp"

namespace cvn {

std::vector<HalfSpace> star_system(const SimplexPoint& a, const ConjClass& gamma, const TopologicalType& delta);
std::vector<HalfSpace> starstar_system(const SimplexPoint& b, const ConjClass& gamma, const TopologicalType& delta);

Polytope out_envelope(const SimplexPoint& a, const std::vector<ConjClass>& dir, const TopologicalType& delta);
Polytope in_envelope(const SimplexPoint& b, const std::vector<ConjClass>& dir, const TopologicalType& delta);

struct EnvelopeSlice {
  TypePtr simplex;
  ConjClass gamma;
  std::vector<HalfSpace> star;
  std::vector<HalfSpace> starstar;
  Polytope polytope;
};

// Uses the first element of CW(a, b) unless gamma is given.
EnvelopeSlice envelope_slice(const SimplexPoint& a, const SimplexPoint& b, const TypePtr& delta,
                             const std::optional<ConjClass>& gamma = std::nullopt);
Polytope envelope(const SimplexPoint& a, const SimplexPoint& b, const TopologicalType& delta);

struct SupportEntry {
  TypePtr simplex;
  Polytope slice;
  int parent = -1;    // index of the entry it was reached from
  Adjacent via;       // relation to the parent
};

struct Support {
  std::vector<SupportEntry> simplices;
};

// CVN_BUDGET from the environment, else 500.
std::size_t default_budget();

Support support(const SimplexPoint& a, const SimplexPoint& b, std::size_t budget = default_budget());

struct DirectionReduction {
  std::vector<ConjClass> direction;
  bool verified = false;  // slices coincide exactly
};

DirectionReduction direction_reduction(const SimplexPoint& a, const std::vector<ConjClass>& dir,
                                       const TypePtr& delta);

SimplexPoint rainbow_graph(const ConjClass& gamma, const Rational& eps);

}  // namespace cvn
