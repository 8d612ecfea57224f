#pragma once

#include <optional>
#include <vector>

#include "cvn/rational.hpp"

namespace cvn {

// Region: x >= 0, sum x = 1, rows[i] . x + offsets[i] >= 0.
bool lp_feasible(const std::vector<RVec>& rows, const RVec& offsets, std::size_t dim);

struct LpSolution {
  Rational value;
  RVec x;
};

// Maximizes objective . x over the region; nullopt when infeasible.
std::optional<LpSolution> lp_maximize(const std::vector<RVec>& rows, const RVec& offsets, std::size_t dim,
                                      const RVec& objective);

int matrix_rank(std::vector<RVec> rows);

}  // namespace cvn
