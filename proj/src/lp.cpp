#include "cvn/lp.hpp"

#include "cvn/error.hpp"

namespace cvn {

namespace {

// Dense tableau; column `ncols` holds the right-hand side.
struct Tableau {
  std::vector<RVec> t;
  std::vector<int> basis;
  std::size_t ncols = 0;

  void pivot(std::size_t r, std::size_t c) {
    Rational p = t[r][c];
    for (auto& v : t[r]) v /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][c] == 0) continue;
      Rational f = t[i][c];
      for (std::size_t j = 0; j <= ncols; ++j)
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
    }
    basis[r] = static_cast<int>(c);
  }

  // Minimizes cost . x with Bland's rule. Returns false when unbounded.
  bool minimize(const RVec& cost, const std::vector<bool>& allowed) {
    for (;;) {
      int enter = -1;
      for (std::size_t j = 0; j < ncols && enter < 0; ++j) {
        if (!allowed[j]) continue;
        bool basic = false;
        for (int b : basis) basic |= b == static_cast<int>(j);
        if (basic) continue;
        Rational d = cost[j];
        for (std::size_t i = 0; i < t.size(); ++i)
          if (t[i][j] != 0) d -= cost[basis[i]] * t[i][j];
        if (d < 0) enter = static_cast<int>(j);
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i][enter] <= 0) continue;
        Rational ratio = t[i][ncols] / t[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

struct Prepared {
  Tableau tab;
  std::size_t dim = 0, nslack = 0, nart = 0;
};

// Phase one. Returns false when the region is empty.
bool phase_one(const std::vector<RVec>& rows, const RVec& offsets, std::size_t dim, Prepared& p) {
  if (rows.size() != offsets.size()) throw Error(ErrorCode::DimensionMismatch, "row/offset count mismatch");
  for (const auto& r : rows)
    if (r.size() != dim) throw Error(ErrorCode::DimensionMismatch, "constraint has the wrong length");
  const std::size_t m = rows.size();
  const std::size_t nrows = m + 1;
  p.dim = dim;
  p.nslack = m;
  p.nart = nrows;
  auto& tab = p.tab;
  tab.ncols = dim + m + nrows;
  tab.t.assign(nrows, RVec(tab.ncols + 1, 0));
  tab.basis.assign(nrows, 0);
  for (std::size_t i = 0; i < m; ++i) {
    // rows[i] . x - s_i = -offsets[i]
    for (std::size_t j = 0; j < dim; ++j) tab.t[i][j] = rows[i][j];
    tab.t[i][dim + i] = -1;
    tab.t[i][tab.ncols] = -offsets[i];
  }
  for (std::size_t j = 0; j < dim; ++j) tab.t[m][j] = 1;
  tab.t[m][tab.ncols] = 1;
  for (std::size_t i = 0; i < nrows; ++i) {
    if (tab.t[i][tab.ncols] < 0)
      for (auto& v : tab.t[i]) v = -v;
    tab.t[i][dim + m + i] = 1;
    tab.basis[i] = static_cast<int>(dim + m + i);
  }
  RVec cost(tab.ncols, 0);
  for (std::size_t i = 0; i < nrows; ++i) cost[dim + m + i] = 1;
  std::vector<bool> allowed(tab.ncols, true);
  tab.minimize(cost, allowed);
  Rational w = 0;
  for (std::size_t i = 0; i < nrows; ++i)
    if (tab.basis[i] >= static_cast<int>(dim + m)) w += tab.t[i][tab.ncols];
  if (w != 0) return false;
  // Drive remaining artificials out where possible.
  for (std::size_t i = 0; i < nrows; ++i) {
    if (tab.basis[i] < static_cast<int>(dim + m)) continue;
    for (std::size_t j = 0; j < dim + m; ++j)
      if (tab.t[i][j] != 0) {
        tab.pivot(i, j);
        break;
      }
  }
  return true;
}

}  // namespace

bool lp_feasible(const std::vector<RVec>& rows, const RVec& offsets, std::size_t dim) {
  Prepared p;
  return phase_one(rows, offsets, dim, p);
}

std::optional<LpSolution> lp_maximize(const std::vector<RVec>& rows, const RVec& offsets, std::size_t dim,
                                      const RVec& objective) {
  Prepared p;
  if (!phase_one(rows, offsets, dim, p)) return std::nullopt;
  auto& tab = p.tab;
  RVec cost(tab.ncols, 0);
  for (std::size_t j = 0; j < dim; ++j) cost[j] = -objective[j];
  std::vector<bool> allowed(tab.ncols, true);
  for (std::size_t j = dim + p.nslack; j < tab.ncols; ++j) allowed[j] = false;
  tab.minimize(cost, allowed);  // bounded: the region lies in the simplex
  LpSolution s;
  s.x.assign(dim, 0);
  for (std::size_t i = 0; i < tab.t.size(); ++i)
    if (tab.basis[i] < static_cast<int>(dim)) s.x[tab.basis[i]] = tab.t[i][tab.ncols];
  s.value = dot(objective, s.x);
  return s;
}

int matrix_rank(std::vector<RVec> rows) {
  int rank = 0;
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  for (std::size_t c = 0; c < ncols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace cvn
