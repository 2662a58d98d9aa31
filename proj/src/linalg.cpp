#include "skewcodes/linalg.hpp"

#include <algorithm>

namespace skewcodes {

std::size_t rref(const FieldCtx& F, MatrixFq& rows, bool high_degree_first) {
  if (rows.empty()) return 0;
  const std::size_t width = rows[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t step = 0; step < width && pivot_row < rows.size(); ++step) {
    const std::size_t col = high_degree_first ? width - 1 - step : step;
    std::size_t found = rows.size();
    for (std::size_t r = pivot_row; r < rows.size(); ++r)
      if (!F.is_zero(rows[r][col])) {
        found = r;
        break;
      }
    if (found == rows.size()) continue;
    std::swap(rows[pivot_row], rows[found]);
    const FieldElement scale = F.inv(rows[pivot_row][col]);
    for (auto& x : rows[pivot_row]) x = F.mul(scale, x);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || F.is_zero(rows[r][col])) continue;
      const FieldElement factor = rows[r][col];
      for (std::size_t c = 0; c < width; ++c)
        rows[r][c] = F.sub(rows[r][c], F.mul(factor, rows[pivot_row][c]));
    }
    ++pivot_row;
  }
  return pivot_row;
}

MatrixFq nullspace(const FieldCtx& F, const MatrixFq& rows, std::size_t width) {
  MatrixFq reduced = rows;
  for (auto& row : reduced) row.resize(width, F.zero());
  const std::size_t rank = rref(F, reduced, false);
  reduced.resize(rank);

  std::vector<std::size_t> pivot_col(rank, width);
  std::vector<bool> is_pivot(width, false);
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = 0; c < width; ++c)
      if (!F.is_zero(reduced[r][c])) {
        pivot_col[r] = c;
        is_pivot[c] = true;
        break;
      }

  MatrixFq basis;
  for (std::size_t free_col = 0; free_col < width; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<FieldElement> v(width, F.zero());
    v[free_col] = F.one();
    for (std::size_t r = 0; r < rank; ++r)
      v[pivot_col[r]] = F.neg(reduced[r][free_col]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace skewcodes
