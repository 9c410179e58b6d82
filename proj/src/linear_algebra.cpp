#include "groupfn/linear_algebra.hpp"

#include <stdexcept>
#include <utility>

namespace groupfn {

LinearSolution solve_exact(std::vector<std::vector<Rat>> a, std::vector<Rat> rhs) {
  const std::size_t rows = a.size();
  if (rhs.size() != rows) throw std::invalid_argument("solve_exact: rhs size mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("solve_exact: ragged matrix");

  std::vector<std::size_t> pivot_col_of_row;
  std::vector<bool> is_pivot_col(cols, false);

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(rhs[p], rhs[r]);
    const Rat inv = Rat(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rat factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
      rhs[i] -= factor * rhs[r];
    }
    pivot_col_of_row.push_back(c);
    is_pivot_col[c] = true;
    ++r;
  }

  LinearSolution out;
  for (std::size_t i = r; i < rows; ++i)
    if (!rhs[i].is_zero()) return out;  // 0 = nonzero: infeasible
  out.feasible = true;

  out.particular.assign(cols, Rat(0));
  for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
    out.particular[pivot_col_of_row[i]] = rhs[i];

  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot_col[f]) continue;
    std::vector<Rat> h(cols, Rat(0));
    h[f] = Rat(1);
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
      h[pivot_col_of_row[i]] = -a[i][f];
    out.kernel.push_back(std::move(h));
  }
  return out;
}

}  // namespace groupfn
