#include "ncdiff/linear_solve.hpp"

#include <unordered_map>

namespace ncd {

namespace {

struct Echelon {
  std::vector<std::vector<Scalar>> rows; // dense, reduced
  std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan on a dense copy. The last `extra` columns are never used as pivots.
Echelon reduce(const std::vector<SparseColumn>& columns, const SparseColumn* target) {
  std::unordered_map<std::size_t, std::size_t> row_of;
  auto row_index = [&](std::size_t key) {
    auto [it, inserted] = row_of.try_emplace(key, row_of.size());
    return it->second;
  };
  for (const auto& col : columns)
    for (const auto& [r, v] : col)
      row_index(r);
  if (target != nullptr)
    for (const auto& [r, v] : *target)
      row_index(r);

  const std::size_t ncols = columns.size() + (target != nullptr ? 1 : 0);
  Echelon e;
  e.rows.assign(row_of.size(), std::vector<Scalar>(ncols));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, v] : columns[c])
      e.rows[row_of.at(r)][c] = v;
  if (target != nullptr)
    for (const auto& [r, v] : *target)
      e.rows[row_of.at(r)][ncols - 1] = v;

  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < columns.size() && pivot_row < e.rows.size(); ++c) {
    std::size_t found = pivot_row;
    while (found < e.rows.size() && e.rows[found][c] == 0)
      ++found;
    if (found == e.rows.size())
      continue;
    std::swap(e.rows[pivot_row], e.rows[found]);
    const Scalar inv = 1 / e.rows[pivot_row][c];
    for (auto& v : e.rows[pivot_row])
      v *= inv;
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      if (r == pivot_row || e.rows[r][c] == 0)
        continue;
      const Scalar factor = e.rows[r][c];
      for (std::size_t k = c; k < ncols; ++k)
        e.rows[r][k] -= factor * e.rows[pivot_row][k];
    }
    e.pivot_cols.push_back(c);
    ++pivot_row;
  }
  return e;
}

} // namespace

std::vector<std::vector<Scalar>> kernel_basis(const std::vector<SparseColumn>& columns) {
  const auto e = reduce(columns, nullptr);
  std::vector<bool> is_pivot(columns.size(), false);
  for (auto c : e.pivot_cols)
    is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < columns.size(); ++free) {
    if (is_pivot[free])
      continue;
    std::vector<Scalar> v(columns.size());
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
      v[e.pivot_cols[k]] = -e.rows[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve_combination(const std::vector<SparseColumn>& columns,
                                                     const SparseColumn& target) {
  const auto e = reduce(columns, &target);
  const std::size_t last = columns.size();
  for (std::size_t r = e.pivot_cols.size(); r < e.rows.size(); ++r)
    if (e.rows[r][last] != 0)
      return std::nullopt;
  std::vector<Scalar> c(columns.size());
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
    c[e.pivot_cols[k]] = e.rows[k][last];
  return c;
}

} // namespace ncd
