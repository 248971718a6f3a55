#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ncdiff/algebra.hpp"

namespace ncd {

/// Column of an exact linear system, keyed by row index; absent rows are zero.
using SparseColumn = std::map<std::size_t, Scalar>;

/// Basis of { c : Σ_k c_k columns[k] = 0 }, one vector per free column.
std::vector<std::vector<Scalar>> kernel_basis(const std::vector<SparseColumn>& columns);

/// Some c with Σ_k c_k columns[k] = target, free variables set to zero.
std::optional<std::vector<Scalar>> solve_combination(const std::vector<SparseColumn>& columns,
                                                     const SparseColumn& target);

} // namespace ncd
