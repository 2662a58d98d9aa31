#pragma once

#include <cstddef>
#include <vector>

#include "skewcodes/finite_field.hpp"

namespace skewcodes {

using MatrixFq = std::vector<std::vector<FieldElement>>;

/// In-place reduced row echelon form; returns the rank.  With
/// high_degree_first, pivots are searched from the last column backwards,
/// which sorts a coefficient-matrix basis by polynomial degree.
std::size_t rref(const FieldCtx& field, MatrixFq& rows,
                 bool high_degree_first = false);

/// Basis of the right nullspace { v : rows * v = 0 }.
MatrixFq nullspace(const FieldCtx& field, const MatrixFq& rows,
                   std::size_t width);

}  // namespace skewcodes
