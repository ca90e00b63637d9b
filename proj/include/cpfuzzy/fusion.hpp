#pragma once

#include <span>
#include <vector>

#include "cpfuzzy/core_model.hpp"
#include "cpfuzzy/matrix.hpp"

namespace cpfuzzy {

/// Collapses a group of PFVs into one circle: the center is the componentwise
/// quadratic mean, the radius the largest distance from the center to any
/// member, capped at 1. Throws Error{EmptyInput}.
CPFV fuse(std::span<const PFV> collection);

/// Fuses each cell across experts. All expert matrices must share one shape
/// (Error{DimensionMismatch}); at least one expert is required (Error{EmptyInput}).
Matrix<CPFV> build_circular_matrix(std::span<const Matrix<PFV>> experts);

}  // namespace cpfuzzy
