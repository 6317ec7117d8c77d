#pragma once

#include <vector>

#include "mixlab/matrix.hpp"

namespace mixlab {

/// Singular values of m, non-negative and sorted descending,
/// count = min(rows, cols). One-sided Jacobi on the smaller Gram side;
/// rotations stop once every column-pair inner product falls below
/// 1e-12 times the squared Frobenius norm, with a cap of 60 sweeps.
/// Only the values are computed, never the U/V factors.
std::vector<double> singular_values(const Matrix& m);

} // namespace mixlab
