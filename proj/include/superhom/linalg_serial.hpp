#pragma once

// Dense, single-threaded reference elimination. Kept for cross-checking the
// component-parallel kernels and for the benchmark.

#include "superhom/linalg.hpp"

namespace superhom::serial {

Echelon rref_rows(const std::vector<SparseVector>& rows, int ncols);
int rank(const SparseMatrix& m);
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

}  // namespace superhom::serial
