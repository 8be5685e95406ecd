#pragma once

#include <cstddef>
#include <vector>

#include "puresep/counters.hpp"
#include "puresep/state.hpp"

namespace puresep {

/// Eigenvalues of a Hermitian matrix, sorted descending.
///
/// `matrix` is row-major n x n; it must be Hermitian to within a small
/// multiple of its magnitude (checked). Cyclic Jacobi rotations, quadratic
/// convergence; throws NumericalError if the off-diagonal mass refuses to
/// vanish. Counters, when supplied, tally the rotation arithmetic.
std::vector<double> hermitian_eigenvalues(std::vector<Complex> matrix, std::size_t n,
                                          OpCounters* counters = nullptr);

/// Singular values of a rows x cols complex matrix (row-major), descending.
///
/// One-sided Jacobi: columns are rotated pairwise until mutually orthogonal,
/// then their norms are the singular values. Works on the matrix itself, so
/// small singular values keep full relative accuracy — crucially, a
/// numerically rank-1 matrix yields sigma_2 / sigma_1 near machine epsilon,
/// not near its square root as the Gram-eigenvalue route would give.
std::vector<double> singular_values(std::vector<Complex> matrix, std::size_t rows,
                                    std::size_t cols, OpCounters* counters = nullptr);

/// Determinant of a general complex matrix via LU with partial pivoting.
///
/// `matrix` is row-major n x n and is consumed as scratch. An exactly zero
/// pivot short-circuits to 0. Counters tally the elimination arithmetic and
/// pivot-search comparisons.
Complex lu_determinant(std::vector<Complex> matrix, std::size_t n,
                       OpCounters* counters = nullptr);

}  // namespace puresep
