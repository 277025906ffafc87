#pragma once

#include <cstddef>
#include <vector>

#include "quatsp/qmatrix.hpp"

namespace quatsp {

// Full SVD m = u * diag(sigma) * adjoint(v) with u (m x m) and v (n x n)
// unitary over the quaternions and sigma real, nonnegative, descending.
// Columns belonging to a repeated singular value are determined only up to a
// unitary mixing of the cluster; the subspace, not the individual columns, is
// the stable object.
struct QSvd {
    QMatrix u;
    std::vector<double> sigma;  // length min(m, n)
    QMatrix v;
};

QSvd qsvd(const QMatrix& m);

// Singular values only (descending); skips accumulating u and v.
std::vector<double> svd_values(const QMatrix& m);

// Eigendecomposition h = q * diag(values) * adjoint(q) of a Hermitian
// quaternionic matrix. The right eigenvalues of such a matrix are real:
// h * q_col_i = q_col_i * values[i], values descending.
struct HermEig {
    std::vector<double> values;
    QMatrix q;
};

// Throws std::invalid_argument for non-square input or when
// ||h - adjoint(h)|| exceeds tol * max(1, ||h||).
HermEig herm_eig(const QMatrix& h, double tol = 1e-9);

// Partition of a descending singular-value list against the unit interval:
// `ones` values within tol_one of 1, `zeros` values within tol_zero of 0,
// and the strictly interior rest, kept in `interior` (still descending).
// ones + interior.size() + zeros recovers the input length.
struct SingularClasses {
    std::size_t ones = 0;
    std::vector<double> interior;  // values t with tol_zero < t < 1 - tol_one
    std::size_t zeros = 0;
    double tol_one = 1e-9;
    double tol_zero = 1e-9;
};

// Throws NumericalError if a value exceeds 1 + tol_one (the list did not come
// from a contraction); std::invalid_argument if not sorted descending.
SingularClasses classify_singular(const std::vector<double>& sigma, double tol_one = 1e-9,
                                  double tol_zero = 1e-9);

// Count of singular values above tol * sigma_max; 0 for the zero matrix.
std::size_t numerical_rank(const QMatrix& m, double tol = 1e-9);

}  // namespace quatsp
