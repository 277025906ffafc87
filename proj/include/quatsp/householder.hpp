#pragma once

#include "quatsp/qmatrix.hpp"

namespace quatsp {

struct QrResult {
    QMatrix q;  // m x m, q*adjoint(q) = I
    QMatrix r;  // m x n upper triangular, real nonnegative diagonal
};

// Householder QR with the diagonal of R forced real nonnegative, which makes
// the factorization unique for full-rank input. a = q*r.
QrResult householder_qr(const QMatrix& a);

// Extends the orthonormal columns of w (d x j, j <= d) to an orthonormal
// basis of H^d. The first j columns are w itself; the remaining ones are
// deterministic, produced by reflecting standard basis vectors smallest index
// first. Throws NumericalError if w is far from orthonormal.
QMatrix orthonormal_completion(const QMatrix& w);

// Two-pass modified Gram-Schmidt on the columns, in place. Throws
// NumericalError when a column is (numerically) dependent on the previous
// ones.
void mgs_orthonormalize(QMatrix& m);

}  // namespace quatsp
