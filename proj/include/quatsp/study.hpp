#pragma once

#include "quatsp/qmatrix.hpp"

namespace quatsp {

// Study determinant: sqrt(det(complex_adjoint(M))) for square quaternionic M.
// The underlying complex determinant is real and nonnegative; it is computed
// in log form and its phase is asserted to be negligible (NumericalError
// otherwise). Nonnegative, multiplicative, invariant under adding a left
// multiple of one row to another, and equal to the product of |diagonal|
// entries for triangular input.
double study_det(const QMatrix& m);

struct Invertibility {
    bool invertible = false;
    // Smallest singular value over largest (of the complex adjoint, equal to
    // the quaternionic ratio); 0 for the zero matrix. Scale free.
    double margin = 0.0;
};

// Margin-based invertibility test: invertible iff margin > tol.
Invertibility is_invertible(const QMatrix& m, double tol = 1e-9);

}  // namespace quatsp
