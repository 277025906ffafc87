#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "quatsp/qmatrix.hpp"

namespace quatsp {

// Dense complex matrix, row-major. Only carries what the Study determinant
// needs: products, adjoints, and an LU determinant kept in log form.
class CMatrix {
public:
    using value_type = std::complex<double>;

    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    value_type& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    double frobenius_norm() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> a_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix adjoint(const CMatrix& m);

// Complex adjoint of a quaternionic matrix: writing M = X + jY with X, Y
// complex, returns [[X, -conj(Y)], [Y, conj(X)]] of shape 2m x 2n. The map is
// an algebra homomorphism and commutes with adjoints.
CMatrix complex_adjoint(const QMatrix& m);

// det(M) as log|det| plus a phase, via LU with partial pivoting. `zero` is set
// when an exactly zero pivot occurs (log_abs then meaningless).
struct LogDet {
    double log_abs = 0.0;
    double arg = 0.0;
    bool zero = false;
};

LogDet lu_logdet(CMatrix m);

}  // namespace quatsp
