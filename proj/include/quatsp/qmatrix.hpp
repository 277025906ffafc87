#pragma once

#include <cstddef>
#include <vector>

#include "quatsp/quaternion.hpp"

namespace quatsp {

// Dense quaternionic matrix, row-major, value semantics. Vectors of H^n are
// n x 1 matrices; the Hermitian product <u,v> = adjoint(u)*v makes H^n a
// *right* H-module, so columns are scaled by quaternions on the right.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static QMatrix identity(std::size_t n);
    // Real diagonal embedded at the top-left of a rows x cols matrix.
    static QMatrix diagonal(std::size_t rows, std::size_t cols, const std::vector<double>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Quaternion& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Quaternion& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    QMatrix& operator+=(const QMatrix& o);
    QMatrix& operator-=(const QMatrix& o);
    QMatrix& operator*=(double s);

    QMatrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;
    void set_block(std::size_t i0, std::size_t j0, const QMatrix& b);

    QMatrix column(std::size_t j) const { return block(0, j, rows_, 1); }
    void set_column(std::size_t j, const QMatrix& v) { set_block(0, j, v); }

    // Right-multiply column j by q in place (basis gauge changes).
    void scale_column(std::size_t j, const Quaternion& q);

    double frobenius_norm() const;
    double max_abs() const;

    const std::vector<Quaternion>& data() const { return a_; }
    std::vector<Quaternion>& data() { return a_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Quaternion> a_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator*(QMatrix a, double s);
QMatrix operator*(double s, QMatrix a);

// Matrix product; throws std::invalid_argument on inner-dimension mismatch.
QMatrix operator*(const QMatrix& a, const QMatrix& b);

bool operator==(const QMatrix& a, const QMatrix& b);
inline bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

// Conjugate transpose.
QMatrix adjoint(const QMatrix& m);

// <u,v> = adjoint(u)*v for single-column matrices of equal length.
Quaternion dot(const QMatrix& u, const QMatrix& v);

// [a b] and [a; b].
QMatrix hconcat(const QMatrix& a, const QMatrix& b);
QMatrix vconcat(const QMatrix& a, const QMatrix& b);

// ||a*adjoint(a) - I||_F, the symplectic-group residual.
double symplectic_residual(const QMatrix& a);

}  // namespace quatsp
