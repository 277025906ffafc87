#include "quatsp/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace quatsp {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

QMatrix QMatrix::diagonal(std::size_t rows, std::size_t cols, const std::vector<double>& d) {
    if (d.size() > std::min(rows, cols))
        throw std::invalid_argument("diagonal: more entries than the main diagonal holds");
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

static void require_same_shape(const QMatrix& a, const QMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
    require_same_shape(*this, o, "operator+=");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
    require_same_shape(*this, o, "operator-=");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

QMatrix& QMatrix::operator*=(double s) {
    for (auto& q : a_) q *= s;
    return *this;
}

QMatrix QMatrix::block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
    if (i0 + r > rows_ || j0 + c > cols_) throw std::invalid_argument("block: out of range");
    QMatrix b(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
    return b;
}

void QMatrix::set_block(std::size_t i0, std::size_t j0, const QMatrix& b) {
    if (i0 + b.rows() > rows_ || j0 + b.cols() > cols_)
        throw std::invalid_argument("set_block: out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
}

void QMatrix::scale_column(std::size_t j, const Quaternion& q) {
    if (j >= cols_) throw std::invalid_argument("scale_column: out of range");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = (*this)(i, j) * q;
}

double QMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& q : a_) s += norm2(q);
    return std::sqrt(s);
}

double QMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& q : a_) m = std::max(m, abs(q));
    return m;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
QMatrix operator*(QMatrix a, double s) { return a *= s; }
QMatrix operator*(double s, QMatrix a) { return a *= s; }

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("operator*: inner dimension mismatch");
    QMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Quaternion& ail = a(i, l);
            if (ail == Quaternion()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += ail * b(l, j);
        }
    return c;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a.data() == b.data();
}

QMatrix adjoint(const QMatrix& m) {
    QMatrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = conj(m(i, j));
    return t;
}

Quaternion dot(const QMatrix& u, const QMatrix& v) {
    if (u.cols() != 1 || v.cols() != 1 || u.rows() != v.rows())
        throw std::invalid_argument("dot: expects equal-length column vectors");
    Quaternion s;
    for (std::size_t i = 0; i < u.rows(); ++i) s += conj(u(i, 0)) * v(i, 0);
    return s;
}

QMatrix hconcat(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row count mismatch");
    QMatrix c(a.rows(), a.cols() + b.cols());
    c.set_block(0, 0, a);
    c.set_block(0, a.cols(), b);
    return c;
}

QMatrix vconcat(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vconcat: column count mismatch");
    QMatrix c(a.rows() + b.rows(), a.cols());
    c.set_block(0, 0, a);
    c.set_block(a.rows(), 0, b);
    return c;
}

double symplectic_residual(const QMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("symplectic_residual: square input required");
    return (a * adjoint(a) - QMatrix::identity(a.rows())).frobenius_norm();
}

}  // namespace quatsp
