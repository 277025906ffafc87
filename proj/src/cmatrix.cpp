#include "quatsp/cmatrix.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace quatsp {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& c : a_) s += std::norm(c);
    return std::sqrt(s);
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("CMatrix operator*: inner dimension mismatch");
    CMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const auto ail = a(i, l);
            if (ail == std::complex<double>()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += ail * b(l, j);
        }
    return c;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("CMatrix operator-: shape mismatch");
    CMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

CMatrix adjoint(const CMatrix& m) {
    CMatrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = std::conj(m(i, j));
    return t;
}

CMatrix complex_adjoint(const QMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    CMatrix z(2 * r, 2 * c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            const Quaternion& q = m(i, j);
            // q = (w + x i) + j (y - z i)
            const std::complex<double> xc(q.w, q.x);
            const std::complex<double> yc(q.y, -q.z);
            z(i, j) = xc;
            z(i, c + j) = -std::conj(yc);
            z(r + i, j) = yc;
            z(r + i, c + j) = std::conj(xc);
        }
    return z;
}

LogDet lu_logdet(CMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("lu_logdet: square input required");
    const std::size_t n = m.rows();
    LogDet r;
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(m(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(m(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0.0) {
            r.zero = true;
            return r;
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            negate = !negate;
        }
        const std::complex<double> d = m(k, k);
        r.log_abs += std::log(std::abs(d));
        r.arg += std::arg(d);
        for (std::size_t i = k + 1; i < n; ++i) {
            const std::complex<double> f = m(i, k) / d;
            if (f == std::complex<double>()) continue;
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    if (negate) r.arg += std::numbers::pi;
    return r;
}

}  // namespace quatsp
