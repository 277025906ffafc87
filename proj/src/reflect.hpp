#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "quatsp/qmatrix.hpp"

namespace quatsp::detail {

// Householder reflector H = I - tau * u * adjoint(u) over a contiguous index
// range. Built so that H x = alpha * e1 with alpha = -phase(x1)*|x|; the same
// construction as in the complex case (Golub & Van Loan sec. 5.1) works for
// quaternions because adjoint(u)*x and adjoint(u)*u come out real with this
// phase choice.
struct Reflector {
    std::vector<Quaternion> u;
    double tau = 0.0;  // 0 means H = I
    Quaternion alpha;
};

inline Reflector make_reflector(std::vector<Quaternion> x) {
    Reflector h;
    h.u = std::move(x);
    double n2 = 0.0;
    for (const auto& q : h.u) n2 += norm2(q);
    if (n2 == 0.0) return h;
    const double beta = std::sqrt(n2);
    const Quaternion ph = phase_or_one(h.u[0]);
    h.alpha = -1.0 * (ph * beta);
    h.u[0] -= h.alpha;
    double un2 = 0.0;
    for (const auto& q : h.u) un2 += norm2(q);
    h.tau = 2.0 / un2;
    return h;
}

// A <- H A, with u acting on rows [row0, row0+len), restricted to columns
// [col0, cols).
inline void apply_left(QMatrix& a, const Reflector& h, std::size_t row0, std::size_t col0) {
    if (h.tau == 0.0) return;
    const std::size_t len = h.u.size();
    for (std::size_t j = col0; j < a.cols(); ++j) {
        Quaternion w;
        for (std::size_t l = 0; l < len; ++l) w += conj(h.u[l]) * a(row0 + l, j);
        w *= h.tau;
        for (std::size_t l = 0; l < len; ++l) a(row0 + l, j) -= h.u[l] * w;
    }
}

// A <- A H, with u acting on columns [col0, col0+len), restricted to rows
// [row0, rows). Also the accumulation step Q <- Q H.
inline void apply_right(QMatrix& a, const Reflector& h, std::size_t col0, std::size_t row0) {
    if (h.tau == 0.0) return;
    const std::size_t len = h.u.size();
    for (std::size_t i = row0; i < a.rows(); ++i) {
        Quaternion s;
        for (std::size_t l = 0; l < len; ++l) s += a(i, col0 + l) * h.u[l];
        s *= h.tau;
        for (std::size_t l = 0; l < len; ++l) a(i, col0 + l) -= s * conj(h.u[l]);
    }
}

}  // namespace quatsp::detail
