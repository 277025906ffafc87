#include "quatsp/householder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quatsp/errors.hpp"
#include "reflect.hpp"

namespace quatsp {

QrResult householder_qr(const QMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    QrResult out;
    out.q = QMatrix::identity(m);
    out.r = a;
    const std::size_t steps = std::min(m, n);
    for (std::size_t j = 0; j < steps; ++j) {
        std::vector<Quaternion> x(m - j);
        for (std::size_t l = 0; l < x.size(); ++l) x[l] = out.r(j + l, j);
        const auto h = detail::make_reflector(std::move(x));
        if (h.tau != 0.0) {
            detail::apply_left(out.r, h, j, j + 1);
            detail::apply_right(out.q, h, j, 0);
        }
        out.r(j, j) = h.alpha;
        for (std::size_t l = j + 1; l < m; ++l) out.r(l, j) = Quaternion();
    }
    // Unit right-diagonal gauge: R diagonal real nonnegative.
    for (std::size_t j = 0; j < steps; ++j) {
        const Quaternion ph = phase_or_one(out.r(j, j));
        if (ph == Quaternion(1.0)) continue;
        const Quaternion pc = conj(ph);
        for (std::size_t c = j; c < n; ++c) out.r(j, c) = pc * out.r(j, c);
        out.r(j, j) = abs(out.r(j, j));
        out.q.scale_column(j, ph);
    }
    return out;
}

QMatrix orthonormal_completion(const QMatrix& w) {
    const std::size_t d = w.rows(), j = w.cols();
    if (j > d) throw std::invalid_argument("orthonormal_completion: more columns than rows");
    if (j == 0) return QMatrix::identity(d);
    const QMatrix gram = adjoint(w) * w;
    if ((gram - QMatrix::identity(j)).frobenius_norm() > 1e-6)
        throw NumericalError("orthonormal_completion: input columns are not orthonormal");
    const QrResult qr = householder_qr(w);
    QMatrix out(d, d);
    out.set_block(0, 0, w);
    out.set_block(0, j, qr.q.block(0, j, d, d - j));
    return out;
}

void mgs_orthonormalize(QMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t j = 0; j < cols; ++j) {
        QMatrix v = m.column(j);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < j; ++i) {
                const QMatrix ui = m.column(i);
                const Quaternion c = dot(ui, v);
                for (std::size_t r2 = 0; r2 < rows; ++r2) v(r2, 0) -= ui(r2, 0) * c;
            }
        }
        const double nrm = v.frobenius_norm();
        if (nrm < 1e-8) throw NumericalError("mgs_orthonormalize: dependent columns");
        v *= 1.0 / nrm;
        m.set_column(j, v);
    }
}

}  // namespace quatsp
