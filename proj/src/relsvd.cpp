#include "quatsp/relsvd.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "quatsp/errors.hpp"
#include "quatsp/householder.hpp"
#include "quatsp/spectral.hpp"

namespace quatsp {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_shape(const QMatrix& m, std::size_t rows, std::size_t cols, const char* what) {
    if (m.rows() != rows || m.cols() != cols)
        throw std::invalid_argument(std::string("rebuild: bad shape for factor ") + what);
}

}  // namespace

QMatrix rebuild(const RelativeSvd& d) {
    const std::size_t n = d.n, k = d.k;
    if (k > n) throw std::invalid_argument("rebuild: corner larger than matrix");
    const std::size_t c = n - k;
    const std::size_t q = d.thetas.size();
    if (d.ones + q + d.zeros != k)
        throw std::invalid_argument("rebuild: ones + angles + zeros must equal the corner size");
    if (q + d.zeros > c)
        throw std::invalid_argument("rebuild: angle and zero counts exceed the complement size");
    check_shape(d.a, k, k, "a");
    check_shape(d.b, k, k, "b");
    check_shape(d.m, c, c, "m");
    check_shape(d.l, c, c, "l");
    for (std::size_t i = 0; i < q; ++i) {
        if (d.thetas[i] < -1e-12 || d.thetas[i] > kHalfPi + 1e-12)
            throw std::invalid_argument("rebuild: angle outside [0, pi/2]");
        if (i > 0 && d.thetas[i] < d.thetas[i - 1] - 1e-12)
            throw std::invalid_argument("rebuild: cosines must be descending");
    }
    const std::size_t top = c - q - d.zeros;

    QMatrix core_c(c, c);  // diag(1_top, cos, 0)
    for (std::size_t i = 0; i < top; ++i) core_c(i, i) = 1.0;
    QMatrix core_k(k, k);  // diag(1_ones, cos, 0)
    for (std::size_t i = 0; i < d.ones; ++i) core_k(i, i) = 1.0;
    QMatrix s_tr(c, k);
    QMatrix s_bl(k, c);
    for (std::size_t i = 0; i < q; ++i) {
        const double ct = std::cos(d.thetas[i]);
        const double st = std::sin(d.thetas[i]);
        core_c(top + i, top + i) = ct;
        core_k(d.ones + i, d.ones + i) = ct;
        s_tr(top + i, d.ones + i) = st;
        s_bl(d.ones + i, top + i) = st;
    }
    for (std::size_t i = 0; i < d.zeros; ++i) {
        s_tr(top + q + i, d.ones + q + i) = 1.0;
        s_bl(d.ones + q + i, top + q + i) = 1.0;
    }

    QMatrix out(n, n);
    out.set_block(0, 0, d.m * core_c * adjoint(d.l));
    out.set_block(0, c, (d.m * s_tr * adjoint(d.b)) * -1.0);
    out.set_block(c, 0, d.a * s_bl * adjoint(d.l));
    out.set_block(c, c, d.a * core_k * adjoint(d.b));
    return out;
}

RelativeSvd decompose(const QMatrix& a_in, std::size_t k, double tol) {
    if (a_in.rows() != a_in.cols()) throw std::invalid_argument("decompose: square input required");
    const std::size_t n = a_in.rows();
    if (k > n) throw std::invalid_argument("decompose: corner larger than matrix");
    if (symplectic_residual(a_in) > tol)
        throw NotSymplecticError("decompose: input is not symplectic within tolerance");
    const std::size_t c = n - k;
    const QMatrix corner = a_in.block(c, c, k, k);
    const QMatrix tblk = a_in.block(0, c, c, k);
    const QMatrix beta = a_in.block(c, 0, k, c);
    const QMatrix alpha = a_in.block(0, 0, c, c);

    const QSvd sv = qsvd(corner);
    SingularClasses cls;
    try {
        cls = classify_singular(sv.sigma, tol, tol);
    } catch (const NumericalError&) {
        throw NotSymplecticError("decompose: corner block is not a contraction");
    }
    const std::size_t p = cls.ones;
    const std::size_t q = cls.interior.size();
    const std::size_t r = cls.zeros;
    // For a symplectic input the corner is automatically admissible, which is
    // exactly q + r <= c; failure here means the classification bands split a
    // borderline spectrum inconsistently.
    if (q + r > c)
        throw NumericalError("decompose: corner spectrum inconsistent with the frame equations");
    const std::size_t top = c - q - r;

    std::vector<double> thetas(q), sines(q);
    for (std::size_t i = 0; i < q; ++i) {
        const double t = cls.interior[i];
        thetas[i] = std::acos(t);
        sines[i] = std::sqrt((1.0 - t) * (1.0 + t));
    }

    // Determined columns: the top-right block satisfies t*b = -(m columns)
    // scaled by sines (identity under them), the bottom-left transposed
    // relation gives the l columns with positive sign.
    const QMatrix tb = tblk * sv.v;
    const QMatrix ba = adjoint(beta) * sv.u;
    QMatrix w_m(c, q + r), w_l(c, q + r);
    for (std::size_t i = 0; i < q; ++i) {
        const double inv = 1.0 / sines[i];
        for (std::size_t row = 0; row < c; ++row) {
            w_m(row, i) = tb(row, p + i) * -inv;
            w_l(row, i) = ba(row, p + i) * inv;
        }
    }
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t row = 0; row < c; ++row) {
            w_m(row, q + i) = -tb(row, p + q + i);
            w_l(row, q + i) = ba(row, p + q + i);
        }
    }

    // l = [completion | determined], the completion deterministic; then the
    // free m columns come from the exact relation m_i = alpha * l_i.
    QMatrix l(c, c);
    const QMatrix lfull = orthonormal_completion(w_l);
    l.set_block(0, 0, lfull.block(0, q + r, c, top));
    l.set_block(0, top, w_l);

    QMatrix m(c, c);
    m.set_block(0, 0, alpha * l.block(0, 0, c, top));
    m.set_block(0, top, w_m);

    RelativeSvd out{n,           k, sv.u, sv.v, std::move(m), std::move(l),
                    std::move(thetas), p, r};
    const double resid = (rebuild(out) - a_in).frobenius_norm();
    if (resid > 1e-8)
        throw NumericalError("decompose: reconstruction residual above tolerance");
    return out;
}

CorollaryForm decompose_corollary(const QMatrix& a_in, double tol) {
    if (a_in.rows() != a_in.cols() || a_in.rows() < 2)
        throw std::invalid_argument("decompose_corollary: square input of size >= 2 required");
    const RelativeSvd d = decompose(a_in, 1, tol);
    const std::size_t c = d.n - 1;
    CorollaryForm f;
    f.n = d.n;
    // Fold the unit corner factors into one phase: e = a*conj(b); the last
    // column of m and l absorbs conj(a), which commutes through the real
    // diagonal cores.
    const Quaternion qa = d.a(0, 0);
    const Quaternion qb = d.b(0, 0);
    f.e = qa * conj(qb);
    f.m = d.m;
    f.l = d.l;
    f.m.scale_column(c - 1, conj(qa));
    f.l.scale_column(c - 1, conj(qa));
    if (d.ones == 1)
        f.theta = 0.0;
    else if (d.zeros == 1)
        f.theta = kHalfPi;
    else
        f.theta = d.thetas[0];
    const double resid = (rebuild_corollary(f) - a_in).frobenius_norm();
    if (resid > 1e-8)
        throw NumericalError("decompose_corollary: reconstruction residual above tolerance");
    return f;
}

QMatrix rebuild_corollary(const CorollaryForm& f) {
    const std::size_t n = f.n;
    if (n < 2) throw std::invalid_argument("rebuild_corollary: size >= 2 required");
    const std::size_t c = n - 1;
    check_shape(f.m, c, c, "m");
    check_shape(f.l, c, c, "l");
    if (f.theta < -1e-12 || f.theta > kHalfPi + 1e-12)
        throw std::invalid_argument("rebuild_corollary: angle outside [0, pi/2]");
    const double ct = std::cos(f.theta);
    const double st = std::sin(f.theta);

    QMatrix core(c, c);
    for (std::size_t i = 0; i + 1 < c; ++i) core(i, i) = 1.0;
    core(c - 1, c - 1) = ct;
    QMatrix tr(c, 1);
    tr(c - 1, 0) = -st;
    QMatrix bl(1, c);
    bl(0, c - 1) = st;
    QMatrix e_mat(1, 1);
    e_mat(0, 0) = f.e;

    QMatrix out(n, n);
    out.set_block(0, 0, f.m * core * adjoint(f.l));
    out.set_block(0, c, f.m * tr * e_mat);
    out.set_block(c, 0, bl * adjoint(f.l));
    out.set_block(c, c, e_mat * ct);
    return out;
}

}  // namespace quatsp
