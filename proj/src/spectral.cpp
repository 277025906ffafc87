#include "quatsp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quatsp/errors.hpp"
#include "reflect.hpp"

namespace quatsp {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// c*f + s*g = r, -s*f + c*g = 0, c^2 + s^2 = 1. r inherits the sign of the
// dominant input; callers absorb signs downstream.
void sym_givens(double f, double g, double& c, double& s, double& r) {
    if (g == 0.0) {
        c = 1.0;
        s = 0.0;
        r = f;
    } else if (f == 0.0) {
        c = 0.0;
        s = 1.0;
        r = g;
    } else {
        r = std::hypot(f, g);
        c = f / r;
        s = g / r;
    }
}

// Mix columns i and j by a real rotation: col_i' = col_i*c + col_j*s,
// col_j' = col_j*c - col_i*s. Real scalars commute with quaternions, so this
// keeps unitarity exactly as in the real case.
void rot_cols(QMatrix& m, std::size_t i, std::size_t j, double c, double s) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const Quaternion qi = m(r, i);
        const Quaternion qj = m(r, j);
        m(r, i) = qi * c + qj * s;
        m(r, j) = qj * c - qi * s;
    }
}

// Reduce b (m x n, m >= n) to real upper bidiagonal d/e by alternating left
// and right Householder reflections (Golub & Van Loan sec. 5.4.8, carried
// over to quaternion entries), b = u * B * adjoint(v). A final unit-diagonal
// similarity rotates the quaternionic bidiagonal entries onto the real axis.
// u and v may be null when only the values are wanted.
void bidiagonalize(QMatrix b, QMatrix* u, QMatrix* v, std::vector<double>& d,
                   std::vector<double>& e) {
    const std::size_t m = b.rows(), n = b.cols();
    if (u) *u = QMatrix::identity(m);
    if (v) *v = QMatrix::identity(n);
    d.assign(n, 0.0);
    e.assign(n > 0 ? n - 1 : 0, 0.0);
    if (n == 0) return;
    std::vector<Quaternion> dq(n), eq(n > 1 ? n - 1 : 0);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Quaternion> x(m - j);
        for (std::size_t l = 0; l < x.size(); ++l) x[l] = b(j + l, j);
        const auto hl = detail::make_reflector(std::move(x));
        if (hl.tau != 0.0) {
            detail::apply_left(b, hl, j, j + 1);
            if (u) detail::apply_right(*u, hl, j, 0);
        }
        dq[j] = hl.alpha;
        if (j + 2 < n) {
            // Annihilate row j right of the superdiagonal. A reflector built
            // from the conjugated row entries does it when applied from the
            // right: row*H = conj(alpha)*e1^T.
            std::vector<Quaternion> y(n - j - 1);
            for (std::size_t s = 0; s < y.size(); ++s) y[s] = conj(b(j, j + 1 + s));
            const auto hr = detail::make_reflector(std::move(y));
            if (hr.tau != 0.0) {
                detail::apply_right(b, hr, j + 1, j + 1);
                if (v) detail::apply_right(*v, hr, j + 1, 0);
            }
            eq[j] = conj(hr.alpha);
        } else if (j + 1 < n) {
            eq[j] = b(j, j + 1);
        }
    }
    // Phase cleanup: unit quaternions dl_j, dr_j with conj(dl_j)*d_j*dr_j and
    // conj(dl_j)*e_j*dr_{j+1} real nonnegative; fold them into u and v.
    Quaternion dr(1.0);
    for (std::size_t j = 0; j < n; ++j) {
        const Quaternion dj = dq[j] * dr;
        const Quaternion dl = phase_or_one(dj);
        d[j] = abs(dj);
        if (v) v->scale_column(j, dr);
        if (u) u->scale_column(j, dl);
        if (j + 1 < n) {
            const Quaternion g = conj(dl) * eq[j];
            e[j] = abs(g);
            dr = phase_or_one(conj(g));
        }
    }
}

// Wilkinson shift: eigenvalue of the trailing 2x2 of B^T B closest to its
// last entry.
double svd_shift(const std::vector<double>& d, const std::vector<double>& e, std::size_t lo,
                 std::size_t hi) {
    const double ta = d[hi - 1] * d[hi - 1] + (hi - 1 > lo ? e[hi - 2] * e[hi - 2] : 0.0);
    const double tb = d[hi - 1] * e[hi - 1];
    const double tc = d[hi] * d[hi] + e[hi - 1] * e[hi - 1];
    const double delta = 0.5 * (ta - tc);
    if (delta == 0.0 && tb == 0.0) return tc;
    const double denom = delta + std::copysign(std::hypot(delta, tb), delta);
    return tc - tb * tb / denom;
}

// Implicit-shift QR on a real upper bidiagonal (Golub-Kahan SVD iteration,
// Golub & Van Loan alg. 8.6.1-8.6.2). rot_u/rot_v receive every left/right
// plane rotation as (i, j, c, s) meaning col_i' = col_i*c + col_j*s,
// col_j' = col_j*c - col_i*s on the respective accumulation target.
// Diagonal entries may exit negative; callers fix signs.
template <class RotU, class RotV>
void bidiagonal_qr(std::vector<double>& d, std::vector<double>& e, RotU rot_u, RotV rot_v) {
    const std::size_t n = d.size();
    if (n < 2) return;
    std::size_t hi = n - 1;
    std::size_t sweeps = 0;
    const std::size_t max_sweeps = 120 * n + 120;
    while (true) {
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (std::abs(e[i]) <= kEps * (std::abs(d[i]) + std::abs(d[i + 1]))) e[i] = 0.0;
        while (hi > 0 && e[hi - 1] == 0.0) --hi;
        if (hi == 0) break;
        std::size_t lo = hi - 1;
        while (lo > 0 && e[lo - 1] != 0.0) --lo;

        double scale = 0.0;
        for (std::size_t i = lo; i <= hi; ++i) scale = std::max(scale, std::abs(d[i]));
        for (std::size_t i = lo; i < hi; ++i) scale = std::max(scale, std::abs(e[i]));

        // A negligible diagonal entry decouples the window: chase the
        // adjacent superdiagonal entry away before iterating.
        bool chased = false;
        for (std::size_t i = lo; i <= hi; ++i) {
            if (std::abs(d[i]) > kEps * scale) continue;
            d[i] = 0.0;
            double c, s, r;
            if (i < hi) {
                // Row rotations (i, j) push the bulge right until it leaves.
                double f = e[i];
                e[i] = 0.0;
                for (std::size_t j = i + 1; j <= hi && f != 0.0; ++j) {
                    sym_givens(d[j], f, c, s, r);
                    d[j] = r;
                    f = 0.0;
                    if (j < hi) {
                        f = -s * e[j];
                        e[j] *= c;
                    }
                    rot_u(j, i, c, s);
                }
            } else {
                // Column rotations (j, hi) push the bulge up until it leaves.
                double f = e[hi - 1];
                e[hi - 1] = 0.0;
                for (std::size_t j = hi; j > lo;) {
                    --j;
                    if (f == 0.0) break;
                    sym_givens(d[j], f, c, s, r);
                    d[j] = r;
                    f = 0.0;
                    if (j > lo) {
                        f = -s * e[j - 1];
                        e[j - 1] *= c;
                    }
                    rot_v(j, hi, c, s);
                }
            }
            chased = true;
            break;
        }
        if (chased) continue;

        if (++sweeps > max_sweeps)
            throw NumericalError("bidiagonal_qr: singular value iteration did not converge");

        const double mu = svd_shift(d, e, lo, hi);
        double f = d[lo] * d[lo] - mu;
        double g = d[lo] * e[lo];
        for (std::size_t k = lo; k < hi; ++k) {
            double c, s, r;
            sym_givens(f, g, c, s, r);
            if (k > lo) e[k - 1] = r;
            // Right rotation on columns (k, k+1): creates a bulge below the
            // diagonal.
            const double t1 = c * d[k] + s * e[k];
            e[k] = c * e[k] - s * d[k];
            g = s * d[k + 1];
            d[k + 1] *= c;
            rot_v(k, k + 1, c, s);
            f = t1;
            // Left rotation on rows (k, k+1): kills the bulge, creates the
            // next one right of the superdiagonal.
            sym_givens(f, g, c, s, r);
            d[k] = r;
            const double t2 = c * e[k] + s * d[k + 1];
            d[k + 1] = c * d[k + 1] - s * e[k];
            f = t2;
            g = 0.0;
            if (k + 1 < hi) {
                g = s * e[k + 1];
                e[k + 1] *= c;
            }
            rot_u(k, k + 1, c, s);
        }
        e[hi - 1] = f;
    }
}

// Rotate the first nonnegligible component of column j onto the positive
// real axis; partner (if given) absorbs the same unit factor so products
// col_j * real * adjoint(partner_col_j) are unchanged.
void gauge_fix_column(QMatrix& m, std::size_t j, QMatrix* partner) {
    for (std::size_t l = 0; l < m.rows(); ++l) {
        if (abs(m(l, j)) < 1e-8) continue;
        const Quaternion g = conj(phase_or_one(m(l, j)));
        m.scale_column(j, g);
        if (partner) partner->scale_column(j, g);
        return;
    }
}

std::vector<std::size_t> descending_order(const std::vector<double>& vals) {
    std::vector<std::size_t> idx(vals.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&vals](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
    return idx;
}

void permute_columns(QMatrix& m, const std::vector<std::size_t>& idx) {
    const QMatrix old = m;
    for (std::size_t t = 0; t < idx.size(); ++t) m.set_column(t, old.column(idx[t]));
}

}  // namespace

QSvd qsvd(const QMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    if (m == 0 || n == 0) return {QMatrix::identity(m), {}, QMatrix::identity(n)};
    if (m < n) {
        // adjoint(a) = u s adjoint(v)  =>  a = v s adjoint(u).
        QSvd t = qsvd(adjoint(a));
        return {std::move(t.v), std::move(t.sigma), std::move(t.u)};
    }
    const double scale = a.max_abs();
    if (scale == 0.0)
        return {QMatrix::identity(m), std::vector<double>(n, 0.0), QMatrix::identity(n)};

    QMatrix b = a;
    b *= 1.0 / scale;
    QMatrix u, v;
    std::vector<double> d, e;
    bidiagonalize(std::move(b), &u, &v, d, e);
    bidiagonal_qr(
        d, e, [&u](std::size_t i, std::size_t j, double c, double s) { rot_cols(u, i, j, c, s); },
        [&v](std::size_t i, std::size_t j, double c, double s) { rot_cols(v, i, j, c, s); });

    for (std::size_t i = 0; i < n; ++i) {
        if (d[i] < 0.0) {
            d[i] = -d[i];
            v.scale_column(i, Quaternion(-1.0));
        }
        d[i] *= scale;
    }
    const auto idx = descending_order(d);
    std::vector<double> sigma(n);
    for (std::size_t t = 0; t < n; ++t) sigma[t] = d[idx[t]];
    // Only the first n columns of u carry singular directions; the rest stay.
    std::vector<std::size_t> uidx(m);
    std::iota(uidx.begin(), uidx.end(), std::size_t{0});
    std::copy(idx.begin(), idx.end(), uidx.begin());
    permute_columns(u, uidx);
    permute_columns(v, idx);

    for (std::size_t j = 0; j < n; ++j) gauge_fix_column(v, j, &u);
    for (std::size_t j = n; j < m; ++j) gauge_fix_column(u, j, nullptr);
    return {std::move(u), std::move(sigma), std::move(v)};
}

std::vector<double> svd_values(const QMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    if (m == 0 || n == 0) return {};
    if (m < n) return svd_values(adjoint(a));
    const double scale = a.max_abs();
    if (scale == 0.0) return std::vector<double>(n, 0.0);
    QMatrix b = a;
    b *= 1.0 / scale;
    std::vector<double> d, e;
    bidiagonalize(std::move(b), nullptr, nullptr, d, e);
    const auto noop = [](std::size_t, std::size_t, double, double) {};
    bidiagonal_qr(d, e, noop, noop);
    for (double& x : d) x = std::abs(x) * scale;
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

namespace {

// Implicit-shift QL on a real symmetric tridiagonal, the classic tql2/tqli
// kernel (EISPACK; Numerical Recipes sec. 11.3). ev is padded to length n
// with a scratch slot. rot(i, c, s) applies col_{i+1}' = col_i*s + col_{i+1}*c,
// col_i' = col_i*c - col_{i+1}*s to the accumulation target.
template <class Rot>
void tridiagonal_ql(std::vector<double>& dv, std::vector<double>& ev, Rot rot) {
    const std::size_t n = dv.size();
    if (n < 2) return;
    for (std::size_t l = 0; l < n; ++l) {
        std::size_t iter = 0;
        while (true) {
            std::size_t mm = l;
            while (mm + 1 < n) {
                const double dd = std::abs(dv[mm]) + std::abs(dv[mm + 1]);
                if (std::abs(ev[mm]) <= kEps * dd) break;
                ++mm;
            }
            if (mm == l) break;
            if (++iter > 50)
                throw NumericalError("tridiagonal_ql: eigenvalue iteration did not converge");
            double g = (dv[l + 1] - dv[l]) / (2.0 * ev[l]);
            double r = std::hypot(g, 1.0);
            g = dv[mm] - dv[l] + ev[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (std::size_t i = mm; i-- > l;) {
                double f = s * ev[i];
                const double b = c * ev[i];
                r = std::hypot(f, g);
                ev[i + 1] = r;
                if (r == 0.0) {
                    dv[i + 1] -= p;
                    ev[mm] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = dv[i + 1] - p;
                r = (dv[i] - g) * s + 2.0 * c * b;
                p = s * r;
                dv[i + 1] = g + p;
                g = c * r - b;
                rot(i, c, s);
            }
            if (underflow) continue;
            dv[l] -= p;
            ev[l] = g;
            ev[mm] = 0.0;
        }
    }
}

}  // namespace

HermEig herm_eig(const QMatrix& h, double tol) {
    if (h.rows() != h.cols()) throw std::invalid_argument("herm_eig: matrix must be square");
    const std::size_t n = h.rows();
    const double hnorm = h.frobenius_norm();
    if ((h - adjoint(h)).frobenius_norm() > tol * std::max(1.0, hnorm))
        throw std::invalid_argument("herm_eig: matrix is not Hermitian within tolerance");
    if (n == 0) return {{}, QMatrix(0, 0)};
    const double scale = h.max_abs();
    if (scale == 0.0) return {std::vector<double>(n, 0.0), QMatrix::identity(n)};

    // Exact symmetrization kills the sub-tolerance skew part up front.
    QMatrix t = h + adjoint(h);
    t *= 0.5 / scale;
    QMatrix q = QMatrix::identity(n);

    // Householder tridiagonalization, symmetric two-sided update
    // t <- t - w u* - u w* with p = tau*t*u, w = p - u*(tau/2)*Re(u*p)
    // (Golub & Van Loan sec. 8.3.1, quaternion entries).
    for (std::size_t j = 0; j + 2 < n; ++j) {
        const std::size_t len = n - 1 - j;
        std::vector<Quaternion> x(len);
        for (std::size_t l = 0; l < len; ++l) x[l] = t(j + 1 + l, j);
        const auto hr = detail::make_reflector(std::move(x));
        if (hr.tau != 0.0) {
            std::vector<Quaternion> p(len), w(len);
            for (std::size_t l = 0; l < len; ++l) {
                Quaternion acc;
                for (std::size_t s = 0; s < len; ++s) acc += t(j + 1 + l, j + 1 + s) * hr.u[s];
                p[l] = acc * hr.tau;
            }
            double kk = 0.0;
            for (std::size_t l = 0; l < len; ++l) kk += (conj(hr.u[l]) * p[l]).w;
            kk *= 0.5 * hr.tau;
            for (std::size_t l = 0; l < len; ++l) w[l] = p[l] - hr.u[l] * kk;
            for (std::size_t l = 0; l < len; ++l)
                for (std::size_t s = 0; s < len; ++s)
                    t(j + 1 + l, j + 1 + s) -= w[l] * conj(hr.u[s]) + hr.u[l] * conj(w[s]);
            detail::apply_right(q, hr, j + 1, 0);
        }
        t(j + 1, j) = hr.alpha;
        t(j, j + 1) = conj(hr.alpha);
        for (std::size_t i = j + 2; i < n; ++i) {
            t(i, j) = Quaternion();
            t(j, i) = Quaternion();
        }
    }

    // Unit-diagonal similarity making the subdiagonal real nonnegative.
    std::vector<double> dv(n), ev(n, 0.0);
    Quaternion g(1.0);
    for (std::size_t i = 0; i < n; ++i) {
        dv[i] = t(i, i).w;
        q.scale_column(i, g);
        if (i + 1 < n) {
            const Quaternion sub = t(i + 1, i) * g;
            ev[i] = abs(sub);
            g = phase_or_one(sub);
        }
    }

    tridiagonal_ql(dv, ev, [&q](std::size_t i, double c, double s) {
        for (std::size_t r = 0; r < q.rows(); ++r) {
            const Quaternion f = q(r, i + 1);
            q(r, i + 1) = q(r, i) * s + f * c;
            q(r, i) = q(r, i) * c - f * s;
        }
    });

    for (double& x : dv) x *= scale;
    const auto idx = descending_order(dv);
    std::vector<double> values(n);
    for (std::size_t tpos = 0; tpos < n; ++tpos) values[tpos] = dv[idx[tpos]];
    permute_columns(q, idx);
    for (std::size_t j = 0; j < n; ++j) gauge_fix_column(q, j, nullptr);
    return {std::move(values), std::move(q)};
}

SingularClasses classify_singular(const std::vector<double>& sigma, double tol_one,
                                  double tol_zero) {
    for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
        if (sigma[i + 1] > sigma[i] + 1e-12)
            throw std::invalid_argument("classify_singular: values must be sorted descending");
    SingularClasses out;
    out.tol_one = tol_one;
    out.tol_zero = tol_zero;
    for (const double v : sigma) {
        if (v > 1.0 + tol_one)
            throw NumericalError("classify_singular: singular value exceeds 1, not a contraction");
        if (v >= 1.0 - tol_one)
            ++out.ones;
        else if (v <= tol_zero)
            ++out.zeros;
        else
            out.interior.push_back(v);
    }
    return out;
}

std::size_t numerical_rank(const QMatrix& m, double tol) {
    const auto s = svd_values(m);
    if (s.empty() || s.front() == 0.0) return 0;
    std::size_t rank = 0;
    for (const double v : s)
        if (v > tol * s.front()) ++rank;
    return rank;
}

}  // namespace quatsp
