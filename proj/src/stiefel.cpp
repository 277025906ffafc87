#include "quatsp/stiefel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "quatsp/householder.hpp"

namespace quatsp {

double StiefelFrame::frame_residual() const {
    const QMatrix x = stacked();
    return (adjoint(x) * x - QMatrix::identity(k)).frobenius_norm();
}

AdmissibilityReport is_admissible(const QMatrix& p, std::size_t n, double tol) {
    if (p.rows() != p.cols()) throw std::invalid_argument("is_admissible: square block required");
    const std::size_t k = p.rows();
    if (k > n) throw std::invalid_argument("is_admissible: block larger than ambient dimension");
    AdmissibilityReport rep;
    rep.excess = 2 * static_cast<long long>(k) - static_cast<long long>(n);
    std::vector<double> s = svd_values(p);
    if (!s.empty() && s.front() > 1.0 + tol) {
        rep.reason = AdmissibilityReport::Reason::eigenvalue_above_one;
        // Clamped classification, for diagnostics only.
        for (double& v : s) v = std::min(v, 1.0);
        rep.classes = classify_singular(s, tol, tol);
        return rep;
    }
    rep.classes = classify_singular(s, tol, tol);
    if (static_cast<long long>(rep.classes.ones) < rep.excess) {
        rep.reason = AdmissibilityReport::Reason::multiplicity_below_excess;
        return rep;
    }
    rep.admissible = true;
    return rep;
}

StiefelFrame complete(const QMatrix& p, std::size_t n, double tol) {
    const AdmissibilityReport rep = is_admissible(p, n, tol);
    if (!rep.admissible)
        throw InadmissibleError("complete: block is not admissible for this dimension", rep);
    const std::size_t k = p.rows();
    const QSvd sv = qsvd(p);
    const std::size_t q = rep.classes.interior.size();
    const std::size_t r = rep.classes.zeros;
    const std::size_t a = rep.classes.ones;
    // Admissibility (ones >= 2k - n) is exactly what keeps the zero block
    // height nonnegative.
    const std::size_t top = (n - k) - q - r;

    QMatrix s(n - k, k);
    for (std::size_t i = 0; i < q; ++i) {
        const double t = rep.classes.interior[i];
        s(top + i, a + i) = std::sqrt((1.0 - t) * (1.0 + t));
    }
    for (std::size_t i = 0; i < r; ++i) s(top + q + i, a + q + i) = 1.0;

    StiefelFrame f;
    f.n = n;
    f.k = k;
    f.t = s * adjoint(sv.v);
    f.p = p;
    return f;
}

StiefelFrame rho(const QMatrix& a, std::size_t k, double tol) {
    if (a.rows() != a.cols()) throw std::invalid_argument("rho: square matrix required");
    const std::size_t n = a.rows();
    if (k > n) throw std::invalid_argument("rho: frame width exceeds matrix size");
    if (symplectic_residual(a) > tol)
        throw NotSymplecticError("rho: input is not symplectic within tolerance");
    StiefelFrame f;
    f.n = n;
    f.k = k;
    f.t = a.block(0, n - k, n - k, k);
    f.p = a.block(n - k, n - k, k, k);
    return f;
}

StiefelFrame iota(const QMatrix& p, std::size_t n, double tol) {
    if (p.rows() != p.cols()) throw std::invalid_argument("iota: square block required");
    const std::size_t k = p.rows();
    if (k > n) throw std::invalid_argument("iota: block larger than ambient dimension");
    if (symplectic_residual(p) > tol)
        throw NotSymplecticError("iota: block is not symplectic within tolerance");
    StiefelFrame f;
    f.n = n;
    f.k = k;
    f.t = QMatrix(n - k, k);
    f.p = p;
    return f;
}

QMatrix sample_sp(std::size_t n, RandomStream& rng) {
    if (n == 0) return QMatrix(0, 0);
    return householder_qr(rng.gaussian_matrix(n, n)).q;
}

QMatrix sample_sp(std::size_t n, std::uint64_t seed) {
    RandomStream rng(seed);
    return sample_sp(n, rng);
}

StiefelFrame sample_stiefel(std::size_t n, std::size_t k, RandomStream& rng) {
    if (k > n) throw std::invalid_argument("sample_stiefel: frame width exceeds dimension");
    return rho(sample_sp(n, rng), k);
}

StiefelFrame sample_stiefel(std::size_t n, std::size_t k, std::uint64_t seed) {
    RandomStream rng(seed);
    return sample_stiefel(n, k, rng);
}

}  // namespace quatsp
