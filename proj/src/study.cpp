#include "quatsp/study.hpp"

#include <cmath>
#include <stdexcept>

#include "quatsp/cmatrix.hpp"
#include "quatsp/errors.hpp"
#include "quatsp/spectral.hpp"

namespace quatsp {

double study_det(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("study_det: square input required");
    const CMatrix chi = complex_adjoint(m);
    const LogDet d = lu_logdet(chi);
    if (d.zero) return 0.0;
    // Hadamard bound sets the scale the determinant can be resolved against;
    // below rounding level relative to it the phase is noise and the value is
    // numerically zero.
    double log_bound = 0.0;
    for (std::size_t i = 0; i < chi.rows(); ++i) {
        double row2 = 0.0;
        for (std::size_t j = 0; j < chi.cols(); ++j) row2 += std::norm(chi(i, j));
        if (row2 == 0.0) return 0.0;
        log_bound += 0.5 * std::log(row2);
    }
    const double value = std::exp(0.5 * d.log_abs);
    if (d.log_abs < log_bound + std::log(1e-12)) return value;
    // det chi is real >= 0; a drifted phase on a resolvable determinant means
    // the input left the supported regime (non-finite entries, catastrophic
    // conditioning).
    if (std::cos(d.arg) <= 0.0 || std::abs(std::sin(d.arg)) > 1e-6)
        throw NumericalError("study_det: determinant of the complex adjoint is not real positive");
    return value;
}

Invertibility is_invertible(const QMatrix& m, double tol) {
    if (m.rows() != m.cols()) throw std::invalid_argument("is_invertible: square input required");
    Invertibility r;
    if (m.rows() == 0) {
        // Empty matrix is the identity of H^0.
        r.invertible = true;
        r.margin = 1.0;
        return r;
    }
    const std::vector<double> s = svd_values(m);
    if (s.front() > 0.0) r.margin = s.back() / s.front();
    r.invertible = r.margin > tol;
    return r;
}

}  // namespace quatsp
