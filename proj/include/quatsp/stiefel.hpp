#pragma once

#include <cstdint>
#include <cstddef>
#include <utility>

#include "quatsp/errors.hpp"
#include "quatsp/qmatrix.hpp"
#include "quatsp/rng.hpp"
#include "quatsp/spectral.hpp"

namespace quatsp {

// Orthonormal k-frame in H^n, stored as the stacked matrix x = [t; p] with
// adjoint(x)*x = I_k, split into the top (n-k) x k block t and the square
// corner block p. The corner determines the frame geometry studied here; t
// completes it.
struct StiefelFrame {
    std::size_t n = 0;
    std::size_t k = 0;
    QMatrix t;  // (n-k) x k
    QMatrix p;  // k x k

    QMatrix stacked() const { return vconcat(t, p); }
    // ||adjoint(x)*x - I_k||_F of the stacked frame.
    double frame_residual() const;
};

// Verdict on whether a square block can be completed to a frame. The corner
// of a frame is a contraction (singular values in [0,1]) whose multiplicity
// of the singular value 1 is at least the excess 2k - n; both conditions are
// checked and reported.
struct AdmissibilityReport {
    bool admissible = false;
    // 2k - n; a completion needs this many singular values pinned at 1
    // (no constraint when negative).
    long long excess = 0;
    SingularClasses classes;
    enum class Reason { ok, eigenvalue_above_one, multiplicity_below_excess };
    Reason reason = Reason::ok;
};

// Inadmissible block passed where a completion was required; carries the
// failed report.
class InadmissibleError : public NumericalError {
public:
    InadmissibleError(const std::string& msg, AdmissibilityReport report)
        : NumericalError(msg), report_(std::move(report)) {}
    const AdmissibilityReport& report() const { return report_; }

private:
    AdmissibilityReport report_;
};

// Decide completability of the k x k block p into an n-frame. Requires
// k <= n. Pure function of the singular values of p; tol bounds both the
// deviation above 1 that is forgiven and the classification bands.
AdmissibilityReport is_admissible(const QMatrix& p, std::size_t n, double tol = 1e-9);

// Canonical completion: with p = u*diag(1_a, t_i, 0_z)*adjoint(v), returns
// the frame with t = s*adjoint(v) where s carries sqrt(1 - t_i^2) under a
// zero block and an identity under that — the unique choice with zero rows on
// top. Throws InadmissibleError when is_admissible fails.
StiefelFrame complete(const QMatrix& p, std::size_t n, double tol = 1e-9);

// Frame spanned by the last k columns of a symplectic a (n x n). Throws
// NotSymplecticError when ||a*adjoint(a) - I|| exceeds tol.
StiefelFrame rho(const QMatrix& a, std::size_t k, double tol = 1e-9);

// Embed a symplectic k x k block as the frame [0; p] in H^n. Throws
// NotSymplecticError when p is not unitary within tol.
StiefelFrame iota(const QMatrix& p, std::size_t n, double tol = 1e-9);

// Haar-distributed element of Sp(n): QR of an i.i.d. Gaussian quaternionic
// matrix with the R diagonal forced positive real, which makes the factor
// unique and the distribution exactly invariant.
QMatrix sample_sp(std::size_t n, RandomStream& rng);
QMatrix sample_sp(std::size_t n, std::uint64_t seed);

// Uniform frame on the Stiefel manifold: rho of a Haar symplectic sample.
StiefelFrame sample_stiefel(std::size_t n, std::size_t k, RandomStream& rng);
StiefelFrame sample_stiefel(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace quatsp
