#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "quatsp/errors.hpp"
#include "quatsp/qmatrix.hpp"
#include "quatsp/rng.hpp"
#include "quatsp/spectral.hpp"
#include "quatsp/stiefel.hpp"
#include "support/oracles.hpp"

using namespace quatsp;

namespace {

double ortho_residual(const QMatrix& u) {
    return (adjoint(u) * u - QMatrix::identity(u.cols())).frobenius_norm();
}

double reconstruction_residual(const QMatrix& a, const QSvd& s) {
    QMatrix d = QMatrix::diagonal(s.u.cols(), s.v.cols(), s.sigma);
    return (s.u * d * adjoint(s.v) - a).frobenius_norm();
}

void check_svd_contract(const QMatrix& a, const QSvd& s) {
    const double scale = std::max(1.0, a.max_abs());
    REQUIRE(s.sigma.size() == std::min(a.rows(), a.cols()));
    CHECK(std::is_sorted(s.sigma.begin(), s.sigma.end(), std::greater<double>()));
    for (double v : s.sigma) CHECK(v >= 0.0);
    CHECK(ortho_residual(s.u) <= 1e-12 * std::max<double>(1, a.rows()));
    CHECK(ortho_residual(s.v) <= 1e-12 * std::max<double>(1, a.cols()));
    CHECK(reconstruction_residual(a, s) <= 1e-12 * std::max<double>(1, a.rows()) * scale);
}

}  // namespace

TEST_CASE("svd of fixed small matrices") {
    QMatrix d = QMatrix::diagonal(2, 2, {3.0, 1.0});
    QSvd s = qsvd(d);
    check_svd_contract(d, s);
    CHECK(s.sigma[0] == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(s.sigma[1] == doctest::Approx(1.0).epsilon(1e-13));

    QMatrix m(1, 1);
    m(0, 0) = 2.0 * Quaternion::j();
    CHECK(qsvd(m).sigma[0] == doctest::Approx(2.0).epsilon(1e-13));

    // Negative real diagonal: singular values are the absolute values.
    QMatrix neg = QMatrix::diagonal(3, 3, {-2.0, 1.5, -0.5});
    std::vector<double> sig = svd_values(neg);
    CHECK(sig[0] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(sig[1] == doctest::Approx(1.5).epsilon(1e-13));
    CHECK(sig[2] == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("svd handles degenerate shapes") {
    CHECK(qsvd(QMatrix(0, 0)).sigma.empty());
    CHECK(qsvd(QMatrix(3, 0)).sigma.empty());
    CHECK(qsvd(QMatrix(0, 3)).sigma.empty());
    QMatrix z(2, 3);
    QSvd s = qsvd(z);
    check_svd_contract(z, s);
    CHECK(s.sigma == std::vector<double>{0.0, 0.0});
}

TEST_CASE("svd matches the jacobi oracle on the complex encoding") {
    // Each quaternionic singular value shows up twice in the encoding.
    RandomStream rng(21);
    for (int it = 0; it < 40; ++it) {
        std::size_t r = 1 + static_cast<std::size_t>(rng.uniform() * 6.0);
        std::size_t c = 1 + static_cast<std::size_t>(rng.uniform() * 6.0);
        QMatrix a = rng.gaussian_matrix(r, c);
        QSvd s = qsvd(a);
        check_svd_contract(a, s);
        std::vector<double> oracle = oracles::jacobi_singular_values(complex_adjoint(a));
        REQUIRE(oracle.size() == 2 * s.sigma.size());
        for (std::size_t i = 0; i < s.sigma.size(); ++i) {
            double tol = 1e-9 * std::max(1.0, oracle[0]);
            CHECK(std::abs(s.sigma[i] - oracle[2 * i]) <= tol);
            CHECK(std::abs(s.sigma[i] - oracle[2 * i + 1]) <= tol);
        }
    }
}

TEST_CASE("svd_values equals the full decomposition's spectrum") {
    RandomStream rng(22);
    for (int it = 0; it < 20; ++it) {
        QMatrix a = rng.gaussian_matrix(5, 3);
        CHECK(svd_values(a) == qsvd(a).sigma);  // same kernel, bit for bit
    }
}

TEST_CASE("svd is scale-equivariant across extreme magnitudes") {
    RandomStream rng(23);
    QMatrix a = rng.gaussian_matrix(4, 4);
    std::vector<double> base = svd_values(a);
    for (double scale : {1e150, 1e-150, 123.456}) {
        std::vector<double> scaled = svd_values(a * scale);
        for (std::size_t i = 0; i < base.size(); ++i)
            CHECK(scaled[i] == doctest::Approx(base[i] * scale).epsilon(1e-12));
    }
}

TEST_CASE("svd of symplectic matrices is flat") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        QMatrix a = sample_sp(6, seed);
        for (double s : svd_values(a)) CHECK(std::abs(s - 1.0) <= 1e-10);
    }
}

TEST_CASE("svd handles clustered and deficient spectra") {
    QMatrix rep = QMatrix::diagonal(4, 4, {5.0, 5.0, 5.0, 1e-14});
    QSvd s = qsvd(rep);
    check_svd_contract(rep, s);
    CHECK(s.sigma[2] == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(s.sigma[3] <= 1e-12);

    // Rank-one outer product u v*: one singular value |u||v|.
    RandomStream rng(24);
    QMatrix u = rng.gaussian_matrix(5, 1), v = rng.gaussian_matrix(4, 1);
    QMatrix a = u * adjoint(v);
    std::vector<double> sig = svd_values(a);
    CHECK(sig[0] == doctest::Approx(u.frobenius_norm() * v.frobenius_norm()).epsilon(1e-11));
    for (std::size_t i = 1; i < sig.size(); ++i) CHECK(sig[i] <= 1e-11 * sig[0]);
}

TEST_CASE("hermitian eigendecomposition: fixed values and round trips") {
    QMatrix h(2, 2);
    h(0, 0) = 2.0;
    h(0, 1) = 1.0;
    h(1, 0) = 1.0;
    h(1, 1) = 2.0;
    HermEig e = herm_eig(h);
    CHECK(e.values[0] == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-13));

    RandomStream rng(25);
    for (int it = 0; it < 30; ++it) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 6.0);
        QMatrix g = rng.gaussian_matrix(n, n);
        QMatrix sym = g + adjoint(g);
        HermEig d = herm_eig(sym);
        CHECK(std::is_sorted(d.values.begin(), d.values.end(), std::greater<double>()));
        CHECK(ortho_residual(d.q) <= 1e-11);
        QMatrix rebuilt = d.q * QMatrix::diagonal(n, n, d.values) * adjoint(d.q);
        CHECK((rebuilt - sym).frobenius_norm() <= 1e-9 * std::max(1.0, sym.frobenius_norm()));
        // Independent check: |eigenvalues| are the singular values of the
        // encoding, each doubled.
        std::vector<double> mags(d.values.size());
        std::transform(d.values.begin(), d.values.end(), mags.begin(),
                       [](double x) { return std::abs(x); });
        std::sort(mags.begin(), mags.end(), std::greater<double>());
        std::vector<double> oracle = oracles::jacobi_singular_values(complex_adjoint(sym));
        for (std::size_t i = 0; i < mags.size(); ++i) {
            CHECK(std::abs(mags[i] - oracle[2 * i]) <= 1e-9 * std::max(1.0, oracle[0]));
        }
    }
}

TEST_CASE("hermitian eigendecomposition recovers a planted spectrum") {
    RandomStream rng(26);
    for (int it = 0; it < 20; ++it) {
        std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 5.0);
        std::vector<double> planted(n);
        for (double& x : planted) x = std::round(rng.gaussian() * 100.0) / 10.0;
        std::sort(planted.begin(), planted.end(), std::greater<double>());
        QMatrix q = sample_sp(n, rng);
        QMatrix h = q * QMatrix::diagonal(n, n, planted) * adjoint(q);
        HermEig e = herm_eig(h);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::abs(e.values[i] - planted[i]) <= 1e-10 * std::max(1.0, std::abs(planted[0])));
    }
}

TEST_CASE("hermitian eigendecomposition rejects bad input") {
    RandomStream rng(27);
    QMatrix g = rng.gaussian_matrix(3, 3);
    CHECK_THROWS_AS(herm_eig(g), std::invalid_argument);  // not hermitian
    CHECK_THROWS_AS(herm_eig(rng.gaussian_matrix(2, 3)), std::invalid_argument);
    CHECK(herm_eig(QMatrix(0, 0)).values.empty());
}

TEST_CASE("singular value classification bands") {
    SingularClasses c = classify_singular({1.0 + 5e-10, 1.0, 0.7, 0.3, 5e-10, 0.0}, 1e-9, 1e-9);
    CHECK(c.ones == 2);
    REQUIRE(c.interior.size() == 2);
    CHECK(c.interior[0] == doctest::Approx(0.7));
    CHECK(c.interior[1] == doctest::Approx(0.3));
    CHECK(c.zeros == 2);

    CHECK_THROWS_AS(classify_singular({1.0 + 1e-6}, 1e-9, 1e-9), NumericalError);
    CHECK_THROWS_AS(classify_singular({0.3, 0.7}, 1e-9, 1e-9), std::invalid_argument);
    SingularClasses empty = classify_singular({}, 1e-9, 1e-9);
    CHECK(empty.ones == 0);
    CHECK(empty.zeros == 0);
}

TEST_CASE("numerical rank") {
    CHECK(numerical_rank(QMatrix::diagonal(3, 3, {1.0, 1e-3, 1e-12})) == 2);
    CHECK(numerical_rank(QMatrix(4, 2)) == 0);
    CHECK(numerical_rank(QMatrix::identity(5)) == 5);
    RandomStream rng(28);
    QMatrix u = rng.gaussian_matrix(6, 2), v = rng.gaussian_matrix(6, 2);
    CHECK(numerical_rank(u * adjoint(v)) == 2);
}
