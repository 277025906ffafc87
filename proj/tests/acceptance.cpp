// Acceptance gate: one self-contained check per shipping criterion, each
// printing a single PASS/FAIL line. Tolerances and budgets are pinned here on
// purpose — loosening them is a contract change, not a tuning knob.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "quatsp/covers.hpp"
#include "quatsp/errors.hpp"
#include "quatsp/qmatrix.hpp"
#include "quatsp/relsvd.hpp"
#include "quatsp/rng.hpp"
#include "quatsp/spectral.hpp"
#include "quatsp/stiefel.hpp"
#include "quatsp/study.hpp"

using namespace quatsp;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::size_t checks_done = 0, checks_failed = 0;
std::string first_failure;

void expect(bool ok, const std::string& what) {
    ++checks_done;
    if (!ok) {
        ++checks_failed;
        if (first_failure.empty()) first_failure = what;
    }
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int id, const char* name, bool ok, double secs, const std::string& detail) {
    std::printf("criterion %d %-38s %s (%.1f s%s%s)\n", id, name, ok ? "PASS" : "FAIL", secs,
                detail.empty() ? "" : "; ", detail.c_str());
    if (!ok) ++failures;
}

// Criterion scaffold: reset per-criterion counters, run, enforce a budget.
template <typename F>
void criterion(int id, const char* name, double budget_secs, F body) {
    checks_done = 0;
    checks_failed = 0;
    first_failure.clear();
    Clock::time_point t0 = Clock::now();
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& e) {
        expect(false, std::string("unexpected exception: ") + e.what());
    }
    double secs = seconds_since(t0);
    bool ok = checks_failed == 0;
    std::string info = std::to_string(checks_done) + " checks";
    if (!detail.empty()) info += ", " + detail;
    if (!ok) info += ", " + std::to_string(checks_failed) + " failed: " + first_failure;
    if (budget_secs > 0 && secs > budget_secs) {
        ok = false;
        info += ", over the " + std::to_string(static_cast<int>(budget_secs)) + " s budget";
    }
    report(id, name, ok, secs, info);
}

// ---------------------------------------------------------------------------

std::string run_study_suite() {
    const double rel = 1e-9;
    RandomStream rng(1001);
    auto dim = [&] { return 1 + static_cast<std::size_t>(rng.uniform() * 6.0); };

    for (int it = 0; it < 500; ++it) {  // invertible <=> nonzero determinant
        std::size_t n = std::max<std::size_t>(2, dim());
        QMatrix m = rng.gaussian_matrix(n, n);
        expect(is_invertible(m).invertible && study_det(m) > 0.0, "generic invertibility");
        QMatrix s = m;
        Quaternion u = rng.gaussian_quaternion();
        for (std::size_t j = 0; j < n; ++j) s(1, j) = u * s(0, j);
        expect(!is_invertible(s).invertible, "singular detection");
        expect(study_det(s) <= rel * (1.0 + study_det(m)), "singular determinant magnitude");
    }
    for (int it = 0; it < 500; ++it) {  // multiplicativity
        std::size_t n = dim();
        QMatrix m = rng.gaussian_matrix(n, n), q = rng.gaussian_matrix(n, n);
        double lhs = study_det(m * q), rhs = study_det(m) * study_det(q);
        expect(std::abs(lhs - rhs) <= rel * std::max({1.0, lhs, rhs}), "multiplicativity");
    }
    for (int it = 0; it < 500; ++it) {  // row-operation invariance
        std::size_t n = std::max<std::size_t>(2, dim());
        QMatrix m = rng.gaussian_matrix(n, n);
        double base = study_det(m);
        Quaternion u = rng.gaussian_quaternion();
        for (std::size_t j = 0; j < n; ++j) m(1, j) += u * m(0, j);
        expect(std::abs(study_det(m) - base) <= rel * std::max(1.0, base), "row-op invariance");
    }
    for (int it = 0; it < 500; ++it) {  // triangular case
        std::size_t n = dim();
        QMatrix t(n, n);
        double prod = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) t(i, j) = rng.gaussian_quaternion();
            prod *= abs(t(i, i));
        }
        expect(std::abs(study_det(t) - prod) <= rel * std::max(1.0, prod), "triangular case");
    }
    for (int it = 0; it < 500; ++it) {  // two-sided identity-plus-product rule
        std::size_t m = 1 + static_cast<std::size_t>(rng.uniform() * 5.0);
        std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 5.0);
        QMatrix a = rng.gaussian_matrix(m, n), b = rng.gaussian_matrix(n, m);
        double lhs = study_det(QMatrix::identity(m) + a * b);
        double rhs = study_det(QMatrix::identity(n) + b * a);
        expect(std::abs(lhs - rhs) <= rel * (1.0 + lhs), "exchange identity");
    }
    return "500 instances per property, sizes <= 6";
}

std::string run_admissibility_frontier() {
    RandomStream rng(1002);
    std::size_t cases = 0;
    for (std::size_t k = 1; k <= 5; ++k)
        for (std::size_t n = k; n <= 2 * k + 2; ++n)
            for (int it = 0; it < 200; ++it, ++cases) {
                long long excess = 2 * static_cast<long long>(k) - static_cast<long long>(n);
                std::size_t need = static_cast<std::size_t>(std::max<long long>(0, excess));
                // Planted spectrum, kept a safe 0.1 away from the bands so the
                // expected verdict is unambiguous.
                std::vector<double> sigma(k);
                bool expect_admissible = true;
                switch (it % 5) {
                    case 0:
                        std::fill(sigma.begin(), sigma.end(), 1.0);
                        break;
                    case 1:
                        for (std::size_t i = 0; i < k; ++i)
                            sigma[i] = i < need ? 1.0 : 0.1 + 0.8 * rng.uniform();
                        break;
                    case 2:
                        if (need == 0) {
                            for (std::size_t i = 0; i < k; ++i)
                                sigma[i] = i + 1 < k ? 0.1 + 0.8 * rng.uniform() : 0.0;
                        } else {
                            for (std::size_t i = 0; i < k; ++i)
                                sigma[i] = i + 1 < need ? 1.0 : 0.1 + 0.8 * rng.uniform();
                            expect_admissible = false;  // one forced value short
                        }
                        break;
                    case 3:
                        for (std::size_t i = 0; i < k; ++i)
                            sigma[i] = i < need ? 1.0 : 0.1 + 0.8 * rng.uniform();
                        sigma[static_cast<std::size_t>(rng.uniform() * k)] = 1.002;
                        expect_admissible = false;  // above the contraction bound
                        break;
                    default:
                        std::fill(sigma.begin(), sigma.end(), 1.0);
                        for (std::size_t i = need; i < k; ++i) sigma[i] = 0.1 + 0.8 * rng.uniform();
                        break;
                }
                std::sort(sigma.begin(), sigma.end(), std::greater<double>());
                QMatrix p = sample_sp(k, rng) * QMatrix::diagonal(k, k, sigma) *
                            adjoint(sample_sp(k, rng));

                bool verdict = is_admissible(p, n).admissible;
                expect(verdict == expect_admissible, "verdict at k=" + std::to_string(k) +
                                                         " n=" + std::to_string(n));
                bool completed = false;
                try {
                    StiefelFrame f = complete(p, n);
                    completed = true;
                    expect(f.frame_residual() <= 1e-10, "frame residual");
                    expect((f.p - p).frobenius_norm() == 0.0, "corner preserved");
                } catch (const InadmissibleError&) {
                }
                expect(completed == verdict, "complete agrees with the verdict");
            }
    return std::to_string(cases) + " planted blocks, completion <=> admissibility";
}

std::string run_relative_svd_bulk() {
    double worst_residual = 0.0, worst_spectrum = 0.0;
    std::size_t total = 0;
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            RandomStream rng(2000 + 100 * n + k);
            for (int it = 0; it < 1000; ++it, ++total) {
                QMatrix a = sample_sp(n, rng);
                RelativeSvd d = decompose(a, k);
                double res = (rebuild(d) - a).frobenius_norm();
                worst_residual = std::max(worst_residual, res);
                expect(res <= 1e-8, "reconstruction residual");
                expect(static_cast<long long>(d.ones) >=
                           2 * static_cast<long long>(k) - static_cast<long long>(n),
                       "forced multiplicity");
                std::vector<double> expected(d.thetas.size());
                std::transform(d.thetas.begin(), d.thetas.end(), expected.begin(),
                               [](double t) { return std::cos(t); });
                expected.insert(expected.begin(), d.ones, 1.0);
                expected.insert(expected.end(), d.zeros, 0.0);
                std::sort(expected.begin(), expected.end(), std::greater<double>());
                std::vector<double> got = svd_values(a.block(n - k, n - k, k, k));
                for (std::size_t i = 0; i < k; ++i) {
                    double err = std::abs(got[i] - expected[i]);
                    worst_spectrum = std::max(worst_spectrum, err);
                    expect(err <= 1e-9, "block spectrum");
                }
            }
        }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu samples, worst residual %.1e, worst spectrum gap %.1e",
                  total, worst_residual, worst_spectrum);
    return buf;
}

std::string run_corollary_agreement() {
    RandomStream rng(1004);
    double worst = 0.0;
    for (int it = 0; it < 500; ++it) {
        std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 7.0);
        QMatrix a = sample_sp(n, rng);
        QMatrix via_corollary = rebuild_corollary(decompose_corollary(a));
        QMatrix via_blocks = rebuild(decompose(a, 1));
        double gap = (via_corollary - via_blocks).frobenius_norm();
        worst = std::max(worst, gap);
        expect(gap <= 1e-9, "specialization gap");
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "500 samples, worst gap %.1e", worst);
    return buf;
}

std::string run_cover_verification() {
    const std::size_t samples = 100000;
    double slowest = 0.0;
    auto check_family = [&](const std::vector<CayleySet>& family, const char* tag) {
        Clock::time_point t0 = Clock::now();
        CoverReport rep = verify_cover(family, SamplerKind::sp_k_embedded, samples, 42);
        double secs = seconds_since(t0);
        slowest = std::max(slowest, secs);
        expect(rep.uncovered == 0, std::string(tag) + " uncovered");
        expect(!rep.witness.has_value(), std::string(tag) + " witness absent");
        expect(rep.min_best_margin > 0.0, std::string(tag) + " margin positive");
        expect(secs < 120.0, std::string(tag) + " within the per-run budget");
        // Seed stability: the full report reduces identically on a rerun.
        CoverReport again = verify_cover(family, SamplerKind::sp_k_embedded, samples, 42);
        expect(again.uncovered == 0 &&
                   again.min_best_margin == rep.min_best_margin,  // bitwise
               std::string(tag) + " seed-stable");
    };

    check_family(sp2_cover(), "sp2");
    for (std::size_t j = 0; j <= 2; ++j)
        for (std::size_t k = j + 1; k <= 5; ++k)
            check_family(spk_cover(k, j),
                         ("spk j=" + std::to_string(j) + " k=" + std::to_string(k)).c_str());

    // Exact witness table: each canonical frame in exactly its own set.
    std::vector<CayleySet> cover = sp2_cover();
    const double signs[4][2] = {{1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
    for (int w = 0; w < 4; ++w) {
        StiefelFrame x = iota(QMatrix::diagonal(2, 2, {signs[w][0], signs[w][1]}), 2);
        for (int s = 0; s < 4; ++s)
            expect(omega_contains(x, cover[s]).invertible == (w == s), "witness table entry");
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "13 families x2 runs, slowest run %.1f s", slowest);
    return buf;
}

std::string run_bound_table() {
    LsBounds b32 = ls_bounds(3, 2);
    expect(b32.lower == 2 && b32.upper_dim == 2, "pinch at (3,2)");
    LsBounds b43 = ls_bounds(4, 3);
    expect(b43.lower == 4 && b43.upper_dim == 4, "pinch at (4,3)");
    for (std::size_t k = 1; k <= 10; ++k) {
        LsBounds b = ls_bounds(2 * k, k);
        expect(b.exact.has_value() && *b.exact == k, "stable range value");
        expect(b.lower <= *b.exact && *b.exact <= b.upper_dim, "stable range consistency");
    }
    return "category 2 and 4 pinched; stable-range value for k = 1..10";
}

std::string run_scope_statement() {
    std::puts(
        "  out of numerical scope: contractibility of the Cayley sets and the\n"
        "  homotopy-theoretic lower-bound arguments are cited results; the\n"
        "  property suites above check everything this library computes.");
    expect(true, "statement");
    return "";
}

}  // namespace

int main() {
    std::puts("acceptance gate");
    criterion(1, "study determinant properties", 30.0, run_study_suite);
    criterion(2, "admissibility frontier", 0.0, run_admissibility_frontier);
    criterion(3, "relative svd bulk reconstruction", 300.0, run_relative_svd_bulk);
    criterion(4, "corollary specialization", 0.0, run_corollary_agreement);
    criterion(5, "cover verification", 0.0, run_cover_verification);
    criterion(6, "category bound table", 0.0, run_bound_table);
    criterion(7, "scope statement", 0.0, run_scope_statement);
    if (failures == 0)
        std::puts("all acceptance criteria pass");
    else
        std::printf("%d criterion(s) failing\n", failures);
    return failures;
}
