#include "quatsp/covers.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "quatsp/errors.hpp"
#include "quatsp/rng.hpp"

namespace quatsp {

namespace {

void check_family(const std::vector<CayleySet>& family, std::size_t n, std::size_t k) {
    for (const CayleySet& s : family) {
        if (s.n != n || s.p.rows() != k || s.p.cols() != k)
            throw std::invalid_argument("cover family has inconsistent dimensions");
    }
}

// Best membership margin of x across the family (0 for an empty family).
double family_margin(const StiefelFrame& x, const std::vector<CayleySet>& family, double tol) {
    double best = 0.0;
    for (const CayleySet& s : family) best = std::max(best, omega_contains(x, s, tol).margin);
    return best;
}

struct Partial {
    std::size_t uncovered = 0;
    double min_best = std::numeric_limits<double>::infinity();
    // Global index and frame of the earliest hole seen by this worker.
    std::size_t first_index = 0;
    std::optional<StiefelFrame> first_frame;
};

void account(Partial& p, const StiefelFrame& x, double best, double tight, std::size_t index) {
    p.min_best = std::min(p.min_best, best);
    if (best > tight) return;
    ++p.uncovered;
    if (!p.first_frame || index < p.first_index) {
        p.first_index = index;
        p.first_frame = x;
    }
}

// Shared engine; dimensions are passed explicitly so an empty family still
// knows what to sample.
CoverReport run_cover(std::size_t n, std::size_t k, const std::vector<CayleySet>& family,
                      SamplerKind sampler, std::size_t samples, std::uint64_t seed, double tol,
                      const std::vector<StiefelFrame>& probes) {
    check_family(family, n, k);
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    // A hole must fail even the hundredfold tightened threshold; margins in
    // between are boundary grazes and count as covered.
    const double tight = tol * 1e-2;

    Partial head;
    std::size_t index = 0;
    for (const StiefelFrame& x : probes) {
        if (x.n != n || x.k != k)
            throw std::invalid_argument("probe frame dimensions do not match the family");
        account(head, x, family_margin(x, family, tol), tight, index++);
    }

    auto draw = [&](std::uint64_t i) {
        RandomStream stream(derive_seed(seed, i));
        return sampler == SamplerKind::sp_k_embedded ? iota(sample_sp(k, stream), n)
                                                     : sample_stiefel(n, k, stream);
    };

    unsigned hw = std::thread::hardware_concurrency();
    std::size_t workers = std::clamp<std::size_t>(hw == 0 ? 1 : hw, 1, 8);
    workers = std::min<std::size_t>(workers, samples / 1024 + 1);

    std::vector<Partial> parts(workers);
    auto work = [&](std::size_t w) {
        // Contiguous chunks; the per-index substreams make the partition
        // irrelevant to the result.
        std::size_t lo = samples * w / workers, hi = samples * (w + 1) / workers;
        for (std::size_t i = lo; i < hi; ++i) {
            StiefelFrame x = draw(i);
            account(parts[w], x, family_margin(x, family, tol), tight, probes.size() + i);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errs(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    work(w);
                } catch (...) {
                    errs[w] = std::current_exception();
                }
            });
        for (std::thread& t : pool) t.join();
        for (const std::exception_ptr& e : errs)
            if (e) std::rethrow_exception(e);
    }

    CoverReport report;
    report.family = family;
    report.samples = samples;
    report.probes = probes.size();
    report.uncovered = head.uncovered;
    report.min_best_margin = head.min_best;
    report.witness = head.first_frame;
    std::size_t wi = head.first_index;
    for (const Partial& p : parts) {
        report.uncovered += p.uncovered;
        report.min_best_margin = std::min(report.min_best_margin, p.min_best);
        if (p.first_frame && (!report.witness || p.first_index < wi)) {
            report.witness = p.first_frame;
            wi = p.first_index;
        }
    }
    if (probes.empty() && samples == 0) report.min_best_margin = 0.0;
    return report;
}

}  // namespace

Invertibility omega_contains(const StiefelFrame& x, const CayleySet& s, double tol) {
    if (x.k != s.p.rows() || x.n != s.n)
        throw std::invalid_argument("frame and Cayley set dimensions do not match");
    return is_invertible(x.p + adjoint(s.p), tol);
}

std::vector<CayleySet> sp2_cover() {
    auto center = [](double a, double b, std::string label) {
        return CayleySet{QMatrix::diagonal(2, 2, {a, b}), 2, std::move(label)};
    };
    return {center(1, 1, "Omega(I2)"), center(-1, -1, "Omega(-I2)"),
            center(1, -1, "Omega(1,-1)"), center(-1, 1, "Omega(-1,1)")};
}

std::vector<CayleySet> candidate_family(std::size_t k, std::size_t j) {
    if (j > k) throw std::invalid_argument("candidate_family requires j <= k");
    if (j >= 20) throw std::invalid_argument("candidate_family: 2^j sets is unreasonable");
    const std::size_t n = 2 * k - j;
    std::vector<CayleySet> out;
    for (std::size_t bits = 0; bits < (std::size_t{1} << j); ++bits) {
        std::vector<double> d(k, 0.0);
        std::string label = "Omega(";
        if (k > j) label += "0_" + std::to_string(k - j);
        for (std::size_t s = 0; s < j; ++s) {
            // High bit first, so patterns enumerate (1,..,1) .. (-1,..,-1).
            bool neg = (bits >> (j - 1 - s)) & 1u;
            d[k - j + s] = neg ? -1.0 : 1.0;
            if (k > j || s > 0) label += ",";
            label += neg ? "-1" : "1";
        }
        label += ")";
        out.push_back(CayleySet{QMatrix::diagonal(k, k, d), n, std::move(label)});
    }
    return out;
}

std::vector<CayleySet> spk_cover(std::size_t k, std::size_t j) {
    if (j > 2) throw std::invalid_argument("spk_cover covers deficiencies j = 0, 1, 2 only");
    if (k <= j) throw std::invalid_argument("spk_cover requires k > j");
    return candidate_family(k, j);
}

CoverReport verify_cover(const std::vector<CayleySet>& family, SamplerKind sampler,
                         std::size_t samples, std::uint64_t seed, double tol,
                         const std::vector<StiefelFrame>& probes) {
    if (family.empty())
        throw std::invalid_argument("verify_cover needs a nonempty family to fix dimensions");
    return run_cover(family.front().n, family.front().p.rows(), family, sampler, samples, seed,
                     tol, probes);
}

LsBounds ls_bounds(std::size_t n, std::size_t k) {
    if (k == 0 || k > n) throw std::invalid_argument("ls_bounds requires 0 < k <= n");
    LsBounds b;
    b.n = n;
    b.k = k;
    // Cup-length case table on the codimension-like gap 2k - n.
    long long gap = 2 * static_cast<long long>(k) - static_cast<long long>(n);
    if (gap <= 1)
        b.lower = k;
    else if (gap <= 3)
        b.lower = k + 1;
    else
        b.lower = k + 2;
    b.upper_dim = k * (4 * n - 2 * k + 1) / (4 * (n - k) + 3);
    if (n >= 2 * k) b.exact = k;
    return b;
}

CoverReport problem54_experiment(std::size_t k, std::size_t j,
                                 const std::vector<CayleySet>& family, std::size_t samples,
                                 std::uint64_t seed, double tol) {
    if (j > k) throw std::invalid_argument("problem54_experiment requires j <= k");
    const std::size_t n = 2 * k - j;
    check_family(family, n, k);
    for (const CayleySet& s : family) {
        AdmissibilityReport a = is_admissible(s.p, n);
        if (!a.admissible)
            throw InadmissibleError("center " + s.label + " is not admissible in dimension " +
                                        std::to_string(n),
                                    a);
    }
    return run_cover(n, k, family, SamplerKind::sp_k_embedded, samples, seed, tol, {});
}

}  // namespace quatsp
