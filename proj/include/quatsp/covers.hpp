#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quatsp/qmatrix.hpp"
#include "quatsp/stiefel.hpp"
#include "quatsp/study.hpp"

namespace quatsp {

// Open subset of the Stiefel manifold attached to an admissible center:
// a frame [t; p] belongs to the set when p + adjoint(center) is invertible.
struct CayleySet {
    QMatrix p;          // k x k admissible center
    std::size_t n = 0;  // ambient dimension
    std::string label;
};

// Membership test with its margin (relative smallest singular value of
// p + adjoint(center)); member iff margin > tol. The margin is continuous in
// the frame, so small margins flag boundary grazing rather than exclusion.
Invertibility omega_contains(const StiefelFrame& x, const CayleySet& s, double tol = 1e-12);

// The four-set cover of Sp(2) inside its own Stiefel manifold, centers
// I, -I, diag(1,-1), diag(-1,1) — in that order, so the canonical witnesses
// hit the sets in the identity pattern.
std::vector<CayleySet> sp2_cover();

// Families covering Sp(k) embedded in the Stiefel manifold of n = 2k - j:
// j = 0 the single center 0_k, j = 1 the two centers diag(0,...,±1), j = 2
// the four centers diag(0,...,e1,e2). Requires k > j.
std::vector<CayleySet> spk_cover(std::size_t k, std::size_t j);

// All 2^j sign patterns diag(0_{k-j}, e1..ej) as candidate centers in
// n = 2k - j; the experiment surface for deficiencies j beyond the proven
// range. Requires j <= k.
std::vector<CayleySet> candidate_family(std::size_t k, std::size_t j);

enum class SamplerKind {
    sp_k_embedded,  // Haar on Sp(k), embedded as frames [0; p]
    full_stiefel,   // uniform frames on the whole Stiefel manifold
};

// Outcome of a sampling run. Sampling can refute a cover (a sample or probe
// in no set) but never prove one; uncovered = 0 only states that no
// counterexample was found among `samples` draws and `probes` fixed frames.
struct CoverReport {
    std::vector<CayleySet> family;
    std::size_t samples = 0;  // Monte Carlo draws
    std::size_t probes = 0;   // deterministic frames checked ahead of them
    std::size_t uncovered = 0;
    // Smallest, over everything checked, of the best membership margin
    // across the family; how close the run came to a hole.
    double min_best_margin = 0.0;
    std::optional<StiefelFrame> witness;  // first frame in no set
};

// Check every probe and `samples` Haar draws against the family. A frame
// counts as uncovered only when its best margin also fails the hundredfold
// tightened threshold, separating true gaps (margin at rounding level) from
// grazes of a set boundary. Samples are drawn from per-index substreams of
// `seed`, so the report is invariant under the worker partition. Requires a
// nonempty family with consistent dimensions.
CoverReport verify_cover(const std::vector<CayleySet>& family, SamplerKind sampler,
                         std::size_t samples, std::uint64_t seed, double tol = 1e-12,
                         const std::vector<StiefelFrame>& probes = {});

// Category bounds for the Stiefel manifold of k-frames in H^n.
struct LsBounds {
    std::size_t n = 0;
    std::size_t k = 0;
    // Cup-length lower bound: k, k+1 or k+2 according to n >= 2k-1,
    // n in {2k-2, 2k-3}, or n <= 2k-4.
    std::size_t lower = 0;
    // Dimension/connectivity bound floor(k(4n-2k+1) / (4(n-k)+3)).
    std::size_t upper_dim = 0;
    // The category equals k in the stable range n >= 2k.
    std::optional<std::size_t> exact;
};

LsBounds ls_bounds(std::size_t n, std::size_t k);

// Subspace-category experiment: does some family of 2^j Cayley sets cover
// Sp(k) embedded in dimension n = 2k - j? Runs the verify_cover engine on a
// caller-supplied family (possibly empty) with the embedded sampler; centers
// must be n-admissible (InadmissibleError names the offender). Asserts
// nothing beyond what the report says.
CoverReport problem54_experiment(std::size_t k, std::size_t j,
                                 const std::vector<CayleySet>& family, std::size_t samples,
                                 std::uint64_t seed, double tol = 1e-12);

}  // namespace quatsp
