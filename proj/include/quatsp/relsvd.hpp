#pragma once

#include <cstddef>
#include <vector>

#include "quatsp/qmatrix.hpp"
#include "quatsp/quaternion.hpp"

namespace quatsp {

// Block factorization of a symplectic A (n x n) relative to its bottom-right
// k x k corner. With the corner's singular values split as 1 (x ones),
// cos(thetas) and 0 (x zeros), A is
//
//   [ m*diag(1_top, cos t_i, 0_z)*l'   -m*S*b'  ]        S, S': sin(t_i)
//   [        a*S'*l'                    a*diag(1_ones, cos t_i, 0_z)*b' ]
//
// (primes denote adjoints; S places sin t_i and an identity under zero rows,
// S' is its transpose; top = n - k - angles - zeros). a, b and m, l are
// unitary of sizes k and n-k. They are not unique: any rebuild-equal choice
// is a valid factorization, so tests compare rebuilt matrices, never factors.
struct RelativeSvd {
    std::size_t n = 0;
    std::size_t k = 0;
    QMatrix a, b;  // k x k
    QMatrix m, l;  // (n-k) x (n-k)
    // Angles in (0, pi/2) from decompose (endpoints legal in hand-built
    // data); cosines descending.
    std::vector<double> thetas;
    std::size_t ones = 0;   // corner singular values at 1
    std::size_t zeros = 0;  // corner singular values at 0

    std::size_t angles() const { return thetas.size(); }
    // Unit singular values of the complementary (top-left) block.
    std::size_t complement_ones() const { return n - k - angles() - zeros; }
};

// Assemble the n x n matrix from block data. Validates only the dimension
// bookkeeping (ones + angles + zeros = k, angles + zeros <= n - k, factor
// shapes, thetas within [0, pi/2] and cosines descending); unitarity of the
// factors is the caller's contract and is what makes the output symplectic.
QMatrix rebuild(const RelativeSvd& d);

// Factor a symplectic A relative to its bottom-right k x k corner: SVD of the
// corner fixes a, b and the angle classification; the adjacent blocks then
// determine the interior columns of m and l, the rest being deterministic
// orthonormal completion. Self-checks ||rebuild - A|| and throws
// NumericalError rather than returning an inconsistent factorization.
RelativeSvd decompose(const QMatrix& a, std::size_t k, double tol = 1e-9);

// One-angle form for the corner of size 1: the unit factors of the corner
// fold into a single unit quaternion e and a column rescaling of m and l.
//
//   [ m*diag(1_{n-2}, cos theta)*l'   m*[0; -sin theta]*e ]
//   [      [0  sin theta]*l'               cos(theta)*e   ]
struct CorollaryForm {
    std::size_t n = 0;
    QMatrix m, l;        // (n-1) x (n-1)
    double theta = 0.0;  // [0, pi/2]
    Quaternion e;        // |e| = 1
};

// Requires n >= 2 (the corner must have a complement to fold into).
CorollaryForm decompose_corollary(const QMatrix& a, double tol = 1e-9);
QMatrix rebuild_corollary(const CorollaryForm& f);

}  // namespace quatsp
