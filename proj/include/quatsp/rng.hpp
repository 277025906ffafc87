#pragma once

#include <cstdint>
#include <random>

#include "quatsp/qmatrix.hpp"

namespace quatsp {

// Deterministic random stream. The Gaussian path is implemented on top of the
// raw 64-bit engine output (53-bit uniforms + Box-Muller) rather than
// std::normal_distribution, whose output sequence is implementation-defined;
// a fixed seed therefore reproduces bit-identical samples everywhere.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    double uniform();   // [0, 1)
    double gaussian();  // N(0, 1)
    Quaternion gaussian_quaternion();
    QMatrix gaussian_matrix(std::size_t rows, std::size_t cols);

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Stateless per-index substream seed (splitmix64 output no. index+1 for the
// given base seed). Workers drawing sample i from RandomStream(derive_seed(
// seed, i)) produce results independent of how samples are partitioned.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace quatsp
