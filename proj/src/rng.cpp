#include "quatsp/rng.hpp"

#include <cmath>
#include <numbers>

namespace quatsp {

namespace {

// splitmix64 finalizer (Steele, Lea & Flood; the java.util.SplittableRandom
// mixer). Bijective on 64-bit words, strong avalanche.
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) : eng_(mix64(seed + kGolden)) {}

double RandomStream::uniform() {
    // Top 53 bits -> [0, 1) on the full double grid.
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double RandomStream::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller; 1 - uniform() keeps the log argument in (0, 1].
    const double r = std::sqrt(-2.0 * std::log(1.0 - uniform()));
    const double t = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
}

Quaternion RandomStream::gaussian_quaternion() {
    const double w = gaussian();
    const double x = gaussian();
    const double y = gaussian();
    const double z = gaussian();
    return {w, x, y, z};
}

QMatrix RandomStream::gaussian_matrix(std::size_t rows, std::size_t cols) {
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = gaussian_quaternion();
    return m;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + (index + 1) * kGolden);
}

}  // namespace quatsp
