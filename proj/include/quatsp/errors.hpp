#pragma once

#include <stdexcept>
#include <string>

namespace quatsp {

// A numerical self-check failed (non-convergence, residual above tolerance,
// inconsistent classification). Indicates input outside the supported regime
// or a genuine defect; never swallowed internally.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input that was required to satisfy A*adjoint(A) = I (or a frame equation)
// does not, beyond the stated tolerance.
struct NotSymplecticError : std::runtime_error {
    explicit NotSymplecticError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed file or JSON input.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace quatsp
