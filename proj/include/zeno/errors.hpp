#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zeno {

/// Argument outside an operation's domain (negative pump power, invalid params, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Steady-state linear system has no unique solution (cavity at a pole).
class SingularSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fixed-point iteration did not reach its tolerance.
class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, std::size_t iterations, double residual)
        : std::runtime_error(what), iterations_(iterations), residual_(residual) {}

    std::size_t iterations() const noexcept { return iterations_; }
    double residual() const noexcept { return residual_; }

private:
    std::size_t iterations_;
    double residual_;
};

}  // namespace zeno
