#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace solchaos {

/// Malformed or contradictory input configuration (file or programmatic).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested a period-based quantity for an irrational wave-vector ratio.
/// Analytic zero counting is undefined there; callers should fall back to
/// Monte Carlo estimation.
class NoPeriodError : public std::runtime_error {
public:
    explicit NoPeriodError(const std::string& what) : std::runtime_error(what) {}
};

/// Initial condition does not lie on the homoclinic orbit.
class OffOrbitError : public std::domain_error {
public:
    explicit OffOrbitError(const std::string& what) : std::domain_error(what) {}
};

/// suppression_check was handed a c0 that is not a zero of the before-config.
class NotAZeroError : public std::invalid_argument {
public:
    explicit NotAZeroError(const std::string& what) : std::invalid_argument(what) {}
};

/// Adaptive quadrature could not reach the requested tolerance within budget.
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

/// Trajectory left the escape radius during integration.
class UnboundedError : public std::runtime_error {
public:
    UnboundedError(double xi, std::size_t iteration)
        : std::runtime_error("trajectory exceeded escape radius at xi=" + std::to_string(xi)),
          xi(xi), iteration(iteration) {}
    double xi;             ///< integration variable when the guard tripped
    std::size_t iteration; ///< stroboscopic iterate reached (0 when not iterating)
};

}
