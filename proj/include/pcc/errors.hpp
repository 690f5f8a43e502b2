#ifndef PCC_ERRORS_HPP
#define PCC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pcc {

// Bad user input: malformed config files, invalid distribution parameters,
// out-of-range options. Maps to CLI exit code 2.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// A numerical procedure failed its contract: Riccati residual too large,
// singular innovation covariance, quadrature rule too short for the
// requested integrand, NaN state during simulation. Maps to CLI exit code 3.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pcc

#endif
