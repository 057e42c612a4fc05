#pragma once

#include <stdexcept>
#include <string>

namespace bridge {

/// Invalid argument or precondition violation. CLI exit code 2.
struct ParameterError : std::runtime_error {
    explicit ParameterError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A numerical procedure failed to reach its tolerance. CLI exit code 3.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-finite values appeared during integration. CLI exit code 4.
/// `where` is the abscissa (or time) at which the state became non-finite.
struct BlowupError : std::runtime_error {
    double where;
    BlowupError(const std::string& msg, double where_)
        : std::runtime_error(msg + " at " + std::to_string(where_)), where(where_) {}
};

} // namespace bridge
