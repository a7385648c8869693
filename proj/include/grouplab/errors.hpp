#pragma once

#include <stdexcept>
#include <string>

namespace grouplab {

// Raised when an operation would exceed a configured cap (order cap,
// subgroup-enumeration cap). The message names the cap.
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace grouplab
