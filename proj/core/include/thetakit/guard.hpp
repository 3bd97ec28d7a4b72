#pragma once

#include <stdexcept>
#include <string>

namespace thetakit {

inline constexpr const char* kVersion = "0.1.0";

/// Thrown when an exhaustive enumeration would exceed the candidate guard.
/// The message names the guard so callers can raise THETAKIT_GUARD_OVERRIDE.
class GuardExceeded : public std::runtime_error {
public:
    explicit GuardExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

/// Current enumeration guard: 10^7 candidates unless raised by the
/// THETAKIT_GUARD_OVERRIDE environment variable (integer, user's risk).
long long enumeration_guard();

/// Checks `candidates <= enumeration_guard()`, else throws GuardExceeded
/// with a message naming `what` and both values.
void check_guard(double candidates, const std::string& what);

} // namespace thetakit
