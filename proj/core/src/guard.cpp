#include "thetakit/guard.hpp"

#include <cstdlib>

namespace thetakit {

long long enumeration_guard() {
    static const long long value = [] {
        const char* env = std::getenv("THETAKIT_GUARD_OVERRIDE");
        if (env != nullptr) {
            char* end = nullptr;
            long long v = std::strtoll(env, &end, 10);
            if (end != env && *end == '\0' && v > 0) return v;
        }
        return 10'000'000LL;
    }();
    return value;
}

void check_guard(double candidates, const std::string& what) {
    if (candidates > static_cast<double>(enumeration_guard())) {
        throw GuardExceeded("enumeration guard exceeded in " + what + ": " +
                            std::to_string(static_cast<long long>(candidates)) +
                            " candidates > guard " + std::to_string(enumeration_guard()) +
                            " (set THETAKIT_GUARD_OVERRIDE to raise)");
    }
}

} // namespace thetakit
