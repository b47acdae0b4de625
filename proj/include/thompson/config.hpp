#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace thompson {

// Global cap on iterative searches (period unrolling, prefix lengthening,
// long-division cycles).  Overridable through THOMPSON_MAX_DEPTH so that
// runaway inputs turn into clean errors instead of unbounded loops.
inline long max_depth() {
    static const long value = [] {
        const char* env = std::getenv("THOMPSON_MAX_DEPTH");
        if (env == nullptr) return 4096L;
        long v = std::strtol(env, nullptr, 10);
        return v > 0 ? v : 4096L;
    }();
    return value;
}

inline void check_depth(long iteration, const char* what) {
    if (iteration > max_depth())
        throw std::domain_error(std::string(what) +
                                ": unrolling depth exceeds THOMPSON_MAX_DEPTH");
}

// Parse failures (bad grammar) are distinct from domain errors so the CLI
// can map them to different exit codes.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace thompson
