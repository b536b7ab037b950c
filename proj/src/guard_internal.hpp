#pragma once

#include <chrono>
#include <string>

#include "sympow/error.hpp"
#include "sympow/groebner.hpp"

namespace sympow::detail {

// Shared enforcement of GuardLimits across basis and resolution engines:
// hard total-degree bound on every monomial touched, soft wall-clock budget
// polled between reduction steps.
struct GuardState {
    const GuardLimits& limits;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::size_t ticks = 0;
    std::uint32_t max_degree_seen = 0;

    explicit GuardState(const GuardLimits& l) : limits(l) {}

    void check_degree(std::uint32_t deg)
    {
        if (deg > max_degree_seen)
            max_degree_seen = deg;
        if (deg > limits.max_degree)
            throw GuardAbort("degree guard: total degree " + std::to_string(deg)
                             + " exceeds bound " + std::to_string(limits.max_degree));
    }

    void tick()
    {
        if ((++ticks & 0xff) == 0) {
            double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                                 .count();
            if (elapsed > limits.soft_seconds)
                throw GuardAbort("time guard: computation exceeded "
                                 + std::to_string(limits.soft_seconds) + "s soft budget");
        }
    }
};

} // namespace sympow::detail
