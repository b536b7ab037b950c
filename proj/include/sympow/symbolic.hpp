#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympow/ideal.hpp"

namespace sympow {

// How a symbolic power is computed. None of the routes is universally
// correct, so each carries the justification under which it is exact.
enum class StrategyKind {
    SaturationAtIrrelevant,   // I^(n) = (I^n : m^infinity)
    MinimalPrimeIntersection, // I^(n) = intersection of P^n, square-free monomial only
    UserElementSaturation,    // I^(n) = (I^n : f^infinity) for a supplied f
};

// Why saturation at the irrelevant ideal returns the symbolic power.
// Only some of these are machine-checkable; the rest are recorded as
// caller assertions.
enum class Justification {
    Dim1Radical,
    LocallyCi,
    UniqueMinimalPrimeDim1Homogeneous,
    UserOverride,
};

struct SymbolicStrategy {
    StrategyKind kind = StrategyKind::SaturationAtIrrelevant;
    Justification justification = Justification::UserOverride;
    Poly user_f;               // only for UserElementSaturation
    std::string validity_note; // filled in by validation: checked vs asserted
};

std::string strategy_kind_str(StrategyKind k);
std::string justification_str(Justification j);
std::optional<StrategyKind> strategy_kind_from_str(const std::string& s);
std::optional<Justification> justification_from_str(const std::string& s);

// Checks everything checkable about the strategy/ideal combination and
// throws DomainError on a refutable mismatch. Returns a note saying what
// was verified and what remains asserted by the caller.
std::string validate_strategy(const Ideal& I, const SymbolicStrategy& s,
                              const GuardLimits& guard = {});

// The n-th symbolic power under the given strategy. The result always
// contains I^n.
Ideal symbolic_power(const Ideal& I, int n, const SymbolicStrategy& s,
                     const GuardLimits& guard = {});

// Outcome of one comparison of I^n against I^(n).
struct SymbolicReport {
    int n = 1;
    bool equal = true;
    std::optional<Poly> witness; // in I^(n) but not I^n; present iff not equal
    int sat_exponent = 0;        // stabilization exponent of (I^n : m^infinity)
    bool depth_positive = true;  // I^n already saturated at m
    SymbolicStrategy strategy;   // echoed, with the validation note filled
    std::string aborted;         // nonempty when a guard stopped this exponent
};

// Computes both powers, decides equality, and on inequality extracts the
// first minimal-degree generator of the reduced basis of I^(n) outside
// I^n (basis order breaks ties). The witness is re-verified by membership
// on both sides.
SymbolicReport compare(const Ideal& I, int n, const SymbolicStrategy& s,
                       const GuardLimits& guard = {});

// Reports for n = 1..n_max, each computed independently. A guard abort at
// one exponent is recorded in that report and the scan continues.
struct ScanResult {
    std::vector<SymbolicReport> reports;
    int first_failure = 0; // least n with equal = false, 0 when none
    std::string summary;
};

ScanResult rigidity_scan(const Ideal& I, int n_max, const SymbolicStrategy& s,
                         const GuardLimits& guard = {});

} // namespace sympow
