#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sympow/poly.hpp"

namespace sympow {

struct GbStats {
    std::size_t pairs_considered = 0; // S-pairs created
    std::size_t pairs_eliminated = 0; // Gebauer-Moeller / product-criterion discards
    std::size_t pairs_reduced = 0;    // S-polynomials actually reduced
    std::size_t zero_reductions = 0;
    std::size_t reduction_steps = 0;
    std::uint32_t max_degree = 0; // highest total degree touched
};

// Resource guards. The degree bound aborts anything that touches a monomial
// of larger total degree; the time budget is a soft per-call wall-clock cap
// checked between reduction steps. Both throw GuardAbort.
struct GuardLimits {
    std::uint32_t max_degree = 80;
    double soft_seconds = 60.0;
};

// Unique reduced Groebner basis under the order of `ring`: generators monic,
// interreduced, sorted by descending leading monomial.
struct GroebnerBasis {
    Ring ring;
    std::vector<Poly> gens;
    GbStats stats;
};

// Buchberger with normal pair selection (minimal lcm degree first) and
// Gebauer-Moeller pair elimination; full tail reduction throughout.
GroebnerBasis groebner(const std::vector<Poly>& gens, const GuardLimits& guard = {});

// Remainder of full multivariate division by gb; idempotent, and zero
// exactly on ideal members.
Poly normal_form(const Poly& p, const GroebnerBasis& gb, const GuardLimits& guard = {});

bool gb_contains(const GroebnerBasis& gb, const Poly& p);

// Independent certificate: re-derives every S-polynomial of the output and
// reduces it by plain division (none of the pair-selection bookkeeping), and
// checks monic/interreduced shape. True iff the basis passes.
bool verify_buchberger(const GroebnerBasis& gb);

} // namespace sympow
