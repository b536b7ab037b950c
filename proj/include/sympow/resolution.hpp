#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sympow/ideal.hpp"

namespace sympow {

// Minimal graded free resolution of R/I over the polynomial ring R.
//
//   0 -> F_pd -> ... -> F_1 -> F_0 = R -> R/I -> 0
//
// maps[l] describes F_{l+1} -> F_l column by column: maps[l][c] is the
// image of the c-th basis element of F_{l+1}, a vector of ranks[l]
// polynomial entries. shifts[l] lists the internal degrees of the basis
// of F_l, so betti.rows[l][j] counts basis elements of F_l in degree j.
struct BettiTable {
    std::vector<std::map<long, std::size_t>> rows;

    std::size_t rank(std::size_t level) const;
    std::string str() const;
};

struct Resolution {
    Ring ring;
    BettiTable betti;
    std::vector<std::size_t> ranks; // ranks[0] == 1
    int pd = 0;                     // index of the last nonzero module
    std::vector<std::vector<long>> shifts;
    std::vector<std::vector<std::vector<Poly>>> maps;
};

// Certifies that the stored maps form a minimal complex: consecutive
// maps compose to zero and no entry has a nonzero constant part.
bool verify_resolution(const Resolution& res);

// Resolves R/I for a homogeneous proper ideal by iterated syzygy
// computation, minimalizing the generators at every level.
Resolution resolve(const Ideal& ideal, const GuardLimits& guard = {});

// depth R/I = nvars - pd(R/I), the graded Auslander-Buchsbaum identity.
int depth(const Ideal& ideal, const GuardLimits& guard = {});

enum class StronglyCm {
    YesByCriterionI,  // perfect of height two
    YesByCriterionII, // Cohen-Macaulay with at most height+2 generators
    Unknown,          // the sufficient criteria do not apply
};

std::string strongly_cm_str(StronglyCm s);

// Homological profile of R/I combining the resolution with the
// dimension data of the ideal. All predicates are exact except
// strongly_cm, which reports a sufficient certificate or Unknown.
struct PredicateSet {
    long dim = 0;
    long height = 0;
    std::size_t mu = 0;
    int pd = 0;
    int depth = 0;
    bool perfect = false;
    bool cohen_macaulay = false;
    bool complete_intersection = false;
    bool almost_complete_intersection = false;
    StronglyCm strongly_cm = StronglyCm::Unknown;
};

PredicateSet predicates(const Ideal& ideal, const GuardLimits& guard = {});

} // namespace sympow
