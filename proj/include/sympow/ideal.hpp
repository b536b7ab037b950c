#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "sympow/groebner.hpp"

namespace sympow {

// Immutable ideal of a polynomial ring, a cheap shared handle like Ring.
// Carries its generators and a lazily computed reduced Groebner basis under
// the ring's active order (mutex-guarded, so concurrent reads are safe).
class Ideal {
public:
    Ideal() = default;

    // Zero generators are dropped; an empty list is the zero ideal.
    static Ideal make(Ring r, std::vector<Poly> gens);

    const Ring& ring() const;
    const std::vector<Poly>& gens() const;
    bool homogeneous() const;
    bool is_zero() const;
    bool is_unit(const GuardLimits& guard = {}) const; // contains 1
    bool valid() const { return d_ != nullptr; }

    // Reduced basis under ring().order(); computed once, then cached.
    const GroebnerBasis& basis(const GuardLimits& guard = {}) const;
    bool contains(const Poly& p, const GuardLimits& guard = {}) const;

    std::string str() const; // "(g1, g2, ...)"

private:
    struct Data;
    std::shared_ptr<Data> d_;
};

// The irrelevant maximal ideal (x_1, ..., x_d).
Ideal irrelevant_ideal(const Ring& r);

// Ideal generated by all n-fold products of the generators; n >= 1.
Ideal power(const Ideal& I, unsigned n, const GuardLimits& guard = {});

// I with the same generators viewed under a different monomial order.
Ideal reorder(const Ideal& I, const MonomialOrder& order);

// Intersection via one auxiliary variable: eliminate t from t*I + (1-t)*J.
Ideal intersect(const Ideal& I, const Ideal& J, const GuardLimits& guard = {});

// (I : J) = { r : rJ is inside I }, via intersect-and-divide per generator.
Ideal colon(const Ideal& I, const Ideal& J, const GuardLimits& guard = {});

// (I : J^infinity) together with the stabilization exponent, the least s
// with (I : J^s) = (I : J^{s+1}). Saturated input gives s = 0.
struct Saturation {
    Ideal ideal;
    int exponent = 0;
};
Saturation saturate(const Ideal& I, const Ideal& J, const GuardLimits& guard = {});

// I intersected with the subring on the last d-k variables; the result lives
// in that smaller ring. Requires 0 < k < d.
Ideal eliminate(const Ideal& I, int k, const GuardLimits& guard = {});

// Equality as ideals: identical reduced bases under a common order.
bool equal(const Ideal& I, const Ideal& J, const GuardLimits& guard = {});

// Graded Nakayama pruning: mu(I) and a minimal homogeneous generating set.
// Generators are scanned by ascending degree (input order on ties) and
// dropped when contained in the ideal of the others plus m*I.
struct MinimalGens {
    std::size_t mu = 0;
    std::vector<Poly> gens;
};
MinimalGens min_gens(const Ideal& I, const GuardLimits& guard = {});

// dim(R/I) by the combinatorial dimension of the initial ideal: the largest
// variable subset S with no leading monomial supported inside S.
struct IdealProfile {
    long dim = 0;
    long height = 0;       // nvars - dim
    std::size_t mu = 0;    // graded count; 0 when I is not homogeneous
    bool homogeneous = false;
};
IdealProfile dimension(const Ideal& I, const GuardLimits& guard = {});

} // namespace sympow
