#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympow/ring.hpp"

namespace sympow {

struct Term {
    Coef c;
    Monomial m;

    bool operator==(const Term&) const = default;
};

// Sparse exact multivariate polynomial: nonzero coefficients only, monomials
// strictly descending in the ring's active order. The universal currency of
// every module.
class Poly {
public:
    Poly() = default; // zero with no ring; containers/placeholders only
    explicit Poly(Ring r) : ring_(std::move(r)) {}

    static Poly constant(const Ring& r, const Coef& c);
    static Poly term(const Ring& r, const Coef& c, const Monomial& m);
    static Poly variable(const Ring& r, int i);
    // Terms in any order, duplicates allowed; sorts and combines.
    static Poly from_terms(const Ring& r, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
    bool homogeneous() const { return homogeneous_; }
    long degree() const; // max total degree, -1 for the zero polynomial
    const Term& lead() const; // throws on zero

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Coef& c) const;
    Poly monic() const; // leading coefficient 1; throws on zero
    Poly times_term(const Coef& c, const Monomial& m) const;
    Poly pow(unsigned n) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Reinterpret in a ring with the same variables under a different order.
    Poly reordered(const Ring& target) const;
    // Relocate: var i of this ring becomes var var_map[i] of the target.
    // Every monomial must land inside the target's variables.
    Poly mapped(const Ring& target, const std::vector<int>& var_map) const;

    // Deterministic print: descending terms, '*' between factors, '^' powers,
    // unit coefficients suppressed. parse_poly(ring, str()) is the identity.
    std::string str() const;

private:
    Ring ring_;
    std::vector<Term> t_;
    bool homogeneous_ = true;

    void finalize_sorted(); // drops zero coefficients, recomputes the flag
    friend Poly poly_merge_sorted(const Ring&, std::vector<Term>&&);
};

// p with variable i replaced by images[i] (all images in a common ring).
Poly substitute(const Poly& p, const std::vector<Poly>& images);

// Quotient p/g when the division is exact, nullopt otherwise.
std::optional<Poly> try_exact_divide(const Poly& p, const Poly& g);

void require_same_ring(const Ring& a, const Ring& b, const char* what);

} // namespace sympow
