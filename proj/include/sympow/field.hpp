#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "sympow/error.hpp"

namespace sympow {

// Coefficient field descriptor. modulus == 0 selects the rationals,
// otherwise the prime field F_p (ring construction enforces p prime, p > 2).
struct FieldSpec {
    std::uint64_t modulus = 0;

    bool rational() const { return modulus == 0; }
    bool operator==(const FieldSpec&) const = default;

    std::string str() const
    {
        return rational() ? "QQ" : "Fp(" + std::to_string(modulus) + ")";
    }
};

// Deterministic Miller-Rabin, exact for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

// Exact field element, runtime-tagged by the modulus so that polynomials and
// every downstream module stay non-templated. Rationals live in a gmp
// mpq_class (always canonicalized by gmp); prime-field values are canonical
// residues in [0, p) with __uint128 products.
class Coef {
public:
    Coef() = default; // rational zero; containers only

    static Coef zero(const FieldSpec& f) { return from_long(0, f); }
    static Coef one(const FieldSpec& f) { return from_long(1, f); }
    static Coef from_long(long v, const FieldSpec& f);
    // Reduces a rational into the field; throws DomainError when the
    // denominator vanishes mod p ("coefficient not in field").
    static Coef from_mpq(const mpq_class& q, const FieldSpec& f);

    FieldSpec field() const { return FieldSpec{p_}; }
    bool is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
    bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }
    // True for rational values with sgn < 0; Fp residues are never negative.
    bool is_negative() const { return p_ == 0 && sgn(q_) < 0; }

    Coef operator+(const Coef& o) const;
    Coef operator-(const Coef& o) const;
    Coef operator*(const Coef& o) const;
    Coef operator/(const Coef& o) const { return *this * o.inv(); }
    Coef operator-() const;
    Coef inv() const; // throws DomainError on zero

    bool operator==(const Coef& o) const;
    bool operator!=(const Coef& o) const { return !(*this == o); }

    const mpq_class& rational_value() const; // throws unless field is QQ
    std::uint64_t residue() const { return r_; }

    // Canonical text: "a" or "a/b" over QQ (minus sign up front), the
    // residue over Fp.
    std::string str() const;

private:
    mpq_class q_;
    std::uint64_t r_ = 0;
    std::uint64_t p_ = 0;

    void require_same_field(const Coef& o) const;
};

} // namespace sympow
