#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "sympow/error.hpp"

namespace sympow {

inline constexpr int kMaxVars = 16;

// Exponent vector with cached total degree. Fixed-width small integers on
// purpose: everything in scope stays far below total degree 60, and the
// explicit overflow check turns a silent wrap into a hard error.
struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};
    std::uint32_t deg = 0;

    bool is_one() const { return deg == 0; }
    bool operator==(const Monomial&) const = default;
};

Monomial mono_one();
Monomial mono_var(int i, int exp = 1);
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_pow(const Monomial& a, unsigned n);
bool mono_divides(const Monomial& a, const Monomial& b);                 // a | b
std::optional<Monomial> mono_quot(const Monomial& b, const Monomial& a); // b / a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);

enum class OrderKind : std::uint8_t { Lex, GrLex, GrevLex, Elim };

// Total multiplicative well-order on monomials. Elim(k) is the block order
// eliminating the first k variables: graded-reverse-lex on the first block,
// ties broken by graded-reverse-lex on the remaining variables.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    int block = 0; // Elim only

    bool operator==(const MonomialOrder&) const = default;
    std::string str() const;
};

// Three-way comparison over the first nvars variables: < 0 when a < b.
int mono_cmp(const Monomial& a, const Monomial& b, int nvars, const MonomialOrder& ord);

} // namespace sympow
