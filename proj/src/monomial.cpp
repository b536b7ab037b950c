#include "sympow/monomial.hpp"

namespace sympow {

Monomial mono_one()
{
    return {};
}

Monomial mono_var(int i, int exp)
{
    Monomial m;
    m.e[i] = static_cast<std::uint16_t>(exp);
    m.deg = static_cast<std::uint32_t>(exp);
    return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b)
{
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) {
        std::uint32_t s = std::uint32_t(a.e[i]) + b.e[i];
        if (s > 0xffff)
            throw Error("monomial exponent overflow (uint16)");
        m.e[i] = static_cast<std::uint16_t>(s);
    }
    m.deg = a.deg + b.deg;
    return m;
}

Monomial mono_pow(const Monomial& a, unsigned n)
{
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) {
        std::uint64_t s = std::uint64_t(a.e[i]) * n;
        if (s > 0xffff)
            throw Error("monomial exponent overflow (uint16)");
        m.e[i] = static_cast<std::uint16_t>(s);
    }
    m.deg = a.deg * n;
    return m;
}

bool mono_divides(const Monomial& a, const Monomial& b)
{
    if (a.deg > b.deg)
        return false;
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] > b.e[i])
            return false;
    return true;
}

std::optional<Monomial> mono_quot(const Monomial& b, const Monomial& a)
{
    if (!mono_divides(a, b))
        return std::nullopt;
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i)
        m.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
    m.deg = b.deg - a.deg;
    return m;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b)
{
    Monomial m;
    std::uint32_t d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        m.e[i] = std::max(a.e[i], b.e[i]);
        d += m.e[i];
    }
    m.deg = d;
    return m;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b)
{
    Monomial m;
    std::uint32_t d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        m.e[i] = std::min(a.e[i], b.e[i]);
        d += m.e[i];
    }
    m.deg = d;
    return m;
}

std::string MonomialOrder::str() const
{
    switch (kind) {
    case OrderKind::Lex:
        return "lex";
    case OrderKind::GrLex:
        return "graded-lex";
    case OrderKind::GrevLex:
        return "graded-reverse-lex";
    case OrderKind::Elim:
        return "block-elimination(" + std::to_string(block) + ")";
    }
    return "?";
}

namespace {

int cmp_lex(const Monomial& a, const Monomial& b, int lo, int hi)
{
    for (int i = lo; i < hi; ++i)
        if (a.e[i] != b.e[i])
            return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

// Graded-reverse-lex restricted to the variable window [lo, hi): higher
// block degree wins; on ties the *last* differing variable decides, with the
// smaller exponent there being the larger monomial.
int cmp_grevlex(const Monomial& a, const Monomial& b, int lo, int hi)
{
    std::uint32_t da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db)
        return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i)
        if (a.e[i] != b.e[i])
            return a.e[i] > b.e[i] ? -1 : 1;
    return 0;
}

} // namespace

int mono_cmp(const Monomial& a, const Monomial& b, int nvars, const MonomialOrder& ord)
{
    switch (ord.kind) {
    case OrderKind::Lex:
        return cmp_lex(a, b, 0, nvars);
    case OrderKind::GrLex:
        if (a.deg != b.deg)
            return a.deg < b.deg ? -1 : 1;
        return cmp_lex(a, b, 0, nvars);
    case OrderKind::GrevLex:
        if (a.deg != b.deg)
            return a.deg < b.deg ? -1 : 1;
        for (int i = nvars - 1; i >= 0; --i)
            if (a.e[i] != b.e[i])
                return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    case OrderKind::Elim: {
        if (int c = cmp_grevlex(a, b, 0, ord.block))
            return c;
        return cmp_grevlex(a, b, ord.block, nvars);
    }
    }
    return 0;
}

} // namespace sympow
