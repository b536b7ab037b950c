#include "sympow/field.hpp"

namespace sympow {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t acc = 1 % p;
    while (e) {
        if (e & 1)
            acc = mulmod(acc, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return acc;
}

// Residue of a possibly huge integer; mpz handles the division exactly.
std::uint64_t residue_of_mpz(const mpz_class& z, std::uint64_t p)
{
    mpz_class pz;
    mpz_import(pz.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    mpz_class m = z % pz;
    if (m < 0)
        m += pz;
    return m.get_ui();
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p)
{
    // p is prime and a != 0 mod p, so Fermat does it.
    return powmod(a % p, p - 2, p);
}

} // namespace

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0)
            return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is exact for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

Coef Coef::from_long(long v, const FieldSpec& f)
{
    Coef c;
    c.p_ = f.modulus;
    if (f.rational()) {
        c.q_ = v;
    } else {
        long m = v % static_cast<long>(f.modulus);
        if (m < 0)
            m += static_cast<long>(f.modulus);
        c.r_ = static_cast<std::uint64_t>(m);
    }
    return c;
}

Coef Coef::from_mpq(const mpq_class& q, const FieldSpec& f)
{
    Coef c;
    c.p_ = f.modulus;
    if (f.rational()) {
        c.q_ = q;
        c.q_.canonicalize();
    } else {
        std::uint64_t den = residue_of_mpz(q.get_den(), f.modulus);
        if (den == 0)
            throw DomainError("coefficient not in field: denominator of " + q.get_str()
                              + " vanishes mod " + std::to_string(f.modulus));
        std::uint64_t num = residue_of_mpz(q.get_num(), f.modulus);
        c.r_ = mulmod(num, invmod(den, f.modulus), f.modulus);
    }
    return c;
}

void Coef::require_same_field(const Coef& o) const
{
    if (p_ != o.p_)
        throw DomainError("coefficient field mismatch: " + field().str() + " vs " + o.field().str());
}

Coef Coef::operator+(const Coef& o) const
{
    require_same_field(o);
    Coef c;
    c.p_ = p_;
    if (p_ == 0) {
        c.q_ = q_ + o.q_;
    } else {
        std::uint64_t s = r_ + o.r_; // p < 2^63 is implied by primality checks upstream; no wrap
        c.r_ = s >= p_ ? s - p_ : s;
    }
    return c;
}

Coef Coef::operator-(const Coef& o) const
{
    return *this + (-o);
}

Coef Coef::operator*(const Coef& o) const
{
    require_same_field(o);
    Coef c;
    c.p_ = p_;
    if (p_ == 0)
        c.q_ = q_ * o.q_;
    else
        c.r_ = mulmod(r_, o.r_, p_);
    return c;
}

Coef Coef::operator-() const
{
    Coef c;
    c.p_ = p_;
    if (p_ == 0)
        c.q_ = -q_;
    else
        c.r_ = r_ == 0 ? 0 : p_ - r_;
    return c;
}

Coef Coef::inv() const
{
    if (is_zero())
        throw DomainError("division by zero coefficient");
    Coef c;
    c.p_ = p_;
    if (p_ == 0)
        c.q_ = 1 / q_;
    else
        c.r_ = invmod(r_, p_);
    return c;
}

bool Coef::operator==(const Coef& o) const
{
    if (p_ != o.p_)
        return false;
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

const mpq_class& Coef::rational_value() const
{
    if (p_ != 0)
        throw DomainError("rational_value() on a prime-field coefficient");
    return q_;
}

std::string Coef::str() const
{
    return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

} // namespace sympow
