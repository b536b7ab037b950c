#include "sympow/poly.hpp"

#include <algorithm>
#include <map>

namespace sympow {

void require_same_ring(const Ring& a, const Ring& b, const char* what)
{
    if (!a.same(b))
        throw DomainError(std::string("ring mismatch in ") + what + ": " + a.str() + " vs " + b.str());
}

Poly Poly::constant(const Ring& r, const Coef& c)
{
    return term(r, c, mono_one());
}

Poly Poly::term(const Ring& r, const Coef& c, const Monomial& m)
{
    Poly p(r);
    if (!c.is_zero())
        p.t_.push_back({c, m});
    return p;
}

Poly Poly::variable(const Ring& r, int i)
{
    return term(r, Coef::one(r.field()), mono_var(i));
}

Poly Poly::from_terms(const Ring& r, std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(),
              [&r](const Term& a, const Term& b) { return r.cmp(a.m, b.m) > 0; });
    Poly p(r);
    for (auto& t : terms) {
        if (!p.t_.empty() && p.t_.back().m == t.m)
            p.t_.back().c = p.t_.back().c + t.c;
        else
            p.t_.push_back(std::move(t));
    }
    p.finalize_sorted();
    return p;
}

void Poly::finalize_sorted()
{
    std::erase_if(t_, [](const Term& t) { return t.c.is_zero(); });
    homogeneous_ = true;
    for (const auto& t : t_)
        if (t.m.deg != t_[0].m.deg) {
            homogeneous_ = false;
            break;
        }
}

long Poly::degree() const
{
    long d = -1;
    for (const auto& t : t_)
        d = std::max(d, static_cast<long>(t.m.deg));
    return d;
}

const Term& Poly::lead() const
{
    if (t_.empty())
        throw DomainError("leading term of the zero polynomial");
    return t_[0];
}

Poly Poly::operator+(const Poly& o) const
{
    require_same_ring(ring_, o.ring_, "poly addition");
    Poly p(ring_);
    p.t_.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        int c = ring_.cmp(t_[i].m, o.t_[j].m);
        if (c > 0)
            p.t_.push_back(t_[i++]);
        else if (c < 0)
            p.t_.push_back(o.t_[j++]);
        else {
            p.t_.push_back({t_[i].c + o.t_[j].c, t_[i].m});
            ++i;
            ++j;
        }
    }
    for (; i < t_.size(); ++i)
        p.t_.push_back(t_[i]);
    for (; j < o.t_.size(); ++j)
        p.t_.push_back(o.t_[j]);
    p.finalize_sorted();
    return p;
}

Poly Poly::operator-(const Poly& o) const
{
    return *this + (-o);
}

Poly Poly::operator-() const
{
    Poly p = *this;
    for (auto& t : p.t_)
        t.c = -t.c;
    return p;
}

Poly Poly::scaled(const Coef& c) const
{
    if (c.is_zero())
        return Poly(ring_);
    Poly p = *this;
    for (auto& t : p.t_)
        t.c = t.c * c;
    return p;
}

Poly Poly::monic() const
{
    return scaled(lead().c.inv());
}

Poly Poly::times_term(const Coef& c, const Monomial& m) const
{
    if (c.is_zero())
        return Poly(ring_);
    Poly p(ring_);
    p.t_.reserve(t_.size());
    for (const auto& t : t_)
        p.t_.push_back({t.c * c, mono_mul(t.m, m)});
    p.homogeneous_ = homogeneous_;
    return p;
}

Poly Poly::operator*(const Poly& o) const
{
    require_same_ring(ring_, o.ring_, "poly multiplication");
    auto desc = [this](const Monomial& a, const Monomial& b) { return ring_.cmp(a, b) > 0; };
    std::map<Monomial, Coef, decltype(desc)> acc(desc);
    for (const auto& a : t_)
        for (const auto& b : o.t_) {
            Monomial m = mono_mul(a.m, b.m);
            Coef c = a.c * b.c;
            auto [it, fresh] = acc.try_emplace(m, c);
            if (!fresh)
                it->second = it->second + c;
        }
    Poly p(ring_);
    p.t_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero())
            p.t_.push_back({c, m});
    p.finalize_sorted();
    return p;
}

Poly Poly::pow(unsigned n) const
{
    Poly acc = Poly::constant(ring_, Coef::one(ring_.field()));
    Poly base = *this;
    while (n) {
        if (n & 1)
            acc = acc * base;
        base = n > 1 ? base * base : base;
        n >>= 1;
    }
    return acc;
}

bool Poly::operator==(const Poly& o) const
{
    if (!ring_.same(o.ring_))
        return false;
    return t_ == o.t_;
}

Poly Poly::reordered(const Ring& target) const
{
    if (!ring_.same_vars(target))
        throw DomainError("reordered() requires identical variables");
    std::vector<Term> ts = t_;
    return from_terms(target, std::move(ts));
}

Poly Poly::mapped(const Ring& target, const std::vector<int>& var_map) const
{
    std::vector<Term> ts;
    ts.reserve(t_.size());
    for (const auto& t : t_) {
        Monomial m;
        for (int i = 0; i < ring_.nvars(); ++i) {
            if (t.m.e[i] == 0)
                continue;
            int j = var_map[i];
            if (j < 0)
                throw DomainError("mapped(): monomial uses a variable absent from the target ring");
            m.e[j] = t.m.e[i];
        }
        m.deg = t.m.deg;
        ts.push_back({t.c, m});
    }
    return from_terms(target, std::move(ts));
}

std::string Poly::str() const
{
    if (t_.empty())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < t_.size(); ++k) {
        const Term& t = t_[k];
        Coef mag = t.c.is_negative() ? -t.c : t.c;
        if (k == 0)
            out += t.c.is_negative() ? "-" : "";
        else
            out += t.c.is_negative() ? " - " : " + ";
        std::string mono;
        for (int i = 0; i < ring_.nvars(); ++i) {
            if (t.m.e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += ring_.vars()[i];
            if (t.m.e[i] > 1)
                mono += "^" + std::to_string(t.m.e[i]);
        }
        if (mono.empty())
            out += mag.str();
        else if (mag.is_one())
            out += mono;
        else
            out += mag.str() + "*" + mono;
    }
    return out;
}

Poly substitute(const Poly& p, const std::vector<Poly>& images)
{
    if (static_cast<int>(images.size()) != p.ring().nvars())
        throw DomainError("substitute(): need exactly one image per variable");
    for (const auto& f : images)
        require_same_ring(images[0].ring(), f.ring(), "substitute images");
    const Ring& target = images[0].ring();

    // Memoize image powers; exponents repeat across terms constantly.
    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](int i, unsigned e) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty())
            cache.push_back(Poly::constant(target, Coef::one(target.field())));
        while (cache.size() <= e)
            cache.push_back(cache.back() * images[i]);
        return cache[e];
    };

    if (!(p.ring().field() == target.field()))
        throw DomainError("substitute(): source and image fields differ");

    Poly acc(target);
    for (const auto& t : p.terms()) {
        Poly prod = Poly::constant(target, t.c);
        for (int i = 0; i < p.ring().nvars(); ++i)
            if (t.m.e[i] > 0)
                prod = prod * power(i, t.m.e[i]);
        acc = acc + prod;
    }
    return acc;
}

std::optional<Poly> try_exact_divide(const Poly& p, const Poly& g)
{
    require_same_ring(p.ring(), g.ring(), "exact division");
    if (g.is_zero())
        throw DomainError("division by the zero polynomial");
    Poly r = p;
    Poly q(p.ring());
    const Coef lc = g.lead().c;
    while (!r.is_zero()) {
        auto quot = mono_quot(r.lead().m, g.lead().m);
        if (!quot)
            return std::nullopt; // remainder would be nonzero
        Coef c = r.lead().c / lc;
        q = q + Poly::term(p.ring(), c, *quot);
        r = r - g.times_term(c, *quot);
    }
    return q;
}

} // namespace sympow
