#include "sympow/ideal.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <optional>

#include "sympow/error.hpp"

namespace sympow {

struct Ideal::Data {
    Ring ring;
    std::vector<Poly> gens;
    bool homogeneous = true;
    mutable std::mutex lock;
    mutable std::optional<GroebnerBasis> gb;
};

Ideal Ideal::make(Ring r, std::vector<Poly> gens)
{
    if (!r.valid())
        throw DomainError("ideal over an empty ring");
    auto d = std::make_shared<Data>();
    d->ring = r;
    for (Poly& g : gens) {
        if (g.is_zero())
            continue;
        require_same_ring(r, g.ring(), "ideal generators");
        d->homogeneous = d->homogeneous && g.homogeneous();
        d->gens.push_back(std::move(g));
    }
    Ideal out;
    out.d_ = std::move(d);
    return out;
}

const Ring& Ideal::ring() const
{
    return d_->ring;
}

const std::vector<Poly>& Ideal::gens() const
{
    return d_->gens;
}

bool Ideal::homogeneous() const
{
    return d_->homogeneous;
}

bool Ideal::is_zero() const
{
    return d_->gens.empty();
}

const GroebnerBasis& Ideal::basis(const GuardLimits& guard) const
{
    std::lock_guard<std::mutex> hold(d_->lock);
    if (!d_->gb) {
        if (d_->gens.empty()) {
            GroebnerBasis empty;
            empty.ring = d_->ring;
            d_->gb = std::move(empty);
        } else {
            d_->gb = groebner(d_->gens, guard);
        }
    }
    return *d_->gb;
}

bool Ideal::contains(const Poly& p, const GuardLimits& guard) const
{
    require_same_ring(d_->ring, p.ring(), "ideal membership");
    return normal_form(p, basis(guard), guard).is_zero();
}

bool Ideal::is_unit(const GuardLimits& guard) const
{
    const auto& b = basis(guard).gens;
    return b.size() == 1 && b[0].is_constant();
}

std::string Ideal::str() const
{
    if (d_->gens.empty())
        return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < d_->gens.size(); ++i) {
        if (i)
            out += ", ";
        out += d_->gens[i].str();
    }
    return out + ")";
}

Ideal irrelevant_ideal(const Ring& r)
{
    std::vector<Poly> vars;
    for (int i = 0; i < r.nvars(); ++i)
        vars.push_back(Poly::variable(r, i));
    return Ideal::make(r, std::move(vars));
}

Ideal power(const Ideal& I, unsigned n, const GuardLimits&)
{
    if (n == 0)
        throw DomainError("power: exponent must be at least 1");
    if (n == 1 || I.is_zero())
        return I;
    const auto& g = I.gens();
    std::vector<Poly> products;
    // Multiset products: every way to pick n generators with repetition.
    auto rec = [&](auto&& self, std::size_t from, unsigned left, const Poly& partial) -> void {
        if (left == 0) {
            products.push_back(partial);
            return;
        }
        for (std::size_t i = from; i < g.size(); ++i)
            self(self, i, left - 1, partial * g[i]);
    };
    rec(rec, 0, n, Poly::constant(I.ring(), Coef::one(I.ring().field())));
    return Ideal::make(I.ring(), std::move(products));
}

Ideal reorder(const Ideal& I, const MonomialOrder& order)
{
    Ring target = I.ring().with_order(order);
    std::vector<Poly> gens;
    for (const Poly& g : I.gens())
        gens.push_back(g.reordered(target));
    return Ideal::make(target, std::move(gens));
}

namespace {

// A variable name not already used by the ring: "t", then "t_", "t__", ...
std::string fresh_var_name(const Ring& r)
{
    std::string name = "t";
    while (r.var_index(name) >= 0)
        name += "_";
    return name;
}

std::vector<int> lift_map(int nvars)
{
    std::vector<int> map(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i)
        map[static_cast<std::size_t>(i)] = i + 1;
    return map;
}

std::vector<int> descend_map(int nvars_big, int k)
{
    std::vector<int> map(static_cast<std::size_t>(nvars_big), -1);
    for (int i = k; i < nvars_big; ++i)
        map[static_cast<std::size_t>(i)] = i - k;
    return map;
}

bool touches_front(const Poly& p, int k)
{
    for (const Term& t : p.terms())
        for (int i = 0; i < k; ++i)
            if (t.m.e[static_cast<std::size_t>(i)] != 0)
                return true;
    return false;
}

} // namespace

Ideal intersect(const Ideal& I, const Ideal& J, const GuardLimits& guard)
{
    const Ring& r = I.ring();
    require_same_ring(r, J.ring(), "intersect");
    if (I.is_zero() || J.is_zero())
        return Ideal::make(r, {});

    Ring big = r.prepended({fresh_var_name(r)}, MonomialOrder{OrderKind::Elim, 1});
    Poly t = Poly::variable(big, 0);
    Poly one_minus_t = Poly::constant(big, Coef::one(big.field())) - t;
    std::vector<int> up = lift_map(r.nvars());

    std::vector<Poly> mixed;
    for (const Poly& g : I.gens())
        mixed.push_back(t * g.mapped(big, up));
    for (const Poly& h : J.gens())
        mixed.push_back(one_minus_t * h.mapped(big, up));

    GroebnerBasis gb = groebner(mixed, guard);
    std::vector<int> down = descend_map(big.nvars(), 1);
    std::vector<Poly> kept;
    for (const Poly& p : gb.gens)
        if (!touches_front(p, 1))
            kept.push_back(p.mapped(r, down));
    return Ideal::make(r, std::move(kept));
}

namespace {

// (I : g) for a single nonzero g: every generator of the intersection of I
// with (g) is divisible by g, and the exact quotients generate the colon.
Ideal colon_single(const Ideal& I, const Poly& g, const GuardLimits& guard)
{
    Ideal principal = Ideal::make(I.ring(), {g});
    Ideal meet = intersect(I, principal, guard);
    std::vector<Poly> quotients;
    for (const Poly& p : meet.gens()) {
        auto q = try_exact_divide(p, g);
        if (!q)
            throw Error("colon: intersection generator not divisible by the divisor");
        quotients.push_back(std::move(*q));
    }
    return Ideal::make(I.ring(), std::move(quotients));
}

} // namespace

Ideal colon(const Ideal& I, const Ideal& J, const GuardLimits& guard)
{
    const Ring& r = I.ring();
    require_same_ring(r, J.ring(), "colon");
    if (J.is_zero()) // (I : 0) is the whole ring
        return Ideal::make(r, {Poly::constant(r, Coef::one(r.field()))});
    Ideal acc;
    for (const Poly& g : J.gens()) {
        Ideal piece = colon_single(I, g, guard);
        acc = acc.valid() ? intersect(acc, piece, guard) : piece;
    }
    return acc;
}

Saturation saturate(const Ideal& I, const Ideal& J, const GuardLimits& guard)
{
    Ideal cur = I;
    for (int s = 0; s <= 64; ++s) {
        Ideal next = colon(cur, J, guard);
        if (equal(cur, next, guard))
            return {cur, s};
        cur = next;
    }
    throw GuardAbort("saturate: no stabilization within 64 colon iterations");
}

Ideal eliminate(const Ideal& I, int k, const GuardLimits& guard)
{
    const Ring& r = I.ring();
    if (k <= 0 || k >= r.nvars())
        throw DomainError("eliminate: block size must satisfy 0 < k < nvars");
    Ring small = r.dropped_front(k, MonomialOrder{});
    if (I.is_zero())
        return Ideal::make(small, {});

    Ideal blocked = reorder(I, MonomialOrder{OrderKind::Elim, k});
    const GroebnerBasis& gb = blocked.basis(guard);
    std::vector<int> down = descend_map(r.nvars(), k);
    std::vector<Poly> kept;
    for (const Poly& p : gb.gens)
        if (!touches_front(p, k))
            kept.push_back(p.mapped(small, down));
    return Ideal::make(small, std::move(kept));
}

bool equal(const Ideal& I, const Ideal& J, const GuardLimits& guard)
{
    require_same_ring(I.ring(), J.ring(), "ideal equality");
    const auto& a = I.basis(guard).gens;
    const auto& b = J.basis(guard).gens;
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return false;
    return true;
}

MinimalGens min_gens(const Ideal& I, const GuardLimits& guard)
{
    if (!I.homogeneous())
        throw DomainError("min_gens: graded pruning needs a homogeneous ideal");
    const Ring& r = I.ring();

    std::vector<Poly> live = I.gens();
    std::stable_sort(live.begin(), live.end(),
                     [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });

    // m*I stays fixed while generators are pruned (it only depends on I).
    std::vector<Poly> m_times_I;
    for (int v = 0; v < r.nvars(); ++v)
        for (const Poly& g : I.gens())
            m_times_I.push_back(Poly::variable(r, v) * g);

    for (std::size_t i = 0; i < live.size();) {
        std::vector<Poly> others = m_times_I;
        for (std::size_t j = 0; j < live.size(); ++j)
            if (j != i)
                others.push_back(live[j]);
        GroebnerBasis gb = groebner(others, guard);
        if (normal_form(live[i], gb, guard).is_zero())
            live.erase(live.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return {live.size(), std::move(live)};
}

IdealProfile dimension(const Ideal& I, const GuardLimits& guard)
{
    const Ring& r = I.ring();
    const int d = r.nvars();
    const auto& gb = I.basis(guard).gens;
    if (!gb.empty() && gb.front().is_constant())
        throw DomainError("dimension: unit ideal has no Krull dimension");

    std::vector<std::uint32_t> support;
    for (const Poly& g : gb) {
        std::uint32_t mask = 0;
        for (int v = 0; v < d; ++v)
            if (g.lead().m.e[static_cast<std::size_t>(v)] != 0)
                mask |= 1u << v;
        support.push_back(mask);
    }

    // Largest S with no leading-monomial support inside S; d <= 16 keeps the
    // subset sweep trivial.
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << d); ++s) {
        bool free_of_lms = true;
        for (std::uint32_t mask : support)
            if ((mask & ~s) == 0) {
                free_of_lms = false;
                break;
            }
        if (free_of_lms)
            best = std::max(best, std::popcount(s));
    }

    IdealProfile out;
    out.dim = best;
    out.height = d - best;
    out.homogeneous = I.homogeneous();
    out.mu = I.homogeneous() ? min_gens(I, guard).mu : 0;
    return out;
}

} // namespace sympow
