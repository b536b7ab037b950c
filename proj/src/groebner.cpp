#include "sympow/groebner.hpp"

#include <algorithm>
#include <set>

#include "guard_internal.hpp"
#include "sympow/error.hpp"

namespace sympow {

namespace {

using detail::GuardState;

// Full tail reduction against a fixed list; the workhorse for both the GB
// loop and the public normal_form.
Poly reduce_full(const Poly& p, const std::vector<Poly>& basis, GuardState& guard, GbStats& stats)
{
    const Ring& ring = p.ring();
    Poly r = p;
    std::vector<Term> kept;
    while (!r.is_zero()) {
        guard.tick();
        const Term& lt = r.lead();
        guard.check_degree(lt.m.deg);
        const Poly* reducer = nullptr;
        for (const Poly& g : basis)
            if (mono_divides(g.lead().m, lt.m)) {
                reducer = &g;
                break;
            }
        if (reducer) {
            ++stats.reduction_steps;
            Coef c = lt.c / reducer->lead().c;
            Monomial q = *mono_quot(lt.m, reducer->lead().m);
            r = r - reducer->times_term(c, q);
        } else {
            kept.push_back(lt);
            r = r - Poly::term(ring, lt.c, lt.m);
        }
    }
    return Poly::from_terms(ring, std::move(kept));
}

struct Pair {
    int i, j;
    Monomial lcm;
};

struct PairCmp {
    const Ring* ring;
    bool operator()(const Pair& a, const Pair& b) const
    {
        if (a.lcm.deg != b.lcm.deg)
            return a.lcm.deg < b.lcm.deg;
        if (int c = ring->cmp(a.lcm, b.lcm))
            return c < 0;
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    }
};

Poly s_poly(const Poly& f, const Poly& g)
{
    Monomial l = mono_lcm(f.lead().m, g.lead().m);
    Monomial uf = *mono_quot(l, f.lead().m);
    Monomial ug = *mono_quot(l, g.lead().m);
    return f.times_term(f.lead().c.inv(), uf) - g.times_term(g.lead().c.inv(), ug);
}

// The unique reduced basis from a (possibly redundant) Groebner basis:
// discard generators with divisible leading monomials, tail-reduce each
// survivor against the others, sort by descending leading monomial.
std::vector<Poly> interreduce(std::vector<Poly> g, const Ring& ring, GuardState& guard,
                              GbStats& stats)
{
    std::sort(g.begin(), g.end(),
              [&ring](const Poly& a, const Poly& b) { return ring.cmp(a.lead().m, b.lead().m) < 0; });
    std::vector<Poly> kept;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j)
                continue;
            const Monomial& mi = g[i].lead().m;
            const Monomial& mj = g[j].lead().m;
            if (mono_divides(mj, mi) && (!(mi == mj) || j < i))
                redundant = true;
        }
        if (!redundant)
            kept.push_back(g[i]);
    }
    std::vector<Poly> out;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Poly> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i)
                others.push_back(kept[j]);
        out.push_back(reduce_full(kept[i], others, guard, stats).monic());
    }
    std::sort(out.begin(), out.end(),
              [&ring](const Poly& a, const Poly& b) { return ring.cmp(a.lead().m, b.lead().m) > 0; });
    return out;
}

} // namespace

GroebnerBasis groebner(const std::vector<Poly>& gens, const GuardLimits& guard_limits)
{
    Ring ring;
    std::vector<Poly> g;
    for (const Poly& p : gens) {
        if (!ring.valid())
            ring = p.ring();
        else
            require_same_ring(ring, p.ring(), "groebner");
        if (!p.is_zero())
            g.push_back(p.monic());
    }
    GroebnerBasis out;
    out.ring = ring;
    if (g.empty()) {
        if (!ring.valid())
            throw DomainError("groebner: no generators and no ring");
        return out; // zero ideal
    }

    GuardState guard{guard_limits};
    for (const Poly& p : g)
        guard.check_degree(static_cast<std::uint32_t>(p.degree()));

    PairCmp cmp{&ring};
    std::set<Pair, PairCmp> queue(cmp);

    // Gebauer-Moeller update: fold generator t into the pair set.
    auto update_pairs = [&](int t) {
        const Monomial& mt = g[t].lead().m;
        std::vector<Pair> fresh;
        for (int i = 0; i < t; ++i) {
            ++out.stats.pairs_considered;
            fresh.push_back({i, t, mono_lcm(g[i].lead().m, mt)});
        }
        // M: drop (i,t) when some other new lcm strictly divides its lcm.
        std::vector<bool> drop(fresh.size(), false);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[a])
                    continue;
                if (!(fresh[b].lcm == fresh[a].lcm) && mono_divides(fresh[b].lcm, fresh[a].lcm)
                    && !drop[b]) {
                    drop[a] = true;
                }
            }
        // F: among equal lcms keep one representative; prefer dropping the
        // whole class when some member has coprime leading monomials
        // (Buchberger's first criterion).
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a])
                continue;
            bool coprime_in_class = false;
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (drop[b] || !(fresh[b].lcm == fresh[a].lcm))
                    continue;
                if (mono_gcd(g[fresh[b].i].lead().m, mt).is_one())
                    coprime_in_class = true;
            }
            bool first = true;
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (drop[b] || !(fresh[b].lcm == fresh[a].lcm) || b == a)
                    continue;
                if (b < a)
                    first = false;
            }
            if (coprime_in_class)
                drop[a] = true;
            else if (!first)
                drop[a] = true;
        }
        // B: retire old pairs whose lcm is strictly reducible by the new
        // leading monomial.
        for (auto it = queue.begin(); it != queue.end();) {
            const Pair& p = *it;
            if (mono_divides(mt, p.lcm) && !(mono_lcm(g[p.i].lead().m, mt) == p.lcm)
                && !(mono_lcm(g[p.j].lead().m, mt) == p.lcm)) {
                it = queue.erase(it);
                ++out.stats.pairs_eliminated;
            } else {
                ++it;
            }
        }
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) {
                ++out.stats.pairs_eliminated;
                continue;
            }
            queue.insert(fresh[a]);
        }
    };

    for (int t = 1; t < static_cast<int>(g.size()); ++t)
        update_pairs(t);

    while (!queue.empty()) {
        Pair p = *queue.begin();
        queue.erase(queue.begin());
        guard.check_degree(p.lcm.deg);
        ++out.stats.pairs_reduced;
        Poly h = reduce_full(s_poly(g[p.i], g[p.j]), g, guard, out.stats);
        if (h.is_zero()) {
            ++out.stats.zero_reductions;
            continue;
        }
        g.push_back(h.monic());
        update_pairs(static_cast<int>(g.size()) - 1);
    }

    out.gens = interreduce(std::move(g), ring, guard, out.stats);
    out.stats.max_degree = std::max(out.stats.max_degree, guard.max_degree_seen);
    return out;
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb, const GuardLimits& guard_limits)
{
    require_same_ring(p.ring(), gb.ring, "normal_form");
    GuardState guard{guard_limits};
    GbStats scratch;
    return reduce_full(p, gb.gens, guard, scratch);
}

bool gb_contains(const GroebnerBasis& gb, const Poly& p)
{
    return normal_form(p, gb).is_zero();
}

bool verify_buchberger(const GroebnerBasis& gb)
{
    const auto& g = gb.gens;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!g[i].lead().c.is_one())
            return false;
        for (const Term& t : g[i].terms())
            for (std::size_t j = 0; j < g.size(); ++j)
                if (j != i && mono_divides(g[j].lead().m, t.m))
                    return false; // not reduced
    }
    GuardLimits generous{.max_degree = 0xffffffff, .soft_seconds = 3600.0};
    GuardState guard{generous};
    GbStats scratch;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!reduce_full(s_poly(g[i], g[j]), g, guard, scratch).is_zero())
                return false;
    return true;
}

} // namespace sympow
