#include "sympow/resolution.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <utility>

#include "guard_internal.hpp"
#include "sympow/error.hpp"

namespace sympow {

namespace {

using detail::GuardState;

// Term of a free-module element: coefficient, ring monomial, basis slot.
struct MTerm {
    Coef c;
    Monomial m;
    int comp;
};

// Free-module element, terms strictly descending in the level's order.
using ModVec = std::vector<MTerm>;

// One free module of the resolution tower together with its Schreyer
// order. Module monomials compare by lifting through the leading terms of
// the generators this module resolves, bottoming out in the ring order;
// exact ties fall to the smaller basis slot.
struct Level {
    Ring ring;
    const Level* parent = nullptr; // null marks F_0 = R
    std::vector<std::pair<Monomial, int>> leads; // lm(h_i) in the parent
    std::vector<long> shifts; // internal degree of each basis slot

    std::size_t rank() const { return parent ? leads.size() : 1; }

    // Three-way comparison of u*e_i against v*e_j, positive when u*e_i wins.
    int cmp(const Monomial& u, int i, const Monomial& v, int j) const
    {
        if (!parent)
            return ring.cmp(u, v);
        int c = parent->cmp(mono_mul(u, leads[i].first), leads[i].second,
                            mono_mul(v, leads[j].first), leads[j].second);
        if (c)
            return c;
        if (i != j)
            return i < j ? 1 : -1;
        return 0;
    }
};

long internal_degree(const ModVec& v, const Level& F)
{
    if (v.empty())
        return -1;
    long d = static_cast<long>(v.front().m.deg) + F.shifts[v.front().comp];
    for (const MTerm& t : v)
        if (static_cast<long>(t.m.deg) + F.shifts[t.comp] != d)
            throw Error("resolution: module element is not homogeneous");
    return d;
}

ModVec mod_sub(const ModVec& a, const ModVec& b, const Level& F)
{
    ModVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = F.cmp(a[i].m, a[i].comp, b[j].m, b[j].comp);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back({-b[j].c, b[j].m, b[j].comp});
            ++j;
        } else {
            Coef d = a[i].c - b[j].c;
            if (!d.is_zero())
                out.push_back({d, a[i].m, a[i].comp});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i)
        out.push_back(a[i]);
    for (; j < b.size(); ++j)
        out.push_back({-b[j].c, b[j].m, b[j].comp});
    return out;
}

ModVec mod_times(const ModVec& v, const Coef& c, const Monomial& q)
{
    ModVec out;
    out.reserve(v.size());
    for (const MTerm& t : v)
        out.push_back({t.c * c, mono_mul(t.m, q), t.comp});
    return out;
}

ModVec mod_scaled(ModVec v, const Coef& c)
{
    for (MTerm& t : v)
        t.c = t.c * c;
    return v;
}

// Full tail reduction against a list with monic leading terms; a term is
// reducible only by an element in the same component. When cofactor rows
// are supplied they are updated so that element = sum cof[l]*h_l stays
// true throughout.
ModVec mod_reduce(ModVec v, const std::vector<ModVec>& basis,
                  const std::vector<std::vector<Poly>>* basis_cof, std::vector<Poly>* cof,
                  const Level& F, GuardState& guard)
{
    ModVec kept;
    while (!v.empty()) {
        guard.tick();
        const MTerm lt = v.front();
        guard.check_degree(
            static_cast<std::uint32_t>(static_cast<long>(lt.m.deg) + F.shifts[lt.comp]));
        const ModVec* red = nullptr;
        std::size_t ri = 0;
        for (std::size_t t = 0; t < basis.size(); ++t) {
            const ModVec& g = basis[t];
            if (g.front().comp == lt.comp && mono_divides(g.front().m, lt.m)) {
                red = &g;
                ri = t;
                break;
            }
        }
        if (red) {
            Monomial q = *mono_quot(lt.m, red->front().m);
            v = mod_sub(v, mod_times(*red, lt.c, q), F);
            if (cof) {
                const std::vector<Poly>& bc = (*basis_cof)[ri];
                for (std::size_t l = 0; l < cof->size(); ++l)
                    if (!bc[l].is_zero())
                        (*cof)[l] = (*cof)[l] - bc[l].times_term(lt.c, q);
            }
        } else {
            kept.push_back(lt);
            v.erase(v.begin());
        }
    }
    return kept;
}

struct SPair {
    long deg; // internal degree of the pair lcm
    int i, j;
    Monomial lcm;
};

struct SPairCmp {
    bool operator()(const SPair& a, const SPair& b) const
    {
        if (a.deg != b.deg)
            return a.deg < b.deg;
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    }
};

// Generators of the syzygy module of H inside R^k, H monic and minimal.
// Buchberger with cofactor rows seeded at the identity: an S-pair that
// reduces to zero hands over its cofactor row as a syzygy, an S-pair that
// survives joins the basis. Every same-component pair of the final basis
// is processed; pair-elimination criteria discard syzygies, so none are
// applied here.
std::vector<std::vector<Poly>> syzygy_generators(const std::vector<ModVec>& H, const Level& F,
                                                 GuardState& guard)
{
    const Ring& ring = F.ring;
    const std::size_t k = H.size();
    const Coef one = Coef::one(ring.field());
    std::vector<std::vector<Poly>> out;

    auto unit_row = [&](std::size_t i) {
        std::vector<Poly> row(k, Poly(ring));
        row[i] = Poly::constant(ring, one);
        return row;
    };

    // Single-term generators: every S-polynomial cancels outright, so the
    // syzygies are exactly the pairwise rows (lcm/m_i) e_i - (lcm/m_j) e_j
    // over equal components. This covers the first level of a monomial
    // ideal without running the engine.
    bool all_single = true;
    for (const ModVec& h : H)
        if (h.size() != 1)
            all_single = false;
    if (all_single) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                if (H[i].front().comp != H[j].front().comp)
                    continue;
                Monomial l = mono_lcm(H[i].front().m, H[j].front().m);
                guard.check_degree(static_cast<std::uint32_t>(
                    static_cast<long>(l.deg) + F.shifts[H[i].front().comp]));
                std::vector<Poly> row(k, Poly(ring));
                row[i] = Poly::term(ring, one, *mono_quot(l, H[i].front().m));
                row[j] = Poly::term(ring, -one, *mono_quot(l, H[j].front().m));
                out.push_back(std::move(row));
            }
        return out;
    }

    std::vector<ModVec> gv = H;
    std::vector<std::vector<Poly>> gcof;
    for (std::size_t i = 0; i < k; ++i)
        gcof.push_back(unit_row(i));

    std::set<SPair, SPairCmp> queue;
    auto add_pairs = [&](std::size_t t) {
        for (std::size_t i = 0; i < t; ++i) {
            if (gv[i].front().comp != gv[t].front().comp)
                continue;
            Monomial l = mono_lcm(gv[i].front().m, gv[t].front().m);
            queue.insert({static_cast<long>(l.deg) + F.shifts[gv[t].front().comp],
                          static_cast<int>(i), static_cast<int>(t), l});
        }
    };
    for (std::size_t t = 1; t < gv.size(); ++t)
        add_pairs(t);

    while (!queue.empty()) {
        SPair p = *queue.begin();
        queue.erase(queue.begin());
        guard.check_degree(static_cast<std::uint32_t>(p.deg));
        Monomial u = *mono_quot(p.lcm, gv[p.i].front().m);
        Monomial w = *mono_quot(p.lcm, gv[p.j].front().m);
        ModVec s = mod_sub(mod_times(gv[p.i], one, u), mod_times(gv[p.j], one, w), F);
        std::vector<Poly> cof(k, Poly(ring));
        for (std::size_t l = 0; l < k; ++l) {
            Poly a = gcof[p.i][l].is_zero() ? Poly(ring) : gcof[p.i][l].times_term(one, u);
            Poly b = gcof[p.j][l].is_zero() ? Poly(ring) : gcof[p.j][l].times_term(one, w);
            cof[l] = a - b;
        }
        s = mod_reduce(std::move(s), gv, &gcof, &cof, F, guard);
        if (s.empty()) {
            bool nonzero = false;
            for (const Poly& c : cof)
                if (!c.is_zero())
                    nonzero = true;
            if (nonzero)
                out.push_back(std::move(cof));
        } else {
            Coef inv = s.front().c.inv();
            gv.push_back(mod_scaled(std::move(s), inv));
            for (Poly& c : cof)
                c = c.scaled(inv);
            gcof.push_back(std::move(cof));
            add_pairs(gv.size() - 1);
        }
    }
    return out;
}

// Plain module Groebner basis for membership checks during pruning; kept
// complete after every add.
struct ModuleGb {
    const Level* F;
    GuardState* guard;
    std::vector<ModVec> g;
    std::set<SPair, SPairCmp> queue;

    ModVec nf(ModVec v) const
    {
        return mod_reduce(std::move(v), g, nullptr, nullptr, *F, *guard);
    }

    void push(ModVec v)
    {
        g.push_back(std::move(v));
        std::size_t t = g.size() - 1;
        for (std::size_t i = 0; i < t; ++i) {
            if (g[i].front().comp != g[t].front().comp)
                continue;
            Monomial l = mono_lcm(g[i].front().m, g[t].front().m);
            queue.insert({static_cast<long>(l.deg) + F->shifts[g[t].front().comp],
                          static_cast<int>(i), static_cast<int>(t), l});
        }
    }

    void add(ModVec v)
    {
        v = nf(std::move(v));
        if (v.empty())
            return;
        Coef inv = v.front().c.inv();
        push(mod_scaled(std::move(v), inv));
        while (!queue.empty()) {
            SPair p = *queue.begin();
            queue.erase(queue.begin());
            guard->check_degree(static_cast<std::uint32_t>(p.deg));
            Monomial u = *mono_quot(p.lcm, g[p.i].front().m);
            Monomial w = *mono_quot(p.lcm, g[p.j].front().m);
            Coef one = Coef::one(F->ring.field());
            ModVec s = nf(mod_sub(mod_times(g[p.i], one, u), mod_times(g[p.j], one, w), *F));
            if (s.empty())
                continue;
            Coef sinv = s.front().c.inv();
            push(mod_scaled(std::move(s), sinv));
        }
    }
};

ModVec to_modvec(const std::vector<Poly>& row, const Level& F)
{
    ModVec v;
    for (std::size_t l = 0; l < row.size(); ++l)
        for (const Term& t : row[l].terms())
            v.push_back({t.c, t.m, static_cast<int>(l)});
    std::sort(v.begin(), v.end(), [&F](const MTerm& a, const MTerm& b) {
        return F.cmp(a.m, a.comp, b.m, b.comp) > 0;
    });
    return v;
}

long row_degree(const std::vector<Poly>& row, const std::vector<long>& shifts)
{
    long d = -1;
    for (std::size_t l = 0; l < row.size(); ++l) {
        if (row[l].is_zero())
            continue;
        if (!row[l].homogeneous())
            throw Error("resolution: syzygy entry is not homogeneous");
        long e = row[l].degree() + shifts[l];
        if (d == -1)
            d = e;
        else if (d != e)
            throw Error("resolution: syzygy row is not homogeneous");
    }
    return d;
}

// Minimal generating subset by graded Nakayama: scan candidates by
// ascending internal degree (emission order on ties) and keep one exactly
// when it is outside the module generated by those already kept.
std::vector<std::vector<Poly>> prune_to_minimal(std::vector<std::vector<Poly>> cands,
                                                const Level& Fnext, GuardState& guard)
{
    struct Item {
        long deg;
        std::size_t idx;
    };
    std::vector<Item> order;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        long d = row_degree(cands[i], Fnext.shifts);
        if (d >= 0)
            order.push_back({d, i});
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const Item& a, const Item& b) { return a.deg < b.deg; });

    ModuleGb gb{&Fnext, &guard, {}, {}};
    std::vector<std::vector<Poly>> kept;
    for (const Item& it : order) {
        ModVec v = to_modvec(cands[it.idx], Fnext);
        if (!gb.g.empty() && gb.nf(v).empty())
            continue;
        kept.push_back(std::move(cands[it.idx]));
        gb.add(std::move(v));
    }
    return kept;
}

std::vector<Poly> to_rows(const ModVec& v, std::size_t rank, const Ring& ring)
{
    std::vector<std::vector<Term>> buckets(rank);
    for (const MTerm& t : v)
        buckets[t.comp].push_back({t.c, t.m});
    std::vector<Poly> out;
    out.reserve(rank);
    for (auto& b : buckets)
        out.push_back(Poly::from_terms(ring, std::move(b)));
    return out;
}

} // namespace

std::size_t BettiTable::rank(std::size_t level) const
{
    if (level >= rows.size())
        return 0;
    std::size_t n = 0;
    for (const auto& [deg, count] : rows[level])
        n += count;
    return n;
}

std::string BettiTable::str() const
{
    std::ostringstream os;
    for (std::size_t l = 0; l < rows.size(); ++l) {
        os << l << ":";
        if (rows[l].empty())
            os << " -";
        for (const auto& [deg, count] : rows[l])
            os << " " << count << "@" << deg;
        os << "\n";
    }
    return os.str();
}

bool verify_resolution(const Resolution& res)
{
    if (!res.ring.valid())
        return false;
    if (res.ranks.empty() || res.ranks[0] != 1)
        return false;
    if (res.ranks.size() != res.maps.size() + 1 || res.ranks.size() != res.shifts.size())
        return false;
    if (res.pd + 1 != static_cast<int>(res.ranks.size()))
        return false;
    if (res.betti.rows.size() != res.ranks.size())
        return false;
    for (std::size_t l = 0; l < res.ranks.size(); ++l) {
        if (res.shifts[l].size() != res.ranks[l])
            return false;
        std::map<long, std::size_t> tally;
        for (long d : res.shifts[l])
            ++tally[d];
        if (tally != res.betti.rows[l])
            return false;
        if (l > 0 && res.ranks[l] == 0)
            return false;
    }
    // Entries are homogeneous of the shift difference and never units,
    // which is exactly minimality of the complex.
    for (std::size_t l = 0; l < res.maps.size(); ++l) {
        const auto& cols = res.maps[l];
        if (cols.size() != res.ranks[l + 1])
            return false;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c].size() != res.ranks[l])
                return false;
            bool nonzero = false;
            for (std::size_t r = 0; r < cols[c].size(); ++r) {
                const Poly& e = cols[c][r];
                if (e.is_zero())
                    continue;
                nonzero = true;
                if (!e.homogeneous())
                    return false;
                if (e.degree() != res.shifts[l + 1][c] - res.shifts[l][r])
                    return false;
                if (e.degree() == 0)
                    return false;
            }
            if (!nonzero)
                return false;
        }
    }
    // Consecutive maps compose to zero.
    for (std::size_t l = 0; l + 1 < res.maps.size(); ++l) {
        const auto& A = res.maps[l];
        const auto& B = res.maps[l + 1];
        for (const auto& col : B)
            for (std::size_t r = 0; r < res.ranks[l]; ++r) {
                Poly acc(res.ring);
                for (std::size_t t = 0; t < col.size(); ++t)
                    if (!col[t].is_zero() && !A[t][r].is_zero())
                        acc = acc + col[t] * A[t][r];
                if (!acc.is_zero())
                    return false;
            }
    }
    return true;
}

Resolution resolve(const Ideal& ideal, const GuardLimits& limits)
{
    if (!ideal.valid())
        throw DomainError("resolve: ideal carries no ring");
    if (!ideal.homogeneous())
        throw DomainError("resolve: ideal must be homogeneous");
    if (ideal.is_unit(limits))
        throw DomainError("resolve: R/I is zero for the unit ideal");

    const Ring& ring = ideal.ring();
    Resolution res;
    res.ring = ring;
    res.ranks = {1};
    res.shifts = {{0}};
    res.betti.rows = {{{0, 1}}};
    res.pd = 0;

    MinimalGens mg = min_gens(ideal, limits);
    if (mg.gens.empty())
        return res; // the zero ideal: R resolves itself

    GuardState guard{limits};

    std::deque<Level> tower;
    tower.push_back(Level{ring, nullptr, {}, {0}});

    std::vector<ModVec> H;
    for (const Poly& g : mg.gens) {
        Poly m = g.monic();
        ModVec v;
        for (const Term& t : m.terms())
            v.push_back({t.c, t.m, 0});
        H.push_back(std::move(v));
    }

    int level = 1;
    for (;;) {
        const Level& F = tower.back();
        std::vector<long> sh;
        std::vector<std::pair<Monomial, int>> leads;
        for (const ModVec& h : H) {
            sh.push_back(internal_degree(h, F));
            leads.push_back({h.front().m, h.front().comp});
        }
        res.ranks.push_back(H.size());
        std::map<long, std::size_t> row;
        for (long d : sh)
            ++row[d];
        res.betti.rows.push_back(std::move(row));
        std::vector<std::vector<Poly>> cols;
        for (const ModVec& h : H)
            cols.push_back(to_rows(h, F.rank(), ring));
        res.maps.push_back(std::move(cols));
        res.shifts.push_back(sh);
        res.pd = level;

        tower.push_back(Level{ring, &F, std::move(leads), std::move(sh)});
        const Level& Fnext = tower.back();

        auto syz = prune_to_minimal(syzygy_generators(H, F, guard), Fnext, guard);
        if (syz.empty())
            break;
        H.clear();
        for (const auto& rowv : syz) {
            ModVec v = to_modvec(rowv, Fnext);
            Coef inv = v.front().c.inv();
            H.push_back(mod_scaled(std::move(v), inv));
        }
        ++level;
    }
    return res;
}

int depth(const Ideal& ideal, const GuardLimits& guard)
{
    Resolution res = resolve(ideal, guard);
    return static_cast<int>(res.ring.nvars()) - res.pd;
}

std::string strongly_cm_str(StronglyCm s)
{
    switch (s) {
    case StronglyCm::YesByCriterionI:
        return "yes-by-criterion-i";
    case StronglyCm::YesByCriterionII:
        return "yes-by-criterion-ii";
    default:
        return "unknown";
    }
}

PredicateSet predicates(const Ideal& ideal, const GuardLimits& guard)
{
    IdealProfile prof = dimension(ideal, guard);
    if (!prof.homogeneous)
        throw DomainError("predicates: ideal must be homogeneous");
    Resolution res = resolve(ideal, guard);

    PredicateSet out;
    out.dim = prof.dim;
    out.height = prof.height;
    out.mu = prof.mu;
    out.pd = res.pd;
    out.depth = static_cast<int>(res.ring.nvars()) - res.pd;
    out.perfect = static_cast<long>(out.pd) == out.height;
    out.cohen_macaulay = static_cast<long>(out.depth) == out.dim;
    out.complete_intersection = static_cast<long>(out.mu) == out.height;
    out.almost_complete_intersection = static_cast<long>(out.mu) == out.height + 1;
    if (out.perfect && out.height == 2)
        out.strongly_cm = StronglyCm::YesByCriterionI;
    else if (static_cast<long>(out.mu) <= out.height + 2 && out.cohen_macaulay)
        out.strongly_cm = StronglyCm::YesByCriterionII;
    else
        out.strongly_cm = StronglyCm::Unknown;
    return out;
}

} // namespace sympow
