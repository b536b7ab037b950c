#include "sympow/monomial_ideal.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "sympow/error.hpp"

namespace sympow {

namespace {

constexpr int kCoverSweepLimit = 12; // 2^d subset sweeps stay trivial below this

std::uint32_t support_mask(const Monomial& m, int nvars)
{
    std::uint32_t mask = 0;
    for (int v = 0; v < nvars; ++v)
        if (m.e[static_cast<std::size_t>(v)] != 0)
            mask |= 1u << v;
    return mask;
}

// Every generator's support meets the variable set.
bool covers(const std::vector<std::uint32_t>& supports, std::uint32_t vars)
{
    for (std::uint32_t s : supports)
        if ((s & vars) == 0)
            return false;
    return true;
}

void require_squarefree(const MonomialIdeal& I, const char* what)
{
    if (!I.squarefree())
        throw DomainError(std::string(what) + ": needs a square-free monomial ideal");
}

} // namespace

MonomialIdeal MonomialIdeal::make(Ring r, std::vector<Monomial> gens)
{
    if (!r.valid())
        throw DomainError("monomial ideal over an empty ring");
    MonomialIdeal out;
    out.ring_ = r;

    std::sort(gens.begin(), gens.end(),
              [&r](const Monomial& a, const Monomial& b) { return r.cmp(a, b) > 0; });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (j != i && mono_divides(gens[j], gens[i]) && !(gens[i] == gens[j]))
                redundant = true;
        if (redundant)
            continue;
        for (int v = 0; v < r.nvars(); ++v)
            if (gens[i].e[static_cast<std::size_t>(v)] > 1)
                out.squarefree_ = false;
        out.gens_.push_back(gens[i]);
    }
    return out;
}

std::optional<MonomialIdeal> MonomialIdeal::from_ideal(const Ideal& I)
{
    std::vector<Monomial> ms;
    for (const Poly& g : I.gens()) {
        if (g.terms().size() != 1)
            return std::nullopt;
        ms.push_back(g.terms()[0].m);
    }
    return make(I.ring(), std::move(ms));
}

bool MonomialIdeal::contains(const Monomial& m) const
{
    for (const Monomial& g : gens_)
        if (mono_divides(g, m))
            return true;
    return false;
}

Ideal MonomialIdeal::to_ideal() const
{
    std::vector<Poly> polys;
    for (const Monomial& m : gens_)
        polys.push_back(Poly::term(ring_, Coef::one(ring_.field()), m));
    return Ideal::make(ring_, std::move(polys));
}

std::string MonomialIdeal::str() const
{
    return to_ideal().str();
}

std::string VarPrime::str(const Ring& r) const
{
    std::string out = "(";
    bool first = true;
    for (int v = 0; v < r.nvars(); ++v)
        if (has(v)) {
            if (!first)
                out += ",";
            out += r.vars()[static_cast<std::size_t>(v)];
            first = false;
        }
    return out + ")";
}

MonomialIdeal monomial_intersect(const MonomialIdeal& I, const MonomialIdeal& J)
{
    require_same_ring(I.ring(), J.ring(), "monomial intersection");
    if (I.is_zero() || J.is_zero())
        return MonomialIdeal::make(I.ring(), {});
    std::vector<Monomial> meet;
    for (const Monomial& a : I.gens())
        for (const Monomial& b : J.gens())
            meet.push_back(mono_lcm(a, b));
    return MonomialIdeal::make(I.ring(), std::move(meet));
}

std::vector<VarPrime> minimal_primes(const MonomialIdeal& I)
{
    require_squarefree(I, "minimal_primes");
    if (I.is_zero() || I.is_unit())
        throw DomainError("minimal_primes: input must be a nonzero proper ideal");
    const int d = I.ring().nvars();
    if (d > kCoverSweepLimit)
        throw GuardAbort("minimal_primes: cover sweep sized for at most 12 variables");

    std::vector<std::uint32_t> supports;
    for (const Monomial& g : I.gens())
        supports.push_back(support_mask(g, d));

    // Ascending popcount, then numeric, keeps the output deterministic and
    // makes the minimality filter a simple subset check against kept primes.
    std::vector<std::uint32_t> masks;
    for (std::uint32_t s = 1; s < (1u << d); ++s)
        masks.push_back(s);
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    std::vector<VarPrime> primes;
    for (std::uint32_t s : masks) {
        if (!covers(supports, s))
            continue;
        bool minimal = true;
        for (const VarPrime& kept : primes)
            if ((kept.mask & ~s) == 0) {
                minimal = false;
                break;
            }
        if (minimal)
            primes.push_back(VarPrime{s});
    }
    return primes;
}

MonomialIdeal monomial_symbolic_power(const MonomialIdeal& I, unsigned n)
{
    if (n == 0)
        throw DomainError("monomial_symbolic_power: exponent must be at least 1");
    std::vector<VarPrime> primes = minimal_primes(I);
    const Ring& r = I.ring();

    MonomialIdeal acc;
    bool have = false;
    for (const VarPrime& p : primes) {
        // P^n: all degree-n monomials supported on P's variables.
        std::vector<int> vars;
        for (int v = 0; v < r.nvars(); ++v)
            if (p.has(v))
                vars.push_back(v);
        std::vector<Monomial> pn;
        Monomial cur;
        auto rec = [&](auto&& self, std::size_t at, unsigned left) -> void {
            if (at + 1 == vars.size()) {
                Monomial m = cur;
                m.e[static_cast<std::size_t>(vars[at])] = static_cast<std::uint16_t>(left);
                m.deg = n;
                pn.push_back(m);
                return;
            }
            for (unsigned k = 0; k <= left; ++k) {
                cur.e[static_cast<std::size_t>(vars[at])] = static_cast<std::uint16_t>(k);
                self(self, at + 1, left - k);
            }
            cur.e[static_cast<std::size_t>(vars[at])] = 0;
        };
        rec(rec, 0, n);
        MonomialIdeal power_p = MonomialIdeal::make(r, std::move(pn));
        acc = have ? monomial_intersect(acc, power_p) : power_p;
        have = true;
    }
    return acc;
}

MonomialIdeal localize_at_monomial_prime(const MonomialIdeal& I, const VarPrime& P)
{
    const Ring& r = I.ring();
    const int d = r.nvars();
    std::vector<std::uint32_t> supports;
    for (const Monomial& g : I.gens())
        supports.push_back(support_mask(g, d));
    if (!covers(supports, P.mask))
        throw DomainError("localize_at_monomial_prime: prime " + P.str(r)
                          + " does not contain the ideal");

    std::vector<Monomial> image;
    for (const Monomial& g : I.gens()) {
        Monomial m;
        for (int v = 0; v < d; ++v)
            if (P.has(v)) {
                m.e[static_cast<std::size_t>(v)] = g.e[static_cast<std::size_t>(v)];
                m.deg += g.e[static_cast<std::size_t>(v)];
            }
        image.push_back(m);
    }
    return MonomialIdeal::make(r, std::move(image));
}

int monomial_height(const MonomialIdeal& I)
{
    if (I.is_zero())
        return 0;
    if (I.is_unit())
        throw DomainError("monomial_height: unit ideal");
    const int d = I.ring().nvars();
    if (d > kCoverSweepLimit)
        throw GuardAbort("monomial_height: cover sweep sized for at most 12 variables");
    std::vector<std::uint32_t> supports;
    for (const Monomial& g : I.gens())
        supports.push_back(support_mask(g, d));
    int best = d;
    for (std::uint32_t s = 1; s < (1u << d); ++s)
        if (covers(supports, s))
            best = std::min(best, std::popcount(s));
    return best;
}

namespace {

// Monomial primes of V(I) in (size, numeric) order, optionally without the
// irrelevant one; shared by the two local-property sweeps.
template <typename F>
void for_each_prime_in_variety(const MonomialIdeal& I, bool include_irrelevant, F&& visit)
{
    const int d = I.ring().nvars();
    if (d > kCoverSweepLimit)
        throw GuardAbort("local sweep sized for at most 12 variables");
    std::vector<std::uint32_t> supports;
    for (const Monomial& g : I.gens())
        supports.push_back(support_mask(g, d));

    std::vector<std::uint32_t> masks;
    for (std::uint32_t s = 1; s < (1u << d); ++s)
        masks.push_back(s);
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    const std::uint32_t full = (1u << d) - 1;
    for (std::uint32_t s : masks) {
        if (s == full && !include_irrelevant)
            continue;
        if (covers(supports, s))
            if (!visit(VarPrime{s}))
                return;
    }
}

} // namespace

LocalCiResult is_locally_ci(const MonomialIdeal& I)
{
    require_squarefree(I, "is_locally_ci");
    if (I.is_zero() || I.is_unit())
        throw DomainError("is_locally_ci: input must be a nonzero proper ideal");
    LocalCiResult out;
    out.locally_ci = true;
    for_each_prime_in_variety(I, false, [&](const VarPrime& p) {
        MonomialIdeal local = localize_at_monomial_prime(I, p);
        std::size_t mu = local.gens().size();
        int height = monomial_height(local);
        if (mu != static_cast<std::size_t>(height)) {
            out.locally_ci = false;
            out.witness = p;
            return false;
        }
        return true;
    });
    return out;
}

bool is_g_infinity(const MonomialIdeal& I)
{
    require_squarefree(I, "is_g_infinity");
    if (I.is_zero() || I.is_unit())
        throw DomainError("is_g_infinity: input must be a nonzero proper ideal");
    bool ok = true;
    for_each_prime_in_variety(I, true, [&](const VarPrime& p) {
        MonomialIdeal local = localize_at_monomial_prime(I, p);
        if (local.gens().size() > static_cast<std::size_t>(p.size())) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

std::string graph_shape_str(GraphShape s)
{
    switch (s) {
    case GraphShape::Path4: return "path4";
    case GraphShape::Cycle4: return "cycle4";
    case GraphShape::TwoDisjointEdges: return "two-disjoint-edges";
    case GraphShape::Paw: return "paw";
    case GraphShape::Diamond: return "diamond";
    case GraphShape::TrianglePlusIsolated: return "triangle-plus-isolated";
    case GraphShape::K4: return "K4";
    case GraphShape::Other: return "other";
    }
    return "other";
}

std::string GraphClass::edges_str() const
{
    if (edges.empty())
        return "(no edges)";
    std::string out;
    for (const auto& [a, b] : edges) {
        if (!out.empty())
            out += " ";
        out += std::to_string(a + 1) + "-" + std::to_string(b + 1);
    }
    return out;
}

namespace {

// Isomorphism class on 4 vertices from edge count and degree multiset; the
// eleven classes split cleanly on these two.
std::pair<GraphShape, std::string> graph_iso_class(const std::vector<std::pair<int, int>>& edges)
{
    std::array<int, 4> deg{};
    for (const auto& [a, b] : edges) {
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
    }
    std::sort(deg.begin(), deg.end(), std::greater<int>());
    switch (edges.size()) {
    case 0:
        return {GraphShape::Other, "empty"};
    case 1:
        return {GraphShape::Other, "one edge"};
    case 2:
        return deg[0] == 2 ? std::pair{GraphShape::Other, std::string("path on three vertices")}
                           : std::pair{GraphShape::TwoDisjointEdges,
                                       std::string("two disjoint edges")};
    case 3:
        if (deg[0] == 3)
            return {GraphShape::Other, "claw"};
        if (deg[3] == 0)
            return {GraphShape::TrianglePlusIsolated, "triangle plus isolated vertex"};
        return {GraphShape::Path4, "path"};
    case 4:
        return deg[0] == 3 ? std::pair{GraphShape::Paw, std::string("paw")}
                           : std::pair{GraphShape::Cycle4, std::string("cycle")};
    case 5:
        return {GraphShape::Diamond, "diamond"};
    default:
        return {GraphShape::K4, "complete"};
    }
}

} // namespace

GraphClass classify_graph(const MonomialIdeal& I)
{
    const Ring& r = I.ring();
    if (r.nvars() != 4)
        throw DomainError("classify_graph: needs a ring with exactly four variables");
    require_squarefree(I, "classify_graph");
    if (I.is_zero() || I.is_unit())
        throw DomainError("classify_graph: input must be a nonzero proper ideal");

    std::vector<VarPrime> primes = minimal_primes(I);

    GraphClass out;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            VarPrime pair{(1u << a) | (1u << b)};
            if (std::find(primes.begin(), primes.end(), pair) == primes.end())
                out.edges.emplace_back(a, b);
        }
    auto [shape, name] = graph_iso_class(out.edges);
    out.shape = shape;
    out.name = name;

    // Preconditions of the classification: every minimal prime a pair.
    for (const VarPrime& p : primes)
        if (p.size() != 2) {
            out.verdict = "excluded: minimal prime " + p.str(r) + " has height "
                          + std::to_string(p.size()) + ", not height two unmixed";
            return out;
        }

    out.locally_ci = is_locally_ci(I).locally_ci;
    switch (out.shape) {
    case GraphShape::Path4:
    case GraphShape::Cycle4:
    case GraphShape::TwoDisjointEdges:
        out.rigid_candidate = true;
        out.verdict = "rigid-candidate: graph is a "
                      + std::string(out.shape == GraphShape::TwoDisjointEdges
                                        ? "union of two disjoint edges"
                                        : (out.shape == GraphShape::Path4 ? "path" : "cycle"))
                      + (out.locally_ci ? "; locally complete intersection" : "");
        break;
    default:
        out.verdict = "excluded: graph class '" + out.name
                      + "' is not a path, a cycle, or two disjoint edges";
        break;
    }
    return out;
}

} // namespace sympow
