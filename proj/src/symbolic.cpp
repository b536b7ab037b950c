#include "sympow/symbolic.hpp"

#include "sympow/error.hpp"
#include "sympow/monomial_ideal.hpp"

namespace sympow {

std::string strategy_kind_str(StrategyKind k)
{
    switch (k) {
    case StrategyKind::SaturationAtIrrelevant:
        return "saturation-at-irrelevant";
    case StrategyKind::MinimalPrimeIntersection:
        return "minimal-prime-intersection";
    default:
        return "user-element-saturation";
    }
}

std::string justification_str(Justification j)
{
    switch (j) {
    case Justification::Dim1Radical:
        return "dim1-radical";
    case Justification::LocallyCi:
        return "locally-CI";
    case Justification::UniqueMinimalPrimeDim1Homogeneous:
        return "unique-minimal-prime-dim1-homogeneous";
    default:
        return "user-override";
    }
}

std::optional<StrategyKind> strategy_kind_from_str(const std::string& s)
{
    if (s == "saturation-at-irrelevant")
        return StrategyKind::SaturationAtIrrelevant;
    if (s == "minimal-prime-intersection")
        return StrategyKind::MinimalPrimeIntersection;
    if (s == "user-element-saturation")
        return StrategyKind::UserElementSaturation;
    return std::nullopt;
}

std::optional<Justification> justification_from_str(const std::string& s)
{
    if (s == "dim1-radical")
        return Justification::Dim1Radical;
    if (s == "locally-CI")
        return Justification::LocallyCi;
    if (s == "unique-minimal-prime-dim1-homogeneous")
        return Justification::UniqueMinimalPrimeDim1Homogeneous;
    if (s == "user-override")
        return Justification::UserOverride;
    return std::nullopt;
}

std::string validate_strategy(const Ideal& I, const SymbolicStrategy& s, const GuardLimits& guard)
{
    if (!I.valid())
        throw DomainError("symbolic power: ideal carries no ring");

    if (s.kind == StrategyKind::MinimalPrimeIntersection) {
        auto M = MonomialIdeal::from_ideal(I);
        if (!M)
            throw DomainError("minimal-prime-intersection requires a monomial ideal");
        if (!M->squarefree())
            throw DomainError("minimal-prime-intersection requires a square-free monomial ideal");
        return "checked: square-free monomial, intersection over minimal primes is exact";
    }

    if (s.kind == StrategyKind::UserElementSaturation) {
        if (s.user_f.is_zero() || !s.user_f.ring().valid())
            throw DomainError("user-element-saturation requires a nonzero element");
        require_same_ring(I.ring(), s.user_f.ring(), "user-element-saturation");
        return "asserted: saturation at (" + s.user_f.str() + ") equals the symbolic power";
    }

    // Saturation at the irrelevant ideal, licensed by the declared flag.
    auto M = MonomialIdeal::from_ideal(I);
    switch (s.justification) {
    case Justification::Dim1Radical: {
        IdealProfile prof = dimension(I, guard);
        if (prof.dim != 1)
            throw DomainError("dim1-radical justification rejected: dim(R/I) = "
                              + std::to_string(prof.dim) + ", not one");
        if (M && !M->squarefree())
            throw DomainError("dim1-radical justification rejected: monomial ideal is not radical");
        if (M)
            return "checked: dim(R/I) = 1 and the monomial ideal is radical";
        return "checked: dim(R/I) = 1; radicality asserted by caller";
    }
    case Justification::LocallyCi: {
        if (M && M->squarefree()) {
            LocalCiResult lc = is_locally_ci(*M);
            if (!lc.locally_ci)
                throw DomainError("locally-CI justification rejected: fails at "
                                  + lc.witness->str(I.ring()));
            return "checked: locally a complete intersection off the irrelevant ideal";
        }
        return "asserted: locally a complete intersection (not machine-checkable here)";
    }
    case Justification::UniqueMinimalPrimeDim1Homogeneous: {
        if (!I.homogeneous())
            throw DomainError(
                "unique-minimal-prime justification rejected: ideal is not homogeneous");
        IdealProfile prof = dimension(I, guard);
        if (prof.dim != 1)
            throw DomainError("unique-minimal-prime justification rejected: dim(R/I) = "
                              + std::to_string(prof.dim) + ", not one");
        if (M && M->squarefree()) {
            auto primes = minimal_primes(*M);
            if (primes.size() != 1)
                throw DomainError("unique-minimal-prime justification rejected: "
                                  + std::to_string(primes.size()) + " minimal primes");
            return "checked: homogeneous, dim 1, unique minimal prime";
        }
        return "checked: homogeneous and dim 1; uniqueness of the minimal prime asserted";
    }
    default:
        return "asserted: user override, no validity checks performed";
    }
}

Ideal symbolic_power(const Ideal& I, int n, const SymbolicStrategy& s, const GuardLimits& guard)
{
    if (n < 1)
        throw DomainError("symbolic power: exponent must be at least one");
    validate_strategy(I, s, guard);

    if (s.kind == StrategyKind::MinimalPrimeIntersection) {
        auto M = MonomialIdeal::from_ideal(I);
        return monomial_symbolic_power(*M, static_cast<unsigned>(n)).to_ideal();
    }

    Ideal In = power(I, static_cast<unsigned>(n), guard);
    Ideal J = s.kind == StrategyKind::UserElementSaturation
                  ? Ideal::make(I.ring(), {s.user_f})
                  : irrelevant_ideal(I.ring());
    return saturate(In, J, guard).ideal;
}

SymbolicReport compare(const Ideal& I, int n, const SymbolicStrategy& s, const GuardLimits& guard)
{
    SymbolicReport rep;
    rep.n = n;
    rep.strategy = s;
    rep.strategy.validity_note = validate_strategy(I, s, guard);

    Ideal In = power(I, static_cast<unsigned>(n), guard);
    Ideal S = symbolic_power(I, n, s, guard);
    rep.equal = equal(In, S, guard);

    Saturation sat = saturate(In, irrelevant_ideal(I.ring()), guard);
    rep.sat_exponent = sat.exponent;
    rep.depth_positive = equal(In, sat.ideal, guard);

    if (!rep.equal) {
        // First minimal-degree generator of the reduced basis of I^(n)
        // outside I^n; the basis is ordered, so ties are deterministic.
        std::optional<Poly> best;
        for (const Poly& g : S.basis(guard).gens) {
            if (best && g.degree() >= best->degree())
                continue;
            if (!In.contains(g, guard))
                best = g;
        }
        if (!best)
            throw Error("compare: powers differ but every basis generator is contained");
        if (!S.contains(*best, guard) || In.contains(*best, guard))
            throw Error("compare: witness failed re-verification");
        rep.witness = std::move(best);
    }
    return rep;
}

ScanResult rigidity_scan(const Ideal& I, int n_max, const SymbolicStrategy& s,
                         const GuardLimits& guard)
{
    if (n_max < 2)
        throw DomainError("rigidity scan: n_max must be at least two");
    ScanResult out;
    std::string first_abort;
    for (int n = 1; n <= n_max; ++n) {
        try {
            out.reports.push_back(compare(I, n, s, guard));
        } catch (const GuardAbort& e) {
            SymbolicReport rep;
            rep.n = n;
            rep.strategy = s;
            rep.aborted = e.what();
            if (first_abort.empty())
                first_abort = "n = " + std::to_string(n) + " aborted: " + e.what();
            out.reports.push_back(std::move(rep));
        }
        const SymbolicReport& rep = out.reports.back();
        if (out.first_failure == 0 && rep.aborted.empty() && !rep.equal)
            out.first_failure = n;
    }
    if (out.first_failure != 0)
        out.summary = "first failing exponent: " + std::to_string(out.first_failure);
    else if (!first_abort.empty())
        out.summary = "inconclusive: " + first_abort;
    else
        out.summary = "rigid up to " + std::to_string(n_max);
    return out;
}

} // namespace sympow
