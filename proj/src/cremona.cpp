#include "sympow/cremona.hpp"

#include <algorithm>
#include <gmpxx.h>

#include "sympow/error.hpp"
#include "sympow/monomial_ideal.hpp"

namespace sympow {

CremonaMap make_cremona_map(Ring r, std::vector<Poly> forms)
{
    if (!r.valid())
        throw DomainError("cremona map: invalid ring");
    if (r.nvars() < 2)
        throw DomainError("cremona map: need at least two variables");
    if (forms.size() != static_cast<std::size_t>(r.nvars()))
        throw DomainError("cremona map: expected one form per variable, got "
                          + std::to_string(forms.size()) + " forms in "
                          + std::to_string(r.nvars()) + " variables");
    long d = -1;
    for (const Poly& f : forms) {
        require_same_ring(r, f.ring(), "cremona map");
        if (f.is_zero() || !f.homogeneous())
            throw DomainError("cremona map: every form must be homogeneous and nonzero");
        if (d == -1)
            d = f.degree();
        else if (f.degree() != d)
            throw DomainError("cremona map: forms have mixed degrees "
                              + std::to_string(d) + " and " + std::to_string(f.degree()));
    }
    if (d < 2)
        throw DomainError("cremona map: forms must have degree at least two");
    CremonaMap out;
    out.ring = r;
    out.base_ideal = Ideal::make(r, forms);
    out.forms = std::move(forms);
    out.degree = d;
    return out;
}

bool gabber_bound_ok(long d, long d_prime, int n)
{
    if (d < 1 || d_prime < 1 || n < 1)
        return false;
    mpz_class bound;
    mpz_pow_ui(bound.get_mpz_t(), mpz_class(d).get_mpz_t(), static_cast<unsigned long>(n - 1));
    return mpz_class(d_prime) <= bound;
}

CremonaCheck verify_inverse(const CremonaMap& F, const CremonaMap& G)
{
    require_same_ring(F.ring, G.ring, "verify_inverse");
    CremonaCheck out;
    out.d = F.degree;
    out.d_prime = G.degree;
    out.predicted_failure = G.degree;

    std::vector<Poly> h;
    h.reserve(G.forms.size());
    for (const Poly& g : G.forms)
        h.push_back(substitute(g, F.forms));

    const long want = F.degree * G.degree;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i].is_zero()) {
            out.diagnostic = "g_" + std::to_string(i) + "(f) vanishes identically";
            return out;
        }
        if (!h[i].homogeneous() || h[i].degree() != want) {
            out.diagnostic = "g_" + std::to_string(i) + "(f) has degree "
                             + std::to_string(h[i].degree()) + ", expected "
                             + std::to_string(want);
            return out;
        }
    }

    auto D = try_exact_divide(h[0], Poly::variable(F.ring, 0));
    if (!D) {
        out.diagnostic = "g_0(f) is not divisible by " + F.ring.vars()[0];
        return out;
    }
    for (std::size_t i = 0; i < h.size(); ++i)
        if (h[i] != *D * Poly::variable(F.ring, static_cast<int>(i))) {
            out.diagnostic = "g_" + std::to_string(i) + "(f) is not D * "
                             + F.ring.vars()[i];
            return out;
        }
    if (D->degree() != want - 1) {
        out.diagnostic = "inversion factor has degree " + std::to_string(D->degree())
                         + ", expected d*d' - 1 = " + std::to_string(want - 1);
        return out;
    }
    out.D = std::move(*D);
    out.verified = true;
    out.gabber_ok = gabber_bound_ok(out.d, out.d_prime, static_cast<int>(F.ring.nvars()) - 1);
    return out;
}

bool depth_positive_check(const Ideal& I, const GuardLimits& guard)
{
    return equal(I, saturate(I, irrelevant_ideal(I.ring()), guard).ideal, guard);
}

bool depth_positive_check(const CremonaMap& F, const GuardLimits& guard)
{
    return depth_positive_check(F.base_ideal, guard);
}

std::string hypothesis_status_str(HypothesisStatus s)
{
    switch (s) {
    case HypothesisStatus::Checked:
        return "checked";
    case HypothesisStatus::Asserted:
        return "asserted";
    case HypothesisStatus::Violated:
        return "violated";
    default:
        return "unknown";
    }
}

ProbeReport nonrigidity_probe(const CremonaMap& F, const CremonaMap& G,
                              const SymbolicStrategy& strategy, int check_up_to,
                              const GuardLimits& guard)
{
    if (check_up_to < 1)
        throw DomainError("nonrigidity probe: check_up_to must be at least one");
    ProbeReport out;
    out.check = verify_inverse(F, G);
    if (!out.check.verified)
        throw DomainError("nonrigidity probe requires a verified inverse pair: "
                          + out.check.diagnostic);

    const Ideal& I = F.base_ideal;
    out.depth_positive = depth_positive_check(I, guard);
    out.hypothesis_i = out.depth_positive ? HypothesisStatus::Checked : HypothesisStatus::Violated;
    out.hypothesis_ii = HypothesisStatus::Asserted;
    out.hypothesis_note = "m-primary defect condition asserted by caller; Rees S2 not checked";

    const long dp = out.check.d_prime;
    const int lmax = static_cast<int>(std::min<long>(check_up_to, dp));
    for (int l = 1; l <= lmax; ++l) {
        out.reports.push_back(compare(I, l, strategy, guard));
        if (out.observed_failure == 0 && !out.reports.back().equal)
            out.observed_failure = l;
    }

    // For square-free monomial base ideals the defect condition is
    // refutable: the prime-intersection symbolic power and the saturation
    // must agree at every probed exponent, or the defect fails to be
    // m-primary there.
    if (auto M = MonomialIdeal::from_ideal(I); M && M->squarefree()) {
        for (int l = 1; l <= lmax; ++l) {
            Ideal via_primes = monomial_symbolic_power(*M, static_cast<unsigned>(l)).to_ideal();
            Ideal via_sat =
                saturate(power(I, static_cast<unsigned>(l), guard), irrelevant_ideal(I.ring()),
                         guard)
                    .ideal;
            if (!equal(via_primes, via_sat, guard)) {
                out.hypothesis_ii = HypothesisStatus::Violated;
                out.hypothesis_note =
                    "I^(" + std::to_string(l) + ")/I^" + std::to_string(l)
                    + " is not m-primary: saturation and minimal-prime intersection disagree";
                break;
            }
        }
    }
    if (out.hypothesis_ii != HypothesisStatus::Violated && out.observed_failure != 0
        && out.observed_failure < dp) {
        out.hypothesis_ii = HypothesisStatus::Violated;
        out.hypothesis_note = "equality fails at l = " + std::to_string(out.observed_failure)
                              + " < d' = " + std::to_string(dp)
                              + ", so the m-primary defect hypothesis cannot hold";
    }

    if (check_up_to >= dp) {
        out.membership_checked = true;
        Ideal S = symbolic_power(I, static_cast<int>(dp), strategy, guard);
        out.d_in_symbolic = S.contains(out.check.D, guard);
        out.d_not_in_ordinary =
            !power(I, static_cast<unsigned>(dp), guard).contains(out.check.D, guard);
        out.prediction_matched = out.observed_failure == static_cast<int>(dp);
    }

    if (out.observed_failure == static_cast<int>(dp))
        out.summary = "failure at l = " + std::to_string(dp) + " as predicted";
    else if (out.observed_failure != 0)
        out.summary = "failure at l = " + std::to_string(out.observed_failure)
                      + ", before the predicted d' = " + std::to_string(dp);
    else if (lmax < dp)
        out.summary = "no failure up to l = " + std::to_string(lmax)
                      + " (probe capped below d' = " + std::to_string(dp) + ")";
    else
        out.summary = "no failure up to d' = " + std::to_string(dp)
                      + ", contradicting the prediction";
    return out;
}

} // namespace sympow
