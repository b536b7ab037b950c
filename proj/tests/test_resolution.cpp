#include <doctest.h>

#include <map>

#include "support/membership.hpp"
#include "sympow/parse.hpp"
#include "sympow/resolution.hpp"

using namespace sympow;

namespace {

Ideal ideal_of(const Ring& r, const char* gens)
{
    return Ideal::make(r, parse_poly_list(r, gens));
}

// The deeper power resolutions need more than the default time budget.
const GuardLimits kRoomy{.max_degree = 80, .soft_seconds = 600.0};

using Row = std::map<long, std::size_t>;

long binom(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Hilbert function of R/I at degree s, counted on the staircase of the
// initial ideal. Independent of the resolution machinery.
long staircase_count(const Ideal& I, std::uint32_t s)
{
    const auto& gb = I.basis(kRoomy).gens;
    long n = 0;
    for (const Monomial& m : testing::monomials_of_degree(I.ring().nvars(), s)) {
        bool inside = false;
        for (const Poly& g : gb)
            if (mono_divides(g.lead().m, m))
                inside = true;
        if (!inside)
            ++n;
    }
    return n;
}

// The same value from the Betti numbers: the alternating sum of shifted
// counting functions of free modules.
long betti_count(const Resolution& res, long s)
{
    long d = res.ring.nvars();
    long acc = 0;
    long sign = 1;
    for (const auto& row : res.betti.rows) {
        for (const auto& [j, b] : row)
            acc += sign * static_cast<long>(b) * binom(s - j + d - 1, d - 1);
        sign = -sign;
    }
    return acc;
}

// First differential regenerates the ideal itself.
bool first_map_matches(const Resolution& res, const Ideal& I)
{
    std::vector<Poly> cols;
    for (const auto& col : res.maps[0])
        cols.push_back(col[0]);
    return equal(Ideal::make(res.ring, std::move(cols)), I, kRoomy);
}

} // namespace

TEST_CASE("resolutions of principal and complete intersection ideals")
{
    Ring r2 = parse_ring("QQ[x,y]");
    Resolution one = resolve(ideal_of(r2, "x"));
    CHECK(one.pd == 1);
    CHECK(one.ranks == std::vector<std::size_t>{1, 1});
    CHECK(one.betti.rows[1] == Row{{1, 1}});
    CHECK(verify_resolution(one));
    CHECK(depth(ideal_of(r2, "x")) == 1);

    Resolution bin = resolve(ideal_of(r2, "x^2 + x*y"));
    CHECK(bin.pd == 1);
    CHECK(bin.betti.rows[1] == Row{{2, 1}});
    CHECK(verify_resolution(bin));

    // Koszul complex on the variables, and on a regular sequence of squares.
    Ring r3 = parse_ring("QQ[x,y,z]");
    Resolution kos = resolve(ideal_of(r3, "x, y, z"));
    CHECK(kos.pd == 3);
    CHECK(kos.ranks == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(kos.betti.rows[1] == Row{{1, 3}});
    CHECK(kos.betti.rows[2] == Row{{2, 3}});
    CHECK(kos.betti.rows[3] == Row{{3, 1}});
    CHECK(verify_resolution(kos));
    CHECK(depth(ideal_of(r3, "x, y, z")) == 0);

    Resolution sq = resolve(ideal_of(r3, "x^2, y^2, z^2"));
    CHECK(sq.ranks == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(sq.betti.rows[1] == Row{{2, 3}});
    CHECK(sq.betti.rows[2] == Row{{4, 3}});
    CHECK(sq.betti.rows[3] == Row{{6, 1}});
    CHECK(verify_resolution(sq));

    // Degenerate inputs.
    Resolution zero = resolve(Ideal::make(r3, {}));
    CHECK(zero.pd == 0);
    CHECK(zero.ranks == std::vector<std::size_t>{1});
    CHECK(verify_resolution(zero));
    CHECK(depth(Ideal::make(r3, {})) == 3);
    CHECK_THROWS_AS(resolve(ideal_of(r3, "1")), DomainError);
    CHECK_THROWS_AS(resolve(ideal_of(r3, "x^2 - y")), DomainError);
    CHECK_THROWS_AS(resolve(Ideal{}), DomainError);
}

TEST_CASE("determinantal and face ideal resolutions")
{
    // Hankel 2x3 minors: the twisted cubic cone, Betti numbers 1, 3, 2.
    Ring r4 = parse_ring("QQ[x,y,z,w]");
    Ideal hankel = ideal_of(r4, "x*z - y^2, x*w - y*z, y*w - z^2");
    Resolution hr = resolve(hankel);
    CHECK(hr.pd == 2);
    CHECK(hr.ranks == std::vector<std::size_t>{1, 3, 2});
    CHECK(hr.betti.rows[1] == Row{{2, 3}});
    CHECK(hr.betti.rows[2] == Row{{3, 2}});
    CHECK(verify_resolution(hr));
    CHECK(first_map_matches(hr, hankel));

    // The same shape over a large prime field.
    Ring rp = parse_ring("Fp(32003)[x,y,z,w]");
    Resolution hp = resolve(ideal_of(rp, "x*z - y^2, x*w - y*z, y*w - z^2"));
    CHECK(hp.ranks == std::vector<std::size_t>{1, 3, 2});
    CHECK(verify_resolution(hp));

    // Pentagon face ideal: self-dual Betti numbers 1, 5, 5, 1 with the top
    // generator in degree five.
    Ring r5 = parse_ring("QQ[x1,x2,x3,x4,x5]");
    Ideal pent = ideal_of(r5, "x1*x3, x1*x4, x2*x4, x2*x5, x3*x5");
    Resolution pr = resolve(pent);
    CHECK(pr.pd == 3);
    CHECK(pr.ranks == std::vector<std::size_t>{1, 5, 5, 1});
    CHECK(pr.betti.rows[1] == Row{{2, 5}});
    CHECK(pr.betti.rows[2] == Row{{3, 5}});
    CHECK(pr.betti.rows[3] == Row{{5, 1}});
    CHECK(verify_resolution(pr));
    CHECK(first_map_matches(pr, pent));

    // Tetrahedron face ideal: four cubics, perfect of height two.
    Ideal tetra = ideal_of(r4, "y*z*w, x*z*w, x*y*w, x*y*z");
    Resolution tr = resolve(tetra);
    CHECK(tr.pd == 2);
    CHECK(tr.ranks == std::vector<std::size_t>{1, 4, 3});
    CHECK(tr.betti.rows[1] == Row{{3, 4}});
    CHECK(tr.betti.rows[2] == Row{{4, 3}});
    CHECK(verify_resolution(tr));
    CHECK(first_map_matches(tr, tetra));
}

TEST_CASE("powers lose depth")
{
    // Tetrahedron face ideal: depth drops 2, 1, 0 along I, I^2, I^3.
    Ring r4 = parse_ring("QQ[x,y,z,w]");
    Ideal tetra = ideal_of(r4, "y*z*w, x*z*w, x*y*w, x*y*z");
    CHECK(depth(tetra, kRoomy) == 2);
    CHECK(depth(power(tetra, 2, kRoomy), kRoomy) == 1);
    CHECK(depth(power(tetra, 3, kRoomy), kRoomy) == 0);

    // Pentagon face ideal: the square still has pd 3, the cube jumps to 5.
    Ring r5 = parse_ring("QQ[x1,x2,x3,x4,x5]");
    Ideal pent = ideal_of(r5, "x1*x3, x1*x4, x2*x4, x2*x5, x3*x5");
    Resolution p2 = resolve(power(pent, 2, kRoomy), kRoomy);
    CHECK(p2.pd == 3);
    CHECK(verify_resolution(p2));
    Resolution p3 = resolve(power(pent, 3, kRoomy), kRoomy);
    CHECK(p3.pd == 5);
    CHECK(verify_resolution(p3));

    // Positive depth is the same as the power being saturated at the
    // irrelevant maximal ideal; depth zero means it is not.
    Ideal m4 = irrelevant_ideal(r4);
    CHECK(saturate(tetra, m4, kRoomy).exponent == 0);
    CHECK(saturate(power(tetra, 2, kRoomy), m4, kRoomy).exponent == 0);
    CHECK(saturate(power(tetra, 3, kRoomy), m4, kRoomy).exponent > 0);
    Ideal m5 = irrelevant_ideal(r5);
    CHECK(saturate(power(pent, 2, kRoomy), m5, kRoomy).exponent == 0);
    CHECK(saturate(power(pent, 3, kRoomy), m5, kRoomy).exponent > 0);
}

TEST_CASE("hilbert series consistency")
{
    Ring r4 = parse_ring("QQ[x,y,z,w]");
    Ring r5 = parse_ring("QQ[x1,x2,x3,x4,x5]");
    std::vector<Ideal> samples = {
        ideal_of(r4, "x*z - y^2, x*w - y*z, y*w - z^2"),
        ideal_of(r4, "y*z*w, x*z*w, x*y*w, x*y*z"),
        power(ideal_of(r4, "y*z*w, x*z*w, x*y*w, x*y*z"), 2, kRoomy),
        ideal_of(r5, "x1*x3, x1*x4, x2*x4, x2*x5, x3*x5"),
        ideal_of(r4, "x*w - y*z, y^3 - x^2*z, z^3 - y*w^2, x*z^2 - y^2*w"),
    };
    for (const Ideal& I : samples) {
        Resolution res = resolve(I, kRoomy);
        for (std::uint32_t s = 0; s <= 10; ++s)
            CHECK(betti_count(res, s) == staircase_count(I, s));
    }
}

TEST_CASE("predicate profiles")
{
    Ring r4 = parse_ring("QQ[x,y,z,w]");
    Ring r3 = parse_ring("QQ[x,y,z]");
    Ring r5 = parse_ring("QQ[x1,x2,x3,x4,x5]");

    // Hankel: perfect of height two, three generators.
    PredicateSet h = predicates(ideal_of(r4, "x*z - y^2, x*w - y*z, y*w - z^2"));
    CHECK(h.height == 2);
    CHECK(h.mu == 3);
    CHECK(h.pd == 2);
    CHECK(h.depth == 2);
    CHECK(h.perfect);
    CHECK(h.cohen_macaulay);
    CHECK_FALSE(h.complete_intersection);
    CHECK(h.almost_complete_intersection);
    CHECK(h.strongly_cm == StronglyCm::YesByCriterionI);
    CHECK(strongly_cm_str(h.strongly_cm) == "yes-by-criterion-i");

    // Complete intersections, one of height two and one of height three.
    PredicateSet ci2 = predicates(ideal_of(r3, "x^2, y^3"));
    CHECK(ci2.complete_intersection);
    CHECK(ci2.perfect);
    CHECK(ci2.strongly_cm == StronglyCm::YesByCriterionI);
    PredicateSet ci3 = predicates(ideal_of(r3, "x^2, y^2, z^2"));
    CHECK(ci3.complete_intersection);
    CHECK(ci3.depth == 0);
    CHECK(ci3.dim == 0);
    CHECK(ci3.cohen_macaulay);
    CHECK(ci3.strongly_cm == StronglyCm::YesByCriterionII);

    // Pentagon: five generators of height three, certified through the
    // generator-count criterion.
    PredicateSet p = predicates(ideal_of(r5, "x1*x3, x1*x4, x2*x4, x2*x5, x3*x5"));
    CHECK(p.height == 3);
    CHECK(p.mu == 5);
    CHECK(p.perfect);
    CHECK(p.cohen_macaulay);
    CHECK_FALSE(p.complete_intersection);
    CHECK_FALSE(p.almost_complete_intersection);
    CHECK(p.strongly_cm == StronglyCm::YesByCriterionII);

    // Tetrahedron face ideal: perfect of height two with four generators.
    PredicateSet t = predicates(ideal_of(r4, "y*z*w, x*z*w, x*y*w, x*y*z"));
    CHECK(t.height == 2);
    CHECK(t.mu == 4);
    CHECK(t.perfect);
    CHECK(t.strongly_cm == StronglyCm::YesByCriterionI);

    // The quartic space curve with dim 2 but depth 1: not Cohen-Macaulay,
    // and neither sufficient criterion applies.
    PredicateSet mc = predicates(ideal_of(r4, "x*w - y*z, y^3 - x^2*z, z^3 - y*w^2, x*z^2 - y^2*w"));
    CHECK(mc.dim == 2);
    CHECK(mc.height == 2);
    CHECK(mc.mu == 4);
    CHECK(mc.depth == 1);
    CHECK_FALSE(mc.cohen_macaulay);
    CHECK_FALSE(mc.perfect);
    CHECK(mc.strongly_cm == StronglyCm::Unknown);
    CHECK(strongly_cm_str(mc.strongly_cm) == "unknown");

    CHECK_THROWS_AS(predicates(ideal_of(r3, "x^2 - y")), DomainError);
}

TEST_CASE("resolution certificate rejects tampering")
{
    Ring r4 = parse_ring("QQ[x,y,z,w]");
    Ideal hankel = ideal_of(r4, "x*z - y^2, x*w - y*z, y*w - z^2");
    Resolution good = resolve(hankel);
    REQUIRE(verify_resolution(good));

    Resolution bad = good;
    bad.ranks[0] = 2;
    CHECK_FALSE(verify_resolution(bad));

    bad = good;
    bad.pd = 3;
    CHECK_FALSE(verify_resolution(bad));

    // A unit entry breaks minimality.
    bad = good;
    bad.maps[0][0][0] = Poly::constant(r4, Coef::one(r4.field()));
    CHECK_FALSE(verify_resolution(bad));

    // A degree-compatible perturbation that no longer composes to zero.
    bad = good;
    bad.maps[1][0][0] = bad.maps[1][0][0] + parse_poly(r4, "y");
    CHECK_FALSE(verify_resolution(bad));
}

TEST_CASE("auslander-buchsbaum bookkeeping")
{
    Ring r4 = parse_ring("QQ[x,y,z,w]");
    Ring r3 = parse_ring("QQ[x,y,z]");
    std::vector<Ideal> samples = {
        ideal_of(r4, "x*z - y^2, x*w - y*z, y*w - z^2"),
        ideal_of(r4, "y*z*w, x*z*w, x*y*w, x*y*z"),
        ideal_of(r4, "x*w - y*z, y^3 - x^2*z, z^3 - y*w^2, x*z^2 - y^2*w"),
        ideal_of(r3, "x, y, z"),
        ideal_of(r3, "x^2, x*y, y^2"),
    };
    for (const Ideal& I : samples) {
        IdealProfile prof = dimension(I, kRoomy);
        Resolution res = resolve(I, kRoomy);
        long d = static_cast<long>(I.ring().nvars());
        long dep = d - res.pd;
        // depth + pd = dim R, depth <= dim R/I, and the Euler
        // characteristic of a resolution of a torsion quotient vanishes.
        CHECK(dep + res.pd == d);
        CHECK(dep <= prof.dim);
        long euler = 0;
        long sign = 1;
        for (std::size_t rk : res.ranks) {
            euler += sign * static_cast<long>(rk);
            sign = -sign;
        }
        CHECK(euler == 0);
        CHECK(res.betti.rank(0) == 1);
        CHECK(res.betti.rank(1) == res.ranks[1]);
        CHECK(verify_resolution(res));
        CHECK(first_map_matches(res, I));
    }
}
