#include <doctest.h>

#include <random>

#include "sympow/ideal.hpp"
#include "sympow/parse.hpp"

using namespace sympow;

namespace {

Ideal ideal_of(const Ring& r, const char* gens)
{
    return Ideal::make(r, parse_poly_list(r, gens));
}

// All pairwise generator products; used to probe power additivity.
Ideal mul(const Ideal& I, const Ideal& J)
{
    std::vector<Poly> prods;
    for (const Poly& a : I.gens())
        for (const Poly& b : J.gens())
            prods.push_back(a * b);
    return Ideal::make(I.ring(), std::move(prods));
}

} // namespace

TEST_CASE("ordinary powers")
{
    Ring r = parse_ring("QQ[x,y]");
    Ideal I = ideal_of(r, "x, y");
    CHECK(equal(power(I, 2), ideal_of(r, "x^2, x*y, y^2")));
    CHECK(equal(power(I, 1), I));
    CHECK_THROWS_AS(power(I, 0), DomainError);

    Ring r4 = parse_ring("QQ[x,y,z,w]");
    Ideal tetra = ideal_of(r4, "yzw, xzw, xyw, xyz");
    CHECK(power(tetra, 2).gens().size() == 10); // multisets of size 2 from 4
    CHECK(power(tetra, 3).gens().size() == 20);
    CHECK(tetra.contains(parse_poly(r4, "xyz + yzw")));
    CHECK_FALSE(tetra.contains(parse_poly(r4, "xy")));
}

TEST_CASE("intersection")
{
    Ring r = parse_ring("QQ[x,y,z]");
    CHECK(equal(intersect(ideal_of(r, "x"), ideal_of(r, "y")), ideal_of(r, "x*y")));

    Ideal I = ideal_of(r, "x^2 - y, y*z");
    CHECK(equal(intersect(I, I), I));

    // xyz lies in each (.,.)^2, hence in the triple intersection.
    Ideal triple = intersect(intersect(power(ideal_of(r, "x, y"), 2), power(ideal_of(r, "x, z"), 2)),
                             power(ideal_of(r, "y, z"), 2));
    CHECK(triple.contains(parse_poly(r, "x*y*z")));
    CHECK_FALSE(triple.contains(parse_poly(r, "x*y")));

    // The auxiliary elimination variable never collides with a real one.
    Ring rt = parse_ring("QQ[t,x]");
    CHECK(equal(intersect(ideal_of(rt, "t"), ideal_of(rt, "x")), ideal_of(rt, "t*x")));
}

TEST_CASE("colon and saturation")
{
    Ring r = parse_ring("QQ[x,y]");
    CHECK(equal(colon(ideal_of(r, "x^2"), ideal_of(r, "x")), ideal_of(r, "x")));
    CHECK(equal(colon(ideal_of(r, "x^2, x*y"), ideal_of(r, "x, y")), ideal_of(r, "x")));

    // Colon by the unit ideal changes nothing.
    Ideal I = ideal_of(r, "x^2, x*y");
    CHECK(equal(colon(I, ideal_of(r, "1")), I));
    // Colon by the zero ideal is everything.
    CHECK(colon(I, Ideal::make(r, {})).is_unit());

    auto [sat, s] = saturate(I, ideal_of(r, "x, y"));
    CHECK(equal(sat, ideal_of(r, "x")));
    CHECK(s == 1);

    // Already-saturated input stabilizes immediately.
    auto [sat2, s2] = saturate(ideal_of(r, "x"), ideal_of(r, "x, y"));
    CHECK(equal(sat2, ideal_of(r, "x")));
    CHECK(s2 == 0);

    // Saturation contains the ideal and is idempotent.
    Ring r3 = parse_ring("QQ[x,y,z]");
    Ideal J = power(ideal_of(r3, "x*y, x*z, y*z"), 2);
    Ideal m = irrelevant_ideal(r3);
    auto [satJ, sJ] = saturate(J, m);
    for (const Poly& g : J.gens())
        CHECK(satJ.contains(g));
    auto [twice, s_twice] = saturate(satJ, m);
    CHECK(equal(twice, satJ));
    CHECK(s_twice == 0);
    // xyz is the degree-3 element the square misses.
    CHECK(satJ.contains(parse_poly(r3, "x*y*z")));
    CHECK_FALSE(J.contains(parse_poly(r3, "x*y*z")));
    CHECK(sJ == 1);
}

TEST_CASE("the squared face ideal of the tetrahedron is saturated")
{
    // All of (yzw,xzw,xyw,xyz)^2's embedded behavior sits away from the
    // irrelevant ideal: saturating changes nothing (the quotient has
    // positive depth), so the extra degree-4 element xyzw does NOT appear.
    Ring r = parse_ring("QQ[x,y,z,w]");
    Ideal I2 = power(ideal_of(r, "yzw, xzw, xyw, xyz"), 2);
    auto [sat, s] = saturate(I2, irrelevant_ideal(r));
    CHECK(equal(sat, I2));
    CHECK(s == 0);
    CHECK_FALSE(sat.contains(parse_poly(r, "x^2*y*z*w")));
}

TEST_CASE("elimination")
{
    Ring r = parse_ring("QQ[t,x,y]");
    Ideal graph = ideal_of(r, "t*x, (1-t)*y");
    Ideal out = eliminate(graph, 1);
    CHECK(out.ring().str() == "QQ[x,y]");
    CHECK(equal(out, ideal_of(out.ring(), "x*y")));

    Ring r2 = parse_ring("QQ[x,y]");
    CHECK(eliminate(ideal_of(r2, "x"), 1).is_zero());
    CHECK(eliminate(ideal_of(r2, "x - y"), 1).is_zero());
    CHECK_THROWS_AS(eliminate(ideal_of(r2, "x"), 2), DomainError);
    CHECK_THROWS_AS(eliminate(ideal_of(r2, "x"), 0), DomainError);
}

TEST_CASE("ideal equality")
{
    Ring r = parse_ring("QQ[x,y,z]");
    CHECK(equal(ideal_of(r, "x, y"), ideal_of(r, "y, x")));
    CHECK(equal(ideal_of(r, "x, y"), ideal_of(r, "x + y, y, x - y")));
    CHECK_FALSE(equal(ideal_of(r, "x"), ideal_of(r, "x^2")));

    Ideal sq = power(ideal_of(r, "x*y, x*z, y*z"), 2);
    CHECK_FALSE(equal(sq, saturate(sq, irrelevant_ideal(r)).ideal));
}

TEST_CASE("minimal generators")
{
    Ring r = parse_ring("QQ[x,y]");
    auto mg = min_gens(ideal_of(r, "x, x^2, y"));
    CHECK(mg.mu == 2);
    REQUIRE(mg.gens.size() == 2);
    CHECK(mg.gens[0] == parse_poly(r, "x"));
    CHECK(mg.gens[1] == parse_poly(r, "y"));

    Ring r4 = parse_ring("QQ[x,y,z,w]");
    CHECK(min_gens(ideal_of(r4, "yzw, xzw, xyw, xyz")).mu == 4);

    // Quartic space-curve ideal: one quadric, three cubics, none redundant.
    Ideal curve = ideal_of(r4, "x*w - y*z, y^3 - x^2*z, z^3 - y*w^2, x*z^2 - y^2*w");
    auto cg = min_gens(curve);
    CHECK(cg.mu == 4);

    // Irredundance: dropping any survivor loses the ideal.
    for (std::size_t i = 0; i < cg.gens.size(); ++i) {
        std::vector<Poly> rest;
        for (std::size_t j = 0; j < cg.gens.size(); ++j)
            if (j != i)
                rest.push_back(cg.gens[j]);
        CHECK_FALSE(Ideal::make(r4, rest).contains(cg.gens[i]));
    }
    // And the survivors still generate: mutual containment.
    Ideal regenerated = Ideal::make(r4, cg.gens);
    CHECK(equal(regenerated, curve));

    CHECK_THROWS_AS(min_gens(ideal_of(r, "x^2 + y")), DomainError);
    CHECK(min_gens(Ideal::make(r, {})).mu == 0);
}

TEST_CASE("dimension and height")
{
    Ring r4 = parse_ring("QQ[x,y,z,w]");
    auto pm = dimension(irrelevant_ideal(r4));
    CHECK(pm.dim == 0);
    CHECK(pm.height == 4);
    CHECK(pm.mu == 4);

    Ring r5 = parse_ring("QQ[x1,x2,x3,x4,x5]");
    auto pent = dimension(ideal_of(r5, "x1*x3, x1*x4, x2*x4, x2*x5, x3*x5"));
    CHECK(pent.height == 3);
    CHECK(pent.dim == 2);
    CHECK(pent.mu == 5);

    Ring rh = parse_ring("QQ[x0,x1,x2,x3]");
    auto hankel = dimension(ideal_of(rh, "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2"));
    CHECK(hankel.height == 2);
    CHECK(hankel.dim == 2);
    CHECK(hankel.mu == 3);

    // Complete-intersection coordinate subspace: exact by construction.
    auto ci = dimension(ideal_of(r5, "x1, x3"));
    CHECK(ci.dim == 3);
    CHECK(ci.height == 2);

    // Zero ideal: everything; unit ideal: rejected.
    CHECK(dimension(Ideal::make(r4, {})).dim == 4);
    CHECK_THROWS_AS(dimension(ideal_of(r4, "x, x + 1")), DomainError);
}

TEST_CASE("containment chains on random small ideals")
{
    Ring r = parse_ring("QQ[x,y,z]");
    std::mt19937 rng(987123);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<int> expo(0, 2);

    auto random_poly = [&]() {
        std::vector<Term> terms;
        for (int t = 0; t < 2; ++t) {
            int c = coef(rng);
            if (c == 0)
                c = 1;
            Monomial m;
            for (int v = 0; v < 3; ++v) {
                std::uint16_t e = static_cast<std::uint16_t>(expo(rng));
                m.e[static_cast<std::size_t>(v)] = e;
                m.deg += e;
            }
            terms.push_back({Coef::from_long(c, r.field()), m});
        }
        return Poly::from_terms(r, std::move(terms));
    };

    for (int trial = 0; trial < 8; ++trial) {
        Ideal I = Ideal::make(r, {random_poly(), random_poly()});
        Ideal J = Ideal::make(r, {random_poly(), random_poly()});
        if (I.is_zero() || J.is_zero())
            continue;

        Ideal prod = mul(I, J);
        Ideal meet = intersect(I, J);
        for (const Poly& g : prod.gens())
            CHECK(meet.contains(g));
        for (const Poly& g : meet.gens()) {
            CHECK(I.contains(g));
            CHECK(J.contains(g));
        }

        // Colon adjunction: J * (I : J) lands inside I.
        Ideal adj = mul(J, colon(I, J));
        for (const Poly& g : adj.gens())
            CHECK(I.contains(g));

        // Power additivity as ideals.
        CHECK(equal(mul(power(I, 2), I), power(I, 3)));
    }
}
