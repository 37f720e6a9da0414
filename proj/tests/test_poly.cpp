#include <doctest.h>

#include <random>
#include <set>

#include "galois_moebius/errors.hpp"
#include "galois_moebius/poly.hpp"

using namespace gm;

namespace {

// Irreducible iff no monic divisor of degree 1..deg/2, found by trial division.
bool irreducible_by_trial(const PolyRing& ring, const Poly& f) {
    const u64 Q = ring.field_size();
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        u64 space = 1;
        for (int i = 0; i < d; ++i) space *= Q;
        for (u64 idx = 0; idx < space; ++idx) {
            std::vector<Elem> c(d + 1);
            u64 rest = idx;
            for (int i = 0; i < d; ++i) {
                c[i] = Elem{static_cast<std::uint32_t>(rest % Q)};
                rest /= Q;
            }
            c[d] = Elem{1};
            if (ring.rem(f, Poly(c)).is_zero()) return false;
        }
    }
    return f.degree() >= 1;
}

Poly random_poly(const PolyRing& ring, std::mt19937_64& rng, unsigned degree) {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(ring.field_size() - 1));
    std::vector<Elem> c(degree + 1);
    for (auto& x : c) x = Elem{pick(rng)};
    c[degree] = Elem{1};
    return Poly(c);
}

}  // namespace

TEST_CASE("worked examples over F_2") {
    const PolyRing R(FieldTower::build(2, 1, 1));
    CHECK(R.gcd(R.parse("1,0,1"), R.parse("1,1")) == R.parse("1,1"));
    CHECK(R.is_irreducible(R.parse("1,1,1")));
    CHECK_FALSE(R.is_irreducible(R.parse("1,0,1")));
    CHECK(R.is_irreducible(R.parse("1,1")));
    CHECK(R.factor(R.parse("0,1,0,1")) == std::vector<Factor>{{R.parse("0,1"), 1}, {R.parse("1,1"), 2}});
    CHECK(R.factor(R.parse("0,1,0,0,1")) ==
          std::vector<Factor>{{R.parse("0,1"), 1}, {R.parse("1,1"), 1}, {R.parse("1,1,1"), 1}});
    CHECK(monic_irreducibles(R, 3) == std::vector<Poly>{R.parse("1,1,0,1"), R.parse("1,0,1,1")});
    CHECK(monic_irreducibles(R, 1) == std::vector<Poly>{R.parse("0,1"), R.parse("1,1")});
    CHECK(R.reciprocal(R.parse("1,1,1")) == R.parse("1,1,1"));
    CHECK(R.reciprocal(R.parse("1,1,0,1")) == R.parse("1,0,1,1"));
    CHECK_THROWS_AS(R.reciprocal(R.parse("0,1,1")), Error);
    CHECK(R.format(R.zero()) == "0");
}

TEST_CASE("counting irreducibles") {
    CHECK(count_irreducibles(2, 3) == 2);
    CHECK(count_irreducibles(4, 2) == 6);
    CHECK(count_irreducibles(7, 1) == 7);
    const PolyRing R4(FieldTower::build(2, 1, 2));
    CHECK(monic_irreducibles(R4, 2).size() == 6);
}

TEST_CASE("stream matches trial division and the necklace count") {
    for (const auto& F : {FieldTower::build(2, 1, 1), FieldTower::build(3, 1, 1), FieldTower::build(2, 1, 2)}) {
        const PolyRing R(F);
        for (unsigned k = 1; k <= (F.order() == 2 ? 8u : 4u); ++k) {
            const auto stream = monic_irreducibles(R, k);
            CHECK(stream.size() == count_irreducibles(F.order(), k));
            for (std::size_t i = 1; i < stream.size(); ++i) CHECK(poly_less(stream[i - 1], stream[i]));
            for (const auto& f : stream) CHECK(irreducible_by_trial(R, f));
        }
    }
}

TEST_CASE("Frobenius and subfields on polynomials over F_4") {
    const PolyRing R(FieldTower::build(2, 1, 2));
    CHECK(R.sigma(R.parse("[0,1],1"), 1) == R.parse("[1,1],1"));
    CHECK(R.min_subfield_degree(R.parse("[0,1],1")) == 2);
    CHECK(R.min_subfield_degree(R.parse("1,1,0,1")) == 1);
    CHECK(R.sigma(R.parse("1,1,0,1"), 1) == R.parse("1,1,0,1"));
}

TEST_CASE("division, gcd and Bezout") {
    std::mt19937_64 rng(3);
    const PolyRing R(FieldTower::build(3, 1, 2));
    for (int t = 0; t < 100; ++t) {
        const Poly f = random_poly(R, rng, 1 + t % 9);
        const Poly g = random_poly(R, rng, 1 + t % 5);
        const Poly r = R.rem(random_poly(R, rng, 6), g);
        const auto [qq, rr] = R.divmod(R.add(R.mul(f, g), r), g);
        CHECK(qq == f);
        CHECK(rr == r);
        CHECK(R.mul(f, R.one()) == f);
        const auto bz = R.xgcd(f, g);
        CHECK(R.add(R.mul(bz.s, f), R.mul(bz.t, g)) == bz.g);
        CHECK(bz.g == R.gcd(f, g));
        CHECK(R.rem(f, bz.g).is_zero());
    }
    CHECK_THROWS_AS(R.divmod(R.one(), R.zero()), Error);
}

TEST_CASE("factor reassembles exactly, up to degree 200") {
    std::mt19937_64 rng(5);
    for (const auto& F : {FieldTower::build(2, 1, 1), FieldTower::build(2, 1, 2), FieldTower::build(3, 1, 2),
                          FieldTower::build(5, 1, 1)}) {
        const PolyRing R(F);
        for (unsigned deg : {1u, 2u, 7u, 24u, 60u, 200u}) {
            Poly f = random_poly(R, rng, deg);
            // Add repeated factors so the squarefree and p-th root paths run.
            if (deg > 20) f = R.mul(f, R.mul(random_poly(R, rng, 3), R.sqr(random_poly(R, rng, 2))));
            if (deg == 24) {
                Poly pth = R.one();
                for (u64 k = 0; k < F.p(); ++k) pth = R.mul(pth, random_poly(R, rng, 2));
                f = R.mul(f, pth);
            }
            const auto facs = R.factor(f, 17);
            Poly back = R.one();
            for (const auto& fac : facs) {
                CHECK(R.is_irreducible(fac.poly));
                for (unsigned k = 0; k < fac.multiplicity; ++k) back = R.mul(back, fac.poly);
            }
            CHECK(back == f);
            CHECK(R.factor(f, 99) == facs);  // seed independent
            const bool single = facs.size() == 1 && facs[0].multiplicity == 1;
            CHECK(R.is_irreducible(f) == single);
        }
    }
}

TEST_CASE("factors_of_degree picks the requested degree") {
    const PolyRing R(FieldTower::build(2, 1, 1));
    const Poly f = R.parse("0,1,0,0,0,0,0,0,1");  // x^8 - x: all irreducibles of degree 1 and 3
    const auto three = R.factors_of_degree(f, 3);
    REQUIRE(three.size() == 2);
    CHECK(three[0].poly == R.parse("1,1,0,1"));
    CHECK(three[1].poly == R.parse("1,0,1,1"));
    CHECK(R.factors_of_degree(f, 2).empty());
}

TEST_CASE("sigma and reciprocal preserve irreducibility") {
    std::mt19937_64 rng(8);
    const PolyRing R(FieldTower::build(3, 1, 2));
    int seen = 0;
    while (seen < 40) {
        const Poly f = random_poly(R, rng, 2 + seen % 5);
        if (!R.is_irreducible(f)) continue;
        ++seen;
        CHECK(R.is_irreducible(R.sigma(f, 1)));
        CHECK(R.is_irreducible(R.reciprocal(f)));
        CHECK(R.reciprocal(R.reciprocal(f)) == f);
        CHECK(R.sigma(R.sigma(f, 1), -1) == f);
        const unsigned t = R.min_subfield_degree(f);
        CHECK(R.sigma(f, t) == f);
    }
}

TEST_CASE("polynomial grammar") {
    const PolyRing R(FieldTower::build(3, 1, 2));
    const Poly f = R.parse("[1,2],0,[0,1],1");
    CHECK(f.degree() == 3);
    CHECK(R.parse(R.format(f)) == f);
    CHECK(R.parse(" 1 , 2 ") == R.parse("1,2"));
    CHECK_THROWS_AS(R.parse("1,,2"), Error);
    CHECK_THROWS_AS(R.parse("[1,2"), Error);
    const PolyRing base(FieldTower::build(3, 1, 2), Level::Base);
    CHECK_THROWS_AS(base.parse("[0,1],1"), Error);  // not in F_q
}
