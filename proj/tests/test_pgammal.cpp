#include <doctest.h>

#include <random>
#include <set>

#include "galois_moebius/errors.hpp"
#include "galois_moebius/oracles.hpp"
#include "galois_moebius/pgammal.hpp"

using namespace gm;

namespace {

Poly random_irreducible(const PolyRing& R, std::mt19937_64& rng, unsigned degree) {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(R.field_size() - 1));
    while (true) {
        std::vector<Elem> c(degree + 1);
        for (auto& x : c) x = Elem{pick(rng)};
        c[degree] = Elem{1};
        Poly f(c);
        if (R.is_irreducible(f)) return f;
    }
}

// Evaluates g at beta inside E.
Poly eval_in(const ExtensionField& E, const Poly& g, const Poly& beta) {
    Poly acc;
    for (std::size_t i = g.c.size(); i-- > 0;) acc = E.add(E.mul(acc, beta), E.embed(g.c[i]));
    return acc;
}

}  // namespace

TEST_CASE("Moebius action worked examples") {
    const auto F = FieldTower::build(2, 1, 1);
    const PolyRing R(F);
    const Mat2 J = parse_matrix(F, "0;1;1;0");
    CHECK(mat_act_poly(R, identity_mat(), R.parse("1,1,0,1")) == R.parse("1,1,0,1"));
    CHECK(mat_act_poly(R, J, R.parse("1,1,1")) == R.parse("1,1,1"));
    CHECK(mat_act_poly(R, J, R.parse("1,1,0,1")) == R.parse("1,0,1,1"));
    CHECK_THROWS_AS(mat_act_poly(R, parse_matrix(F, "1;1;1;1"), R.parse("1,1,1")), Error);
    CHECK_THROWS_AS(mat_act_poly(R, J, R.parse("1,1")), Error);
}

TEST_CASE("semilinear action worked examples") {
    const auto F = FieldTower::build(2, 1, 2);
    const PolyRing R(F);
    const Poly f = R.parse("[0,1],1,0,1");
    CHECK(semilinear_act(R, group_identity(F), f) == f);
    CHECK(semilinear_act(R, make_semilinear(F, identity_mat(), 1), R.parse("1,1,0,1")) == R.parse("1,1,0,1"));
    // [J, s_1] * f is the reciprocal of s_1(f).
    const Semilinear g = make_semilinear(F, parse_matrix(F, "0;1;1;0"), 1);
    CHECK(semilinear_act(R, g, f) == R.reciprocal(R.sigma(f, 1)));
}

TEST_CASE("roots of A o f are the images of the roots of f") {
    std::mt19937_64 rng(21);
    for (const auto& F : {FieldTower::build(2, 1, 2), FieldTower::build(3, 1, 2), FieldTower::build(5, 1, 1)}) {
        const PolyRing R(F);
        for (int t = 0; t < 30; ++t) {
            const Mat2 A = random_invertible(F, rng);
            const Poly f = random_irreducible(R, rng, 2 + t % 4);
            const ExtensionField E(R, f);
            const Poly beta = root_act_mat(E, A, E.generator());
            CHECK(eval_in(E, mat_act_poly(R, A, f), beta).is_zero());
        }
    }
}

TEST_CASE("group product, inverse and starred products") {
    const auto F = FieldTower::build(2, 1, 2);
    std::mt19937_64 rng(4);
    for (int t = 0; t < 50; ++t) {
        const Mat2 A = random_invertible(F, rng);
        const unsigned i = 1 + t % 2;
        const Semilinear g = make_semilinear(F, A, i);
        CHECK(group_mul(F, g, make_semilinear(F, identity_mat(), F.n() - i)) == make_semilinear(F, A, F.n()));
        CHECK(group_mul(F, g, group_inverse(F, g)) == group_identity(F));
        CHECK(a_star(F, A, 1) == A);
        CHECK(a_star(F, A, 0) == identity_mat());
    }
    const Mat2 B = parse_matrix(F, "0;1;1;0");
    CHECK(a_star(F, B, 2) == identity_mat());
    const Mat2 C = parse_matrix(F, "1;1;0;1");
    CHECK(a_star(F, C, 3) == mat_mul(F, C, mat_mul(F, C, C)));  // entries in F_q
}

TEST_CASE("projective order worked examples") {
    for (u64 p : {2u, 3u, 5u, 7u}) {
        const auto F = FieldTower::build(p, 1, 1);
        CHECK(proj_order(F, parse_matrix(F, "1;1;0;1")) == p);
        CHECK(proj_order(F, parse_matrix(F, "0;1;1;0")) == (p == 2 ? 2u : 2u));
    }
    for (const auto& F : {FieldTower::build(5, 1, 1), FieldTower::build(2, 3, 1), FieldTower::build(3, 2, 1)}) {
        const Mat2 G{F.primitive(), F.zero(), F.zero(), F.one()};
        CHECK(proj_order(F, G) == F.q() - 1);
    }
    CHECK(proj_order(FieldTower::build(2, 1, 1), identity_mat()) == 1);
}

TEST_CASE("projective order against repeated multiplication") {
    const auto F4 = FieldTower::build(2, 1, 2);
    std::set<u64> seen;
    for (const auto& pm : all_proj_classes(F4)) {
        CHECK(proj_order(F4, pm.rep()) == oracle::proj_order(F4, pm.rep()));
        seen.insert(proj_order(F4, pm.rep()));
    }
    CHECK(seen == std::set<u64>{1, 2, 3, 5});  // orders in PGL(2,4) = A_5
    std::mt19937_64 rng(9);
    for (const auto& F : {FieldTower::build(3, 2, 1), FieldTower::build(2, 3, 1), FieldTower::build(7, 1, 1)}) {
        for (int t = 0; t < 60; ++t) {
            const Mat2 M = random_invertible(F, rng);
            CHECK(proj_order(F, M) == oracle::proj_order(F, M));
        }
    }
}

TEST_CASE("class enumeration sizes") {
    CHECK(all_proj_classes(FieldTower::build(2, 1, 2)).size() == 60);
    CHECK(all_proj_classes(FieldTower::build(3, 1, 1)).size() == 24);
    CHECK(all_proj_classes(FieldTower::build(2, 1, 2), Level::Base).size() == 6);
    const auto classes = all_proj_classes(FieldTower::build(3, 1, 2));
    CHECK(classes.size() == 720);
    CHECK(std::set<ProjMat2>(classes.begin(), classes.end()).size() == 720);
}

TEST_CASE("semilinear order and reduction") {
    const auto F = FieldTower::build(2, 1, 2);
    CHECK(semilinear_order(F, make_semilinear(F, identity_mat(), 1)) == 2);
    CHECK(semilinear_order(F, make_semilinear(F, parse_matrix(F, "0;1;1;0"), 1)) == 2);
    std::mt19937_64 rng(12);
    for (const auto& T : {FieldTower::build(2, 1, 2), FieldTower::build(3, 1, 2), FieldTower::build(2, 1, 4),
                          FieldTower::build(2, 1, 3)}) {
        for (int t = 0; t < 25; ++t) {
            const Semilinear g = make_semilinear(T, random_invertible(T, rng), 1 + t % T.n());
            CHECK(semilinear_order(T, g) == oracle::semilinear_order(T, g));
            const Semilinear h = reduce_to_sigma_t(T, g);
            CHECK(h.frob == std::gcd(g.frob, T.n()));
        }
    }
    const auto F4 = FieldTower::build(2, 1, 4);
    const Semilinear pure = make_semilinear(F4, parse_matrix(F4, "0;1;1;1"), 4);
    CHECK(reduce_to_sigma_t(F4, pure).frob == 4);
}

TEST_CASE("divisor polynomials") {
    const auto F = FieldTower::build(2, 1, 2);
    const PolyRing R(F);
    for (unsigned m = 0; m <= 3; ++m) {
        const std::size_t qm = std::size_t{1} << m;
        // Antidiagonal: x^{q^m + 1} - 1.
        Poly expect = R.add(R.monomial(F.one(), qm + 1), R.constant(F.one()));
        CHECK(build_F(R, parse_matrix(F, "0;1;1;0"), m) == expect);
        // Identity: x - x^{q^m}.
        CHECK(build_F(R, identity_mat(), m) == R.sub(R.x(), R.monomial(F.one(), qm)));
    }
    CHECK_THROWS_AS(build_F(R, identity_mat(), 15), Error);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 40; ++t) {
        const Mat2 A = random_invertible(F, rng);
        const unsigned m = 1 + t % 4, i = t % (m + 1);
        const Poly fi = build_F_i(R, A, m, i);
        CHECK(fi == R.sigma(build_F(R, a_star(F, A, i), m - i), static_cast<std::int64_t>(F.n()) - i));
        const std::size_t base = std::size_t{1} << (m - i);
        if (m > i) CHECK(static_cast<std::size_t>(fi.degree()) == (a_star(F, A, i).b.code ? base + 1 : base));
    }
}

TEST_CASE("root action worked examples and the divisor criterion") {
    const auto F = FieldTower::build(2, 1, 2);
    const PolyRing R(F);
    std::mt19937_64 rng(31);
    for (int t = 0; t < 20; ++t) {
        const Poly f = random_irreducible(R, rng, 3);
        const ExtensionField E(R, f);
        const Poly alpha = E.generator();
        CHECK(root_act(E, group_identity(F), alpha) == E.frobenius(alpha, F.n()));
        CHECK(root_act(E, make_semilinear(F, identity_mat(), 1), alpha) == E.frobenius(alpha, 1));
        const Mat2 A = random_invertible(F, rng);
        const Poly lhs = root_act(E, make_semilinear(F, A, 1), alpha);
        for (unsigned r = 1; r <= 3; ++r) {
            const bool root_side = lhs == E.frobenius(alpha, F.n() * r);
            const bool divisor_side = R.rem(build_F_i(R, A, F.n() * r, 1), f).is_zero();
            CHECK(root_side == divisor_side);
        }
    }
}

TEST_CASE("matrix grammar") {
    const auto F = FieldTower::build(3, 1, 2);
    const Mat2 M = parse_matrix(F, "[0,1];1;2;[1,1]");
    CHECK(parse_matrix(F, format_matrix(F, M)) == M);
    CHECK_THROWS_AS(parse_matrix(F, "1;0;0"), Error);
    CHECK_THROWS_AS(parse_matrix(F, "1;0;0;q"), Error);
}
