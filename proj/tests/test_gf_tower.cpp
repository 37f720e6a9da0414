#include <doctest.h>

#include <random>

#include "galois_moebius/errors.hpp"
#include "galois_moebius/gf_tower.hpp"

using namespace gm;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("F_4 as a degree-2 extension of F_2") {
    const auto F = FieldTower::build(2, 1, 2);
    // Default h is the first irreducible quadratic in counting order: x^2 + x + 1.
    CHECK(F.h() == std::vector<Elem>{Elem{1}, Elem{1}, Elem{1}});
    const Elem u = F.parse("[0,1]");
    const Elem u1 = F.parse("[1,1]");
    CHECK(F.mul(u, u) == u1);
    CHECK(F.inv(u) == u1);
    CHECK(F.add(u, u) == F.zero());
    CHECK(F.frobenius(u, 1) == u1);
    CHECK(F.frobenius(u, 2) == u);
    CHECK(F.frobenius(F.frobenius(u, 1), -1) == u);
    CHECK(F.subfield_degree(u) == 2);
    CHECK(F.subfield_degree(F.one()) == 1);
    CHECK(F.subfield_degree(F.zero()) == 1);
    CHECK(F.format(u) == "[0,1]");
    CHECK(F.format(F.one()) == "1");
}

TEST_CASE("degree-1 towers") {
    const auto F = FieldTower::build(2, 1, 1);
    CHECK(F.order() == 2);
    CHECK(F.h() == std::vector<Elem>{Elem{0}, Elem{1}});  // h = v
    const auto G = FieldTower::build(2, 2, 1);
    CHECK(G.q() == 4);
    CHECK(G.g() == std::vector<std::uint32_t>{1, 1, 1});
    const Elem u = G.parse("[0,1]");
    CHECK(G.mul(u, u) == G.parse("[1,1]"));
}

TEST_CASE("construction errors") {
    CHECK(kind_of([] { FieldTower::build(4, 1, 1); }) == ErrorKind::NotPrime);
    CHECK(kind_of([] { FieldTower::build(2, 1, 2, std::nullopt, std::vector<Elem>{Elem{1}, Elem{0}, Elem{1}}); }) ==
          ErrorKind::ReducibleModulus);
    CHECK(kind_of([] { FieldTower::build(2, 2, 1, std::vector<std::uint32_t>{1, 1, 0, 1}); }) ==
          ErrorKind::DegreeMismatch);
    CHECK(kind_of([] { FieldTower::build(2, 1, 21); }) == ErrorKind::FieldTooLarge);
    CHECK(kind_of([] { FieldTower::build(2, 1, 2).inv(Elem{0}); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("supplied moduli are honoured") {
    // F_8 with x^3 + x^2 + 1 instead of the default x^3 + x + 1.
    const auto F = FieldTower::build(2, 3, 1, std::vector<std::uint32_t>{1, 0, 1, 1});
    const Elem u = F.parse("[0,1,0]");
    CHECK(F.pow(u, 3) == F.parse("[1,0,1]"));  // u^3 = u^2 + 1
}

TEST_CASE("element grammar round trips") {
    for (const auto& F : {FieldTower::build(3, 2, 2), FieldTower::build(2, 1, 4), FieldTower::build(5, 1, 1),
                          FieldTower::build(2, 3, 1)}) {
        for (std::uint32_t c = 0; c < F.order(); ++c) {
            const Elem a{c};
            CHECK(F.parse(F.format(a)) == a);
            CHECK(F.parse(F.format_brackets(a)) == a);
            CHECK(F.from_digits(F.digits(a)) == a);
        }
    }
    const auto F = FieldTower::build(3, 2, 2);
    CHECK(F.parse("[[1,2],[0,1]]") == F.from_digits({{1, 2}, {0, 1}}));
    CHECK(F.parse("2") == F.from_int(2));
    CHECK(F.parse("[1,2]") == F.from_digits({{1, 2}, {0, 0}}));  // F_q shorthand
    CHECK(kind_of([&] { F.parse("[1,2,0]"); }) == ErrorKind::Parse);
    CHECK(kind_of([&] { F.parse("[[1,3],[0,0]]"); }) == ErrorKind::Parse);
    CHECK(kind_of([&] { F.parse("x"); }) == ErrorKind::Parse);
}

TEST_CASE("field properties on random elements") {
    std::mt19937_64 rng(11);
    for (const auto& F : {FieldTower::build(2, 1, 2), FieldTower::build(3, 1, 2), FieldTower::build(2, 2, 3),
                          FieldTower::build(7, 1, 2), FieldTower::build(3, 3, 1)}) {
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(F.order() - 1));
        for (int t = 0; t < 300; ++t) {
            const Elem a{pick(rng)}, b{pick(rng)};
            const std::int64_t i = static_cast<std::int64_t>(pick(rng) % 7) - 3;
            CHECK(F.frobenius(F.mul(a, b), i) == F.mul(F.frobenius(a, i), F.frobenius(b, i)));
            CHECK(F.frobenius(F.add(a, b), i) == F.add(F.frobenius(a, i), F.frobenius(b, i)));
            CHECK(F.frobenius(F.frobenius(a, i), 2) == F.frobenius(a, i + 2));
            CHECK(F.pow(a, F.order()) == a);
            CHECK(F.sub(F.add(a, b), b) == a);
            if (a.code && b.code) CHECK(F.inv(F.mul(a, b)) == F.mul(F.inv(a), F.inv(b)));
            // Frobenius is x -> x^q, checked through repeated multiplication.
            Elem aq = F.one();
            for (u64 k = 0; k < F.q(); ++k) aq = F.mul(aq, a);
            CHECK(F.frobenius(a, 1) == aq);
        }
    }
}

TEST_CASE("F_q is the code prefix and the subfield test matches it") {
    const auto F = FieldTower::build(3, 2, 3);
    for (std::uint32_t c = 0; c < F.order(); c += 7) {
        const Elem a{c};
        CHECK(F.in_level(a, Level::Base) == (F.subfield_degree(a) == 1));
    }
    CHECK(F.mult_order(F.primitive()) == F.order() - 1);
}
