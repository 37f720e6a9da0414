#include <doctest.h>

#include "galois_moebius/arith.hpp"
#include "galois_moebius/errors.hpp"

using namespace gm;

namespace {

// Definitional versions: count coprime residues, scan for square factors.
u64 phi_by_count(u64 k) {
    u64 c = 0;
    for (u64 i = 1; i <= k; ++i) {
        u64 a = i, b = k;
        while (b) {
            a %= b;
            std::swap(a, b);
        }
        c += a == 1;
    }
    return c;
}

int mu_by_scan(u64 k) {
    int sign = 1;
    for (u64 d = 2; d <= k; ++d) {
        if (k % d) continue;
        k /= d;
        if (k % d == 0) return 0;
        sign = -sign;
    }
    return sign;
}

}  // namespace

TEST_CASE("phi and mu on the worked values") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(6) == 2);
    CHECK(moebius_mu(4) == 0);
    CHECK(moebius_mu(1) == 1);
    CHECK(moebius_mu(30) == -1);
}

TEST_CASE("phi and mu agree with definitional scans") {
    for (u64 k = 1; k <= 400; ++k) {
        CAPTURE(k);
        CHECK(euler_phi(k) == phi_by_count(k));
        CHECK(moebius_mu(k) == mu_by_scan(k));
    }
}

TEST_CASE("divisors and factorization") {
    CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<u64>{1});
    CHECK(prime_divisors(360) == std::vector<u64>{2, 3, 5});
    // 2^32 + 1 = 641 * 6700417, and a product of two large primes for the rho path.
    auto f = factorize((u64{1} << 32) + 1);
    REQUIRE(f.size() == 2);
    CHECK(f[0].prime == 641);
    CHECK(f[1].prime == 6700417);
    const u64 big = u64{4294967291} * u64{65521};
    auto g = factorize(big);
    REQUIRE(g.size() == 2);
    CHECK(g[0].prime * g[1].prime == big);
}

TEST_CASE("primality") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(65537));
    CHECK_FALSE(is_prime(561));  // Carmichael
    CHECK(is_prime(18446744073709551557ull));
}

TEST_CASE("prime powers, inverses, overflow") {
    CHECK(prime_power_decompose(81) == std::optional<std::pair<u64, unsigned>>({3, 4}));
    CHECK_FALSE(prime_power_decompose(12).has_value());
    CHECK_FALSE(prime_power_decompose(1).has_value());
    CHECK(mod_inverse(3, 7) == std::optional<u64>(5));
    CHECK_FALSE(mod_inverse(4, 8).has_value());
    CHECK(checked_pow(2, 63) == (u64{1} << 63));
    CHECK_THROWS_AS(checked_pow(2, 64), Error);
}
