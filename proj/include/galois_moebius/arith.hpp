#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace gm {

using u64 = std::uint64_t;

struct PrimePower {
    u64 prime;
    unsigned exponent;
};

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 k);

/// Prime factorization by trial division up to `trial_bound`, then Pollard rho
/// on whatever cofactor is left. Result is sorted by prime.
std::vector<PrimePower> factorize(u64 k, u64 trial_bound = 1u << 16);

std::vector<u64> divisors(u64 k);
std::vector<u64> prime_divisors(u64 k);

u64 euler_phi(u64 k);
int moebius_mu(u64 k);

/// base^exp, throwing Overflow when the result leaves 64 bits.
u64 checked_pow(u64 base, unsigned exp);

/// Returns (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<u64, unsigned>> prime_power_decompose(u64 q);

/// Inverse of a modulo m (m >= 1), or nullopt when gcd(a, m) != 1.
std::optional<u64> mod_inverse(u64 a, u64 m);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 a, u64 k, u64 m);

/// Order of x in a group of order `group_order`, given `pow(x, k)` and an
/// identity test. Standard descent over the prime divisors of the group order.
template <class Elt, class PowFn, class IsOneFn>
u64 multiplicative_order(const Elt& x, u64 group_order, PowFn&& pow, IsOneFn&& is_one) {
    u64 order = group_order;
    for (const auto& pp : factorize(group_order)) {
        for (unsigned i = 0; i < pp.exponent; ++i) {
            if (!is_one(pow(x, order / pp.prime))) break;
            order /= pp.prime;
        }
    }
    return order;
}

}  // namespace gm
