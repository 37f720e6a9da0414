#include "galois_moebius/arith.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "galois_moebius/errors.hpp"

namespace gm {

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 a, u64 k, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (k) {
        if (k & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        k >>= 1;
    }
    return r;
}

bool is_prime(u64 k) {
    if (k < 2) return false;
    for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (k % small == 0) return k == small;
    }
    u64 d = k - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses are sufficient for every k < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a, d, k);
        if (x == 1 || x == k - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, k);
            if (x == k - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

u64 pollard_rho(u64 k) {
    if (k % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mul_mod(x, x, k) + c) % k; };
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, k);
        }
        if (d != k) return d;
    }
}

void split_into(u64 k, std::vector<u64>& primes) {
    if (k == 1) return;
    if (is_prime(k)) {
        primes.push_back(k);
        return;
    }
    u64 d = pollard_rho(k);
    split_into(d, primes);
    split_into(k / d, primes);
}

}  // namespace

std::vector<PrimePower> factorize(u64 k, u64 trial_bound) {
    std::vector<u64> primes;
    if (k == 0) fail(ErrorKind::DivisionByZero, "factorize(0)");
    for (u64 d = 2; d <= trial_bound && d * d <= k; d += (d == 2 ? 1 : 2)) {
        while (k % d == 0) {
            primes.push_back(d);
            k /= d;
        }
    }
    split_into(k, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<PrimePower> out;
    for (u64 p : primes) {
        if (!out.empty() && out.back().prime == p)
            ++out.back().exponent;
        else
            out.push_back({p, 1});
    }
    return out;
}

std::vector<u64> divisors(u64 k) {
    std::vector<u64> out{1};
    for (const auto& pp : factorize(k)) {
        const std::size_t base = out.size();
        u64 power = 1;
        for (unsigned i = 0; i < pp.exponent; ++i) {
            power *= pp.prime;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> prime_divisors(u64 k) {
    std::vector<u64> out;
    for (const auto& pp : factorize(k)) out.push_back(pp.prime);
    return out;
}

u64 euler_phi(u64 k) {
    u64 phi = k;
    for (const auto& pp : factorize(k)) phi = phi / pp.prime * (pp.prime - 1);
    return phi;
}

int moebius_mu(u64 k) {
    int mu = 1;
    for (const auto& pp : factorize(k)) {
        if (pp.exponent > 1) return 0;
        mu = -mu;
    }
    return mu;
}

u64 checked_pow(u64 base, unsigned exp) {
    unsigned __int128 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        r *= base;
        if (r > UINT64_MAX) fail(ErrorKind::Overflow, "integer power exceeds 64 bits");
    }
    return static_cast<u64>(r);
}

std::optional<std::pair<u64, unsigned>> prime_power_decompose(u64 q) {
    if (q < 2) return std::nullopt;
    auto f = factorize(q);
    if (f.size() != 1) return std::nullopt;
    return std::make_pair(f[0].prime, f[0].exponent);
}

std::optional<u64> mod_inverse(u64 a, u64 m) {
    if (m == 1) return 0;
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a % m;
    while (new_r != 0) {
        __int128 quot = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
    }
    if (r != 1) return std::nullopt;
    if (t < 0) t += m;
    return static_cast<u64>(t);
}

}  // namespace gm
