#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galois_moebius/gf_tower.hpp"

namespace gm {

/// Dense univariate polynomial, constant term first, no trailing zeros.
/// The coefficient field is carried by the PolyRing that operates on it.
struct Poly {
    std::vector<Elem> c;

    Poly() = default;
    explicit Poly(std::vector<Elem> coeffs) : c(std::move(coeffs)) { trim(); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Elem lead() const { return c.empty() ? Elem{0} : c.back(); }
    Elem coeff(std::size_t i) const { return i < c.size() ? c[i] : Elem{0}; }
    void trim() {
        while (!c.empty() && c.back().code == 0) c.pop_back();
    }

    friend bool operator==(const Poly&, const Poly&) = default;
};

/// Degree first, then coefficients from the top down by element code. For
/// monic polynomials of one degree this is the counting order in which the
/// constant term is the least significant digit.
bool poly_less(const Poly& a, const Poly& b);

struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const { return poly_less(a, b); }
};

struct Factor {
    Poly poly;
    unsigned multiplicity = 1;

    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Polynomial arithmetic with coefficients in one level of a tower.
class PolyRing {
public:
    explicit PolyRing(FieldTower tower, Level level = Level::Top);

    const FieldTower& tower() const { return tower_; }
    Level level() const { return level_; }
    /// Number of elements of the coefficient field.
    u64 field_size() const { return tower_.size(level_); }

    Poly zero() const { return {}; }
    Poly one() const { return Poly({tower_.one()}); }
    Poly x() const { return Poly({tower_.zero(), tower_.one()}); }
    Poly constant(Elem a) const { return Poly({a}); }
    Poly monomial(Elem a, std::size_t k) const;

    Poly add(const Poly& a, const Poly& b) const;
    Poly sub(const Poly& a, const Poly& b) const;
    Poly neg(const Poly& a) const;
    Poly scale(const Poly& a, Elem s) const;
    Poly mul(const Poly& a, const Poly& b) const;
    Poly sqr(const Poly& a) const;
    std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const;
    Poly quo(const Poly& a, const Poly& b) const { return divmod(a, b).first; }
    Poly rem(const Poly& a, const Poly& b) const;
    /// Monic gcd; gcd(0, 0) = 0.
    Poly gcd(const Poly& a, const Poly& b) const;
    /// s*a + t*b = g with g monic.
    struct Bezout {
        Poly g, s, t;
    };
    Bezout xgcd(const Poly& a, const Poly& b) const;
    Poly monic(const Poly& f) const;
    Poly derivative(const Poly& f) const;
    Elem eval(const Poly& f, Elem a) const;

    Poly mulmod(const Poly& a, const Poly& b, const Poly& m) const { return rem(mul(a, b), m); }
    Poly powmod(const Poly& f, u64 k, const Poly& m) const;
    /// f^(p^-1) for a polynomial whose derivative vanishes.
    Poly pth_root(const Poly& f) const;

    /// Rabin's test.
    bool is_irreducible(const Poly& f) const;
    /// Monic irreducible factors with multiplicities, sorted by poly_less.
    /// The seed drives equal-degree splitting only; the result does not depend on it.
    std::vector<Factor> factor(const Poly& f, u64 seed = 0) const;
    std::vector<Factor> squarefree(const Poly& f) const;
    /// The irreducible factors of degree exactly k, as factor() would list them.
    std::vector<Factor> factors_of_degree(const Poly& f, unsigned k, u64 seed = 0) const;
    /// Pairs (product of all irreducible factors of degree d, d) for squarefree monic f.
    /// With max_degree > 0 only factors of degree <= max_degree are reported.
    std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f, unsigned max_degree = 0) const;
    std::vector<Poly> equal_degree(const Poly& f, unsigned d, std::mt19937_64& rng) const;

    /// Coefficientwise sigma_i.
    Poly sigma(const Poly& f, std::int64_t i) const;
    /// Monic reciprocal f(0)^-1 x^deg f(1/x).
    Poly reciprocal(const Poly& f) const;
    /// Least t | n with sigma_t(f) = f.
    unsigned min_subfield_degree(const Poly& f) const;
    bool in_level(const Poly& f, Level level) const;

    std::string format(const Poly& f) const;
    Poly parse(std::string_view text) const;

private:
    Poly power_of_x_mod(u64 k, const Poly& m) const;

    FieldTower tower_;
    Level level_;
};

/// (1/k) sum_{d|k} mu(d) Q^{k/d}.
u64 count_irreducibles(u64 field_size, unsigned k);

/// Monic irreducibles of degree k in counting order (constant term least significant).
class MonicIrreducibleStream {
public:
    MonicIrreducibleStream(const PolyRing& ring, unsigned k);
    std::optional<Poly> next();

private:
    bool advance();

    const PolyRing& ring_;
    unsigned k_;
    u64 radix_;
    std::vector<std::uint32_t> digits_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Poly> monic_irreducibles(const PolyRing& ring, unsigned k);

}  // namespace gm
