#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galois_moebius/arith.hpp"

namespace gm {

/// An element of the top field F_{q^n} of a tower.
///
/// The code packs the base-p digit vector with the constant digit least
/// significant: code = sum_j code_q(c_j) q^j, code_q(c) = sum_i c_i p^i.
/// With this packing F_p and F_q are the code prefixes [0, p) and [0, q), and
/// integer order on codes is the deterministic element order used everywhere.
struct Elem {
    std::uint32_t code = 0;

    friend auto operator<=>(const Elem&, const Elem&) = default;
};

enum class Level { Prime, Base, Top };

/// F_p ⊆ F_q = F_p[u]/(g) ⊆ F_{q^n} = F_q[v]/(h).
///
/// Arithmetic is table driven (discrete logarithms with respect to a primitive
/// element, Zech logarithms for odd characteristic). The tables are shared
/// between copies and never mutated after construction.
class FieldTower {
public:
    static constexpr u64 kMaxOrder = u64{1} << 20;

    /// Validates or chooses the moduli. Default moduli are the first monic
    /// irreducible polynomial in counting order (constant term the least
    /// significant digit).
    static FieldTower build(u64 p, unsigned e, unsigned n,
                            std::optional<std::vector<std::uint32_t>> g = std::nullopt,
                            std::optional<std::vector<Elem>> h = std::nullopt);

    u64 p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned n() const { return n_; }
    u64 q() const { return q_; }
    u64 order() const { return order_; }
    u64 size(Level level) const;

    /// Modulus of F_q over F_p, constant term first, monic of degree e.
    const std::vector<std::uint32_t>& g() const { return g_; }
    /// Modulus of F_{q^n} over F_q, constant term first, monic of degree n.
    const std::vector<Elem>& h() const { return h_; }

    Elem zero() const { return {0}; }
    Elem one() const { return {1}; }
    Elem from_int(std::int64_t k) const;
    Elem primitive() const { return {t_->exp[1]}; }

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return {a.code ^ b.code};
        if (a.code == 0) return b;
        if (b.code == 0) return a;
        const u64 la = t_->log[a.code], lb = t_->log[b.code];
        const u64 k = lb >= la ? lb - la : lb + qm1_ - la;
        const std::int64_t z = t_->zech[k];
        if (z < 0) return {0};
        return {t_->exp[la + static_cast<u64>(z)]};
    }
    Elem neg(Elem a) const {
        if (p_ == 2 || a.code == 0) return a;
        return {t_->exp[t_->log[a.code] + qm1_ / 2]};
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (a.code == 0 || b.code == 0) return {0};
        return {t_->exp[t_->log[a.code] + t_->log[b.code]]};
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, u64 k) const {
        if (k == 0) return {1};
        if (a.code == 0) return {0};
        return {t_->exp[mul_mod(t_->log[a.code], k % qm1_, qm1_)]};
    }
    /// sigma_i(a) = a^{q^i}; i is reduced modulo n, negative values allowed.
    Elem frobenius(Elem a, std::int64_t i) const {
        if (a.code == 0) return a;
        const auto idx = static_cast<std::size_t>(((i % static_cast<std::int64_t>(n_)) + n_) % n_);
        return {t_->exp[mul_mod(t_->log[a.code], t_->frob_exp[idx], qm1_)]};
    }
    /// Least t | n with sigma_t(a) = a.
    unsigned subfield_degree(Elem a) const;
    bool in_level(Elem a, Level level) const { return a.code < size(level); }

    /// Discrete logarithm with respect to primitive(); a must be nonzero.
    u64 log(Elem a) const;
    u64 mult_order(Elem a) const;

    /// n coefficient lists over F_q, each with e base-p digits.
    std::vector<std::vector<std::uint32_t>> digits(Elem a) const;
    Elem from_digits(const std::vector<std::vector<std::uint32_t>>& d) const;

    /// Text forms. Prime-field elements print as a bare integer; everything
    /// else uses the nested bracket grammar ([c0,..] when e = 1).
    std::string format(Elem a) const;
    std::string format_brackets(Elem a) const;
    Elem parse(std::string_view text) const;

    friend bool operator==(const FieldTower& x, const FieldTower& y) {
        return x.p_ == y.p_ && x.e_ == y.e_ && x.n_ == y.n_ && x.g_ == y.g_ && x.h_ == y.h_;
    }

private:
    struct Tables {
        std::vector<std::uint32_t> log;
        std::vector<std::uint32_t> exp;       // length 2(Q-1) so exp[la + lb] needs no reduction
        std::vector<std::int64_t> zech;       // odd p only; -1 marks 1 + x^k = 0
        std::vector<u64> frob_exp;            // q^i mod (Q-1), i < n
    };

    FieldTower(u64 p, unsigned e, unsigned n, std::vector<std::uint32_t> g, std::vector<Elem> h);

    u64 p_ = 2;
    unsigned e_ = 1;
    unsigned n_ = 1;
    u64 q_ = 2;
    u64 order_ = 2;
    u64 qm1_ = 1;
    std::vector<std::uint32_t> g_;
    std::vector<Elem> h_;
    std::shared_ptr<const Tables> t_;
};

}  // namespace gm
