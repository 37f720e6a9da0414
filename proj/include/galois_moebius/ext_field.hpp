#pragma once

#include "galois_moebius/poly.hpp"

namespace gm {

/// F_{Q^k} realized as F_Q[w]/(m) for a monic irreducible m of degree k over
/// the top field of a tower. Used to hold roots of degree-k irreducibles; when
/// m is the polynomial itself, w is a root.
class ExtensionField {
public:
    ExtensionField(PolyRing ring, Poly modulus);

    const PolyRing& ring() const { return ring_; }
    const Poly& modulus() const { return modulus_; }
    unsigned degree() const { return static_cast<unsigned>(modulus_.degree()); }

    Poly embed(Elem a) const { return ring_.constant(a); }
    Poly generator() const { return ring_.rem(ring_.x(), modulus_); }

    Poly add(const Poly& a, const Poly& b) const { return ring_.add(a, b); }
    Poly sub(const Poly& a, const Poly& b) const { return ring_.sub(a, b); }
    Poly mul(const Poly& a, const Poly& b) const { return ring_.mulmod(a, b, modulus_); }
    Poly inv(const Poly& a) const;
    Poly div(const Poly& a, const Poly& b) const { return mul(a, inv(b)); }
    Poly pow(const Poly& a, u64 k) const { return ring_.powmod(a, k, modulus_); }
    /// a^{q^j} with q the size of the tower's base field F_q.
    Poly frobenius(const Poly& a, u64 j) const;
    /// a^{Q^r} with Q the size of the coefficient field.
    Poly frobenius_top(const Poly& a, u64 r) const;
    bool is_one(const Poly& a) const { return a == ring_.one(); }

private:
    PolyRing ring_;
    Poly modulus_;
};

}  // namespace gm
