#include "galois_moebius/ext_field.hpp"

#include "galois_moebius/errors.hpp"

namespace gm {

ExtensionField::ExtensionField(PolyRing ring, Poly modulus) : ring_(std::move(ring)), modulus_(std::move(modulus)) {
    if (modulus_.degree() < 1) fail(ErrorKind::DegreeTooSmall, "extension modulus must be nonconstant");
    modulus_ = ring_.monic(modulus_);
}

Poly ExtensionField::inv(const Poly& a) const {
    const Poly r = ring_.rem(a, modulus_);
    if (r.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in extension field");
    auto bz = ring_.xgcd(r, modulus_);
    if (bz.g != ring_.one()) fail(ErrorKind::DivisionByZero, "element not invertible; modulus is reducible");
    return ring_.rem(bz.s, modulus_);
}

Poly ExtensionField::frobenius(const Poly& a, u64 j) const {
    const u64 q = ring_.tower().q();
    Poly r = ring_.rem(a, modulus_);
    for (u64 i = 0; i < j; ++i) r = pow(r, q);
    return r;
}

Poly ExtensionField::frobenius_top(const Poly& a, u64 r) const {
    const u64 Q = ring_.field_size();
    Poly out = ring_.rem(a, modulus_);
    for (u64 i = 0; i < r; ++i) out = pow(out, Q);
    return out;
}

}  // namespace gm
