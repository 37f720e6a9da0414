#include "galois_moebius/oracles.hpp"

#include "galois_moebius/errors.hpp"

namespace gm::oracle {

u64 proj_order(const FieldTower& F, const Mat2& m) {
    if (det(F, m).code == 0) fail(ErrorKind::SingularMatrix, "matrix is singular");
    const u64 Q = F.order();
    const u64 limit = Q * (Q + 1);
    Mat2 acc = m;
    for (u64 k = 1; k <= limit; ++k) {
        if (is_scalar(acc)) return k;
        acc = mat_mul(F, acc, m);
    }
    fail(ErrorKind::InvariantViolation, "no scalar power below |PGL(2, Q)|");
}

u64 semilinear_order(const FieldTower& F, const Semilinear& g) {
    const Semilinear id = group_identity(F);
    const u64 Q = F.order();
    const u64 limit = F.n() * Q * (Q + 1) * (Q - 1);
    Semilinear acc = g;
    for (u64 k = 1; k <= limit; ++k) {
        if (acc == id) return k;
        acc = group_mul(F, acc, g);
    }
    fail(ErrorKind::InvariantViolation, "no identity power below the group order");
}

namespace {

template <class Keep>
std::vector<Poly> scan_monic(const PolyRing& ring, unsigned k, Keep&& keep) {
    const u64 Q = ring.field_size();
    const u64 space = checked_pow(Q, k);
    std::vector<Poly> out;
    std::vector<Elem> c(k + 1, Elem{0});
    c[k] = Elem{1};
    for (u64 idx = 0; idx < space; ++idx) {
        u64 rest = idx;
        for (unsigned i = 0; i < k; ++i) {
            c[i] = Elem{static_cast<std::uint32_t>(rest % Q)};
            rest /= Q;
        }
        if (c[0].code == 0) continue;
        const Poly f(c);
        if (keep(f) && ring.is_irreducible(f)) out.push_back(f);
    }
    return out;
}

}  // namespace

std::vector<Poly> scrim_scan(const PolyRing& ring, unsigned k) {
    if (ring.tower().n() != 2 || ring.level() != Level::Top)
        fail(ErrorKind::LevelMismatch, "scrim_scan needs the top field of a tower with n = 2");
    return scan_monic(ring, k, [&](const Poly& f) { return ring.reciprocal(f) == ring.sigma(f, 1); });
}

std::vector<Poly> srim_scan(const PolyRing& ring, unsigned k) {
    return scan_monic(ring, k, [&](const Poly& f) { return ring.reciprocal(f) == f; });
}

std::vector<unsigned> root_condition_r(const PolyRing& ring, const Mat2& A, const Poly& f) {
    const FieldTower& F = ring.tower();
    const ExtensionField E(ring, f);
    const Poly alpha = E.generator();
    const Poly lhs = root_act(E, make_semilinear(F, A, 1), alpha);
    std::vector<unsigned> out;
    Poly power = alpha;
    for (unsigned r = 1; r <= static_cast<unsigned>(f.degree()); ++r) {
        power = E.frobenius_top(power, 1);  // alpha^{q^{nr}}
        if (power == lhs) out.push_back(r);
    }
    return out;
}

}  // namespace gm::oracle
