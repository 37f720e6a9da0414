#include "galois_moebius/pgammal.hpp"

#include <numeric>

#include "galois_moebius/errors.hpp"

namespace gm {

Mat2 identity_mat() { return {Elem{1}, Elem{0}, Elem{0}, Elem{1}}; }

Elem det(const FieldTower& F, const Mat2& m) { return F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c)); }

Mat2 mat_mul(const FieldTower& F, const Mat2& x, const Mat2& y) {
    return {F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
            F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)), F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

Mat2 mat_scale(const FieldTower& F, const Mat2& m, Elem s) {
    return {F.mul(m.a, s), F.mul(m.b, s), F.mul(m.c, s), F.mul(m.d, s)};
}

Mat2 mat_inverse(const FieldTower& F, const Mat2& m) {
    const Elem dt = det(F, m);
    if (dt.code == 0) fail(ErrorKind::SingularMatrix, "matrix is singular");
    const Elem di = F.inv(dt);
    return mat_scale(F, {m.d, F.neg(m.b), F.neg(m.c), m.a}, di);
}

Mat2 mat_frobenius(const FieldTower& F, const Mat2& m, std::int64_t i) {
    return {F.frobenius(m.a, i), F.frobenius(m.b, i), F.frobenius(m.c, i), F.frobenius(m.d, i)};
}

bool is_scalar(const Mat2& m) { return m.b.code == 0 && m.c.code == 0 && m.a == m.d; }

bool in_level(const FieldTower& F, const Mat2& m, Level level) {
    return F.in_level(m.a, level) && F.in_level(m.b, level) && F.in_level(m.c, level) && F.in_level(m.d, level);
}

ProjMat2 ProjMat2::from(const FieldTower& F, const Mat2& m) {
    if (det(F, m).code == 0) fail(ErrorKind::SingularMatrix, "matrix is singular");
    for (Elem lead : {m.a, m.b, m.c, m.d}) {
        if (lead.code != 0) return ProjMat2(mat_scale(F, m, F.inv(lead)));
    }
    fail(ErrorKind::SingularMatrix, "zero matrix");
}

Semilinear make_semilinear(const FieldTower& F, const Mat2& m, std::int64_t frob) {
    const auto n = static_cast<std::int64_t>(F.n());
    std::int64_t i = ((frob % n) + n) % n;
    if (i == 0) i = n;
    return {ProjMat2::from(F, m), static_cast<unsigned>(i)};
}

Semilinear group_identity(const FieldTower& F) { return make_semilinear(F, identity_mat(), F.n()); }

Semilinear group_mul(const FieldTower& F, const Semilinear& x, const Semilinear& y) {
    const Mat2 m = mat_mul(F, x.mat.rep(), mat_frobenius(F, y.mat.rep(), x.frob));
    return make_semilinear(F, m, static_cast<std::int64_t>(x.frob) + y.frob);
}

Semilinear group_inverse(const FieldTower& F, const Semilinear& g) {
    const std::int64_t back = static_cast<std::int64_t>(F.n()) - g.frob;
    return make_semilinear(F, mat_frobenius(F, mat_inverse(F, g.mat.rep()), back), back);
}

Semilinear group_pow(const FieldTower& F, const Semilinear& g, u64 k) {
    Semilinear result = group_identity(F);
    Semilinear base = g;
    while (k) {
        if (k & 1) result = group_mul(F, result, base);
        k >>= 1;
        if (k) base = group_mul(F, base, base);
    }
    return result;
}

std::optional<Poly> try_mat_act_poly(const PolyRing& ring, const Mat2& m, const Poly& f) {
    const FieldTower& F = ring.tower();
    if (det(F, m).code == 0) fail(ErrorKind::SingularMatrix, "matrix is singular");
    const int k = f.degree();
    if (k < 2) fail(ErrorKind::DegreeTooSmall, "the action is defined for degree >= 2");
    const auto ku = static_cast<std::size_t>(k);
    const Poly num({m.c, m.a});  // a x + c
    const Poly den({m.d, m.b});  // b x + d
    std::vector<Poly> num_pow{ring.one()}, den_pow{ring.one()};
    for (std::size_t j = 1; j <= ku; ++j) {
        num_pow.push_back(ring.mul(num_pow.back(), num));
        den_pow.push_back(ring.mul(den_pow.back(), den));
    }
    Poly acc;
    for (std::size_t j = 0; j <= ku; ++j) {
        if (f.c[j].code == 0) continue;
        acc = ring.add(acc, ring.scale(ring.mul(num_pow[j], den_pow[ku - j]), f.c[j]));
    }
    if (acc.degree() != k) return std::nullopt;
    return ring.monic(acc);
}

Poly mat_act_poly(const PolyRing& ring, const Mat2& m, const Poly& f) {
    auto r = try_mat_act_poly(ring, m, f);
    if (!r) fail(ErrorKind::InvariantViolation, "Mobius image lost degree; input has a linear factor");
    return *r;
}

Poly semilinear_act(const PolyRing& ring, const Semilinear& g, const Poly& f) {
    return mat_act_poly(ring, g.mat.rep(), ring.sigma(f, g.frob));
}

Mat2 a_star(const FieldTower& F, const Mat2& m, unsigned i) {
    Mat2 acc = identity_mat();
    for (unsigned k = 0; k < i; ++k) acc = mat_mul(F, acc, mat_frobenius(F, m, k));
    return acc;
}

u64 proj_order(const FieldTower& F, const Mat2& m) {
    if (det(F, m).code == 0) fail(ErrorKind::SingularMatrix, "matrix is singular");
    if (is_scalar(m)) return 1;
    const PolyRing ring(F);
    // x^2 - tr x + det
    const Poly chi({det(F, m), F.neg(F.add(m.a, m.d)), F.one()});
    const auto facs = ring.factor(chi);
    if (facs.size() == 2) {
        const Elem l1 = F.neg(facs[0].poly.c[0]);
        const Elem l2 = F.neg(facs[1].poly.c[0]);
        return F.mult_order(F.div(l1, l2));
    }
    if (facs[0].multiplicity == 2) return F.p();
    // Irreducible: eigenvalues w, w^Q in F_Q[w]/(chi); their ratio w^{Q-1} has order dividing Q+1.
    const ExtensionField E(ring, chi);
    const u64 Q = F.order();
    const Poly ratio = E.pow(E.generator(), Q - 1);
    return multiplicative_order(
        ratio, Q + 1, [&](const Poly& x, u64 k) { return E.pow(x, k); }, [&](const Poly& x) { return E.is_one(x); });
}

u64 semilinear_order(const FieldTower& F, const Semilinear& g) {
    const unsigned n = F.n();
    const unsigned t = std::gcd(g.frob, n);
    const unsigned steps = n / t;
    Mat2 c = identity_mat();
    for (unsigned k = 0; k < steps; ++k)
        c = mat_mul(F, c, mat_frobenius(F, g.mat.rep(), static_cast<std::int64_t>(g.frob) * k));
    return static_cast<u64>(steps) * proj_order(F, c);
}

Semilinear reduce_to_sigma_t(const FieldTower& F, const Semilinear& g) {
    const unsigned n = F.n();
    const unsigned t = std::gcd(g.frob, n);
    const u64 nt = n / t;
    const u64 residue = nt == 1 ? 0 : *mod_inverse((g.frob / t) % nt, nt);
    const u64 ord = semilinear_order(F, g);
    u64 P = ord + 1;
    while (P % nt != residue || !is_prime(P)) ++P;
    Semilinear h = group_pow(F, g, P);
    if (h.frob != t) fail(ErrorKind::InvariantViolation, "reduced element has unexpected Frobenius index");
    return h;
}

Poly build_F(const PolyRing& ring, const Mat2& m, unsigned mexp, u64 degree_cap) {
    const FieldTower& F = ring.tower();
    if (det(F, m).code == 0) fail(ErrorKind::SingularMatrix, "matrix is singular");
    u64 qm = 1;
    for (unsigned i = 0; i < mexp; ++i) {
        if (qm > degree_cap) break;
        qm *= F.q();
    }
    if (qm + 1 > degree_cap)
        fail(ErrorKind::DegreeTooLarge, "F_{A,m} would have degree above the cap " + std::to_string(degree_cap));
    const auto top = static_cast<std::size_t>(qm);
    Poly f = ring.monomial(m.b, top + 1);
    f = ring.add(f, ring.monomial(F.neg(m.a), top));
    f = ring.add(f, ring.monomial(m.d, 1));
    f = ring.add(f, ring.constant(F.neg(m.c)));
    return f;
}

Poly build_F_i(const PolyRing& ring, const Mat2& m, unsigned mexp, unsigned i, u64 degree_cap) {
    if (i > mexp) fail(ErrorKind::DegreeMismatch, "F_{A,m,i} needs i <= m");
    const Mat2 star = a_star(ring.tower(), m, i);
    return ring.sigma(build_F(ring, star, mexp - i, degree_cap), -static_cast<std::int64_t>(i));
}

Poly root_act_mat(const ExtensionField& E, const Mat2& m, const Poly& beta) {
    const FieldTower& F = E.ring().tower();
    const Poly num = E.sub(E.mul(E.embed(m.d), beta), E.embed(m.c));
    const Poly den = E.add(E.mul(E.embed(F.neg(m.b)), beta), E.embed(m.a));
    if (E.ring().rem(den, E.modulus()).is_zero()) fail(ErrorKind::ZeroDenominator, "Mobius denominator vanishes");
    return E.div(num, den);
}

Poly root_act(const ExtensionField& E, const Semilinear& g, const Poly& alpha) {
    return root_act_mat(E, g.mat.rep(), E.frobenius(alpha, g.frob));
}

std::vector<ProjMat2> all_proj_classes(const FieldTower& F, Level level) {
    const auto size = static_cast<std::uint32_t>(F.size(level));
    std::vector<ProjMat2> out;
    auto push = [&](const Mat2& m) {
        if (det(F, m).code != 0) out.push_back(ProjMat2::from(F, m));
    };
    // Leading entry b (a = 0) sorts before leading entry a = 1.
    for (std::uint32_t c = 0; c < size; ++c)
        for (std::uint32_t d = 0; d < size; ++d) push({Elem{0}, Elem{1}, Elem{c}, Elem{d}});
    for (std::uint32_t b = 0; b < size; ++b)
        for (std::uint32_t c = 0; c < size; ++c)
            for (std::uint32_t d = 0; d < size; ++d) push({Elem{1}, Elem{b}, Elem{c}, Elem{d}});
    return out;
}

Mat2 random_invertible(const FieldTower& F, std::mt19937_64& rng, Level level) {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(F.size(level) - 1));
    while (true) {
        Mat2 m{Elem{pick(rng)}, Elem{pick(rng)}, Elem{pick(rng)}, Elem{pick(rng)}};
        if (det(F, m).code != 0) return m;
    }
}

std::string format_matrix(const FieldTower& F, const Mat2& m) {
    return F.format(m.a) + ";" + F.format(m.b) + ";" + F.format(m.c) + ";" + F.format(m.d);
}

Mat2 parse_matrix(const FieldTower& F, std::string_view text) {
    std::vector<Elem> entries;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ';') {
            entries.push_back(F.parse(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    if (entries.size() != 4) fail(ErrorKind::Parse, "matrix needs four ';'-separated entries");
    return {entries[0], entries[1], entries[2], entries[3]};
}

}  // namespace gm
