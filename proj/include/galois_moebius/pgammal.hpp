#pragma once

#include <compare>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "galois_moebius/ext_field.hpp"
#include "galois_moebius/poly.hpp"

namespace gm {

/// Largest polynomial degree build_F will materialize by default (q^m <= 2^14).
inline constexpr u64 kDefaultDegreeCap = (u64{1} << 14) + 1;

/// Row-major [[a, b], [c, d]] over the top field.
struct Mat2 {
    Elem a, b, c, d;

    friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

Mat2 identity_mat();
Elem det(const FieldTower& F, const Mat2& m);
Mat2 mat_mul(const FieldTower& F, const Mat2& x, const Mat2& y);
Mat2 mat_scale(const FieldTower& F, const Mat2& m, Elem s);
Mat2 mat_inverse(const FieldTower& F, const Mat2& m);
/// Entrywise sigma_i.
Mat2 mat_frobenius(const FieldTower& F, const Mat2& m, std::int64_t i);
bool is_scalar(const Mat2& m);
bool in_level(const FieldTower& F, const Mat2& m, Level level);

/// Projective class of an invertible matrix. The representative is scaled so
/// that its first nonzero entry in the order a, b, c, d equals one.
class ProjMat2 {
public:
    static ProjMat2 from(const FieldTower& F, const Mat2& m);

    const Mat2& rep() const { return rep_; }

    friend auto operator<=>(const ProjMat2&, const ProjMat2&) = default;

private:
    explicit ProjMat2(const Mat2& m) : rep_(m) {}
    Mat2 rep_;
};

/// [A, sigma_i] with i normalized into 1..n; sigma_n is the identity.
struct Semilinear {
    ProjMat2 mat;
    unsigned frob;

    friend auto operator<=>(const Semilinear&, const Semilinear&) = default;
};

Semilinear make_semilinear(const FieldTower& F, const Mat2& m, std::int64_t frob);
Semilinear group_identity(const FieldTower& F);
/// [A, s_i] * [B, s_j] = [A s_i(B), s_{i+j}]
Semilinear group_mul(const FieldTower& F, const Semilinear& x, const Semilinear& y);
Semilinear group_inverse(const FieldTower& F, const Semilinear& g);
Semilinear group_pow(const FieldTower& F, const Semilinear& g, u64 k);

/// Mobius image: monic multiple of sum_j f_j (a x + c)^j (b x + d)^{k-j}.
/// Defined for deg f >= 2. Throws InvariantViolation if the expansion loses
/// its top coefficient (only possible when f has a linear factor).
Poly mat_act_poly(const PolyRing& ring, const Mat2& m, const Poly& f);
/// Same as mat_act_poly but returns nullopt where that would throw on degree loss.
std::optional<Poly> try_mat_act_poly(const PolyRing& ring, const Mat2& m, const Poly& f);
/// [A, s_i] * f = [A] o s_i(f)
Poly semilinear_act(const PolyRing& ring, const Semilinear& g, const Poly& f);

/// A s_1(A) ... s_{i-1}(A); a_star(A, 0) is the identity.
Mat2 a_star(const FieldTower& F, const Mat2& m, unsigned i);

/// Least D >= 1 with M^D scalar, from the eigenvalue structure.
u64 proj_order(const FieldTower& F, const Mat2& m);
/// n/t * ord([C]), t = gcd(i, n), C = A s_i(A) ... s_{i(n/t-1)}(A).
u64 semilinear_order(const FieldTower& F, const Semilinear& g);
/// g^P for the least prime P > ord(g) with P*i = t mod n; the result has frob = t.
Semilinear reduce_to_sigma_t(const FieldTower& F, const Semilinear& g);

/// b x^{q^m+1} - a x^{q^m} + d x - c
Poly build_F(const PolyRing& ring, const Mat2& m, unsigned mexp, u64 degree_cap = kDefaultDegreeCap);
/// s_{-i}(F_{A_i^*, m-i})
Poly build_F_i(const PolyRing& ring, const Mat2& m, unsigned mexp, unsigned i, u64 degree_cap = kDefaultDegreeCap);

/// [A, s_i] * alpha = (d beta - c) / (-b beta + a), beta = alpha^{q^i}.
Poly root_act(const ExtensionField& E, const Semilinear& g, const Poly& alpha);
Poly root_act_mat(const ExtensionField& E, const Mat2& m, const Poly& beta);

/// Every class of PGL(2, Q) in increasing representative order.
std::vector<ProjMat2> all_proj_classes(const FieldTower& F, Level level = Level::Top);
Mat2 random_invertible(const FieldTower& F, std::mt19937_64& rng, Level level = Level::Top);

std::string format_matrix(const FieldTower& F, const Mat2& m);
Mat2 parse_matrix(const FieldTower& F, std::string_view text);

}  // namespace gm
