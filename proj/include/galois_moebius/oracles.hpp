#pragma once

#include <vector>

#include "galois_moebius/pgammal.hpp"

// Definitional brute-force computations. They share no code path with the
// fast routines they are compared against beyond field and polynomial
// arithmetic.
namespace gm::oracle {

/// Least D with M^D scalar, by repeated multiplication.
u64 proj_order(const FieldTower& F, const Mat2& m);

/// Least k with g^k = [I, s_n], by repeated group products.
u64 semilinear_order(const FieldTower& F, const Semilinear& g);

/// Monic irreducibles f of degree k over F_{q^2} with f* = s_1(f). The ring
/// must be over the top field of a tower with n = 2.
std::vector<Poly> scrim_scan(const PolyRing& ring, unsigned k);

/// Monic irreducibles of degree k over the ring's field with f* = f.
std::vector<Poly> srim_scan(const PolyRing& ring, unsigned k);

/// Every r in 1..deg f with [A, s_1] * alpha = alpha^{q^{nr}} for a root alpha of f,
/// evaluated in F_Q[w]/(f).
std::vector<unsigned> root_condition_r(const PolyRing& ring, const Mat2& A, const Poly& f);

}  // namespace gm::oracle
