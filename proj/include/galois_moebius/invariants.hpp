#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galois_moebius/pgammal.hpp"

namespace gm {

struct Caps {
    /// Largest divisor-polynomial degree the fast method will build and factor.
    u64 enum_degree = kDefaultDegreeCap;
    /// Largest candidate space Q^k a census may scan.
    u64 census_candidates = u64{1} << 24;
};

/// One admissible r with m = (nr - 1)/s and j the least positive solution of
/// j m = 1 (mod D n).
struct RValue {
    u64 r = 0;
    u64 m = 0;
    u64 j = 0;

    friend bool operator==(const RValue&, const RValue&) = default;
};

struct EnumerationParams {
    Mat2 matrix;
    u64 D = 1;
    u64 s = 1;
    std::vector<RValue> r_values;
};

struct CensusEntry {
    unsigned degree = 0;
    std::vector<Poly> polys;  // sorted by poly_less
    double millis = 0.0;
};

struct CensusReport {
    std::string method;  // "brute-force" or "theorem-3.4"
    u64 p = 0;
    unsigned e = 0;
    unsigned n = 0;
    std::string matrix;
    unsigned frob = 1;
    std::optional<u64> D;
    std::vector<CensusEntry> entries;

    const CensusEntry* find(unsigned degree) const;
};

/// Precomputed Mobius expansion for a fixed matrix and degree:
/// image(f) = sum_j f_j (a x + c)^j (b x + d)^{k-j}.
class MobiusKernel {
public:
    MobiusKernel(const PolyRing& ring, const Mat2& m, unsigned degree);

    /// Unnormalized image; degree may drop for inputs with linear factors.
    Poly image(const Poly& f) const;
    /// True iff the image of `moved` is a scalar multiple of `target` of full degree.
    bool maps_to(const Poly& moved, const Poly& target) const;

private:
    const PolyRing& ring_;
    unsigned degree_;
    std::vector<Poly> basis_;
};

bool is_invariant(const PolyRing& ring, const Semilinear& g, const Poly& f);

/// r in [1, D s] with s | nr - 1 and gcd((nr - 1)/s, D) = 1, by direct filtering.
std::vector<u64> valid_r_values(u64 s, u64 n, u64 D);

/// Parameters for degree k, or nullopt when k is not D*s with gcd(s, n) = 1.
std::optional<EnumerationParams> enumeration_params(const FieldTower& F, const Mat2& A, unsigned k);

/// The polynomial s_{-j}(F_{A_j^*, s}) whose degree-Ds factors are the
/// invariants attached to one r.
Poly enumeration_target(const PolyRing& ring, const Mat2& A, u64 s, const RValue& rv, const Caps& caps = {});

/// [A, s_1]-invariants of degree k > 2 from the factors of the target polynomials.
CensusReport enumerate_invariants(const PolyRing& ring, const Mat2& A, unsigned k, const Caps& caps = {},
                                  u64 seed = 0);

/// Exhaustive fixed points of degree k by direct predicate. When `pool` is
/// given it must hold every monic irreducible of degree k; otherwise all
/// monic candidates are scanned.
std::vector<Poly> census_degree(const PolyRing& ring, const Semilinear& g, unsigned k, const Caps& caps = {},
                                const std::vector<Poly>* pool = nullptr);
/// Degrees min_degree..max_degree.
CensusReport census(const PolyRing& ring, const Semilinear& g, unsigned max_degree, const Caps& caps = {},
                    unsigned min_degree = 2);

u64 scrim_count(u64 q, unsigned n);
u64 bju_scrim_count(u64 q, unsigned n);
u64 srim_count(u64 q, unsigned n);

struct ScrimConstruction {
    PolyRing ring;  // over F_{q^2}
    Poly srim;      // self-reciprocal irreducible of degree 2m over F_q
    Poly first;
    Poly second;
};
ScrimConstruction construct_scrim(u64 q, unsigned m, u64 seed = 0);

struct LiftResult {
    u64 d = 0;
    u64 d0 = 0;
    u64 s = 0;
    unsigned t = 0;
    Poly G;
    bool invariant_for_i = false;
    bool verdict_i = false;    // invariant for some i coprime to n
    bool verdict_ii = false;   // verdict_i and t = d0
    bool verdict_iii = false;  // G has degree ds, lies in F_q[x], is irreducible there and [A]-invariant
    bool consistent() const { return verdict_i == verdict_ii && verdict_ii == verdict_iii; }
};
LiftResult lift_check(const PolyRing& ring, const Poly& f, const Mat2& A, unsigned i);

struct InvolutionRatio {
    u64 count_top = 0;
    u64 count_base = 0;
};
InvolutionRatio involution_ratio_check(u64 q, const Mat2& B, unsigned m, const Caps& caps = {});

struct AsymptoticRow {
    u64 s = 0;
    u64 degree = 0;
    u64 exact = 0;
    double predicted = 0.0;
    double ratio = 0.0;
};
/// Rows for each s (coprime to n); s with D*s <= 2 are skipped.
std::vector<AsymptoticRow> asymptotic_report(const PolyRing& ring, const Mat2& A, const std::vector<u64>& s_values,
                                             const Caps& caps = {});

std::string report_json(const PolyRing& ring, const CensusReport& report, bool timing = false);
std::string report_text(const PolyRing& ring, const CensusReport& report, bool timing = false);

}  // namespace gm
