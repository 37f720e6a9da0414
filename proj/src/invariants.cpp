#include "galois_moebius/invariants.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "galois_moebius/errors.hpp"
#include "galois_moebius/parallel.hpp"

namespace gm {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::pair<u64, unsigned> require_prime_power(u64 q) {
    auto pe = prime_power_decompose(q);
    if (!pe) fail(ErrorKind::NotPrime, "q = " + std::to_string(q) + " is not a prime power");
    return *pe;
}

// Q^k, or nullopt once it passes `limit`.
std::optional<u64> bounded_pow(u64 base, unsigned k, u64 limit) {
    u64 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (acc > limit / base) return std::nullopt;
        acc *= base;
    }
    return acc;
}

__int128 signed_moebius_sum(u64 q, unsigned n) {
    __int128 total = 0;
    for (u64 d : divisors(n)) {
        const int mu = moebius_mu(d);
        if (mu == 0) continue;
        const __int128 term = checked_pow(q, static_cast<unsigned>(n / d));
        total += mu > 0 ? term : -term;
    }
    return total;
}

void sort_unique_or_fail(std::vector<Poly>& polys, const char* what) {
    std::sort(polys.begin(), polys.end(), PolyLess{});
    if (std::adjacent_find(polys.begin(), polys.end()) != polys.end())
        fail(ErrorKind::InvariantCheckFailed, what);
}

}  // namespace

const CensusEntry* CensusReport::find(unsigned degree) const {
    for (const auto& e : entries)
        if (e.degree == degree) return &e;
    return nullptr;
}

MobiusKernel::MobiusKernel(const PolyRing& ring, const Mat2& m, unsigned degree) : ring_(ring), degree_(degree) {
    if (det(ring.tower(), m).code == 0) fail(ErrorKind::SingularMatrix, "matrix is singular");
    const Poly num({m.c, m.a});
    const Poly den({m.d, m.b});
    std::vector<Poly> num_pow{ring.one()}, den_pow{ring.one()};
    for (unsigned j = 1; j <= degree; ++j) {
        num_pow.push_back(ring.mul(num_pow.back(), num));
        den_pow.push_back(ring.mul(den_pow.back(), den));
    }
    basis_.reserve(degree + 1);
    for (unsigned j = 0; j <= degree; ++j) basis_.push_back(ring.mul(num_pow[j], den_pow[degree - j]));
}

Poly MobiusKernel::image(const Poly& f) const {
    const FieldTower& F = ring_.tower();
    std::vector<Elem> acc(degree_ + 1, F.zero());
    for (std::size_t j = 0; j < f.c.size() && j <= degree_; ++j) {
        const Elem fj = f.c[j];
        if (fj.code == 0) continue;
        const auto& b = basis_[j].c;
        for (std::size_t t = 0; t < b.size(); ++t) acc[t] = F.add(acc[t], F.mul(fj, b[t]));
    }
    return Poly(std::move(acc));
}

bool MobiusKernel::maps_to(const Poly& moved, const Poly& target) const {
    const Poly img = image(moved);
    if (img.degree() != static_cast<int>(degree_) || target.degree() != static_cast<int>(degree_)) return false;
    const FieldTower& F = ring_.tower();
    const Elem lead = img.lead();
    const Elem tlead_inv = F.inv(target.lead());
    for (std::size_t t = 0; t <= degree_; ++t)
        if (img.c[t] != F.mul(lead, F.mul(target.c[t], tlead_inv))) return false;
    return true;
}

bool is_invariant(const PolyRing& ring, const Semilinear& g, const Poly& f) {
    const auto img = try_mat_act_poly(ring, g.mat.rep(), ring.sigma(f, g.frob));
    return img && *img == f;
}

std::vector<u64> valid_r_values(u64 s, u64 n, u64 D) {
    if (s == 0 || n == 0 || D == 0) fail(ErrorKind::DegreeHypothesisViolated, "s, n and D must be positive");
    if (std::gcd(s, n) != 1) fail(ErrorKind::DegreeHypothesisViolated, "valid_r_values needs gcd(s, n) = 1");
    std::vector<u64> out;
    for (u64 r = 1; r <= D * s; ++r) {
        const u64 nr = n * r;
        if ((nr - 1) % s != 0) continue;
        if (std::gcd((nr - 1) / s, D) != 1) continue;
        out.push_back(r);
    }
    return out;
}

std::optional<EnumerationParams> enumeration_params(const FieldTower& F, const Mat2& A, unsigned k) {
    const u64 n = F.n();
    const u64 D = proj_order(F, a_star(F, A, F.n()));
    if (k % D != 0) return std::nullopt;
    const u64 s = k / D;
    if (std::gcd(s, n) != 1) return std::nullopt;
    EnumerationParams params{A, D, s, {}};
    const u64 Dn = D * n;
    for (u64 r : valid_r_values(s, n, D)) {
        const u64 m = (n * r - 1) / s;
        u64 j = 0;
        // Dn = 1 accepts every j; the least positive one is 1.
        for (u64 c = 1; c <= Dn; ++c) {
            if ((c * m) % Dn == 1 % Dn) {
                j = c;
                break;
            }
        }
        if (j == 0) fail(ErrorKind::InvariantViolation, "no inverse of m modulo Dn");
        params.r_values.push_back({r, m, j});
    }
    return params;
}

Poly enumeration_target(const PolyRing& ring, const Mat2& A, u64 s, const RValue& rv, const Caps& caps) {
    const FieldTower& F = ring.tower();
    const Mat2 star = a_star(F, A, static_cast<unsigned>(rv.j));
    const Poly base = build_F(ring, star, static_cast<unsigned>(s), caps.enum_degree);
    return ring.sigma(base, -static_cast<std::int64_t>(rv.j % F.n()));
}

CensusReport enumerate_invariants(const PolyRing& ring, const Mat2& A, unsigned k, const Caps& caps, u64 seed) {
    const FieldTower& F = ring.tower();
    if (k <= 2) fail(ErrorKind::DegreeTooSmall, "enumeration needs degree > 2");
    const auto start = Clock::now();
    CensusReport report;
    report.method = "theorem-3.4";
    report.p = F.p();
    report.e = F.e();
    report.n = F.n();
    report.matrix = format_matrix(F, A);
    report.frob = 1;
    CensusEntry entry;
    entry.degree = k;
    const auto params = enumeration_params(F, A, k);
    report.D = proj_order(F, a_star(F, A, F.n()));
    if (params) {
        const Semilinear g = make_semilinear(F, A, 1);
        // Build all targets first so a cap violation surfaces before any factoring work.
        std::vector<Poly> targets;
        for (const auto& rv : params->r_values) targets.push_back(enumeration_target(ring, A, params->s, rv, caps));
        auto chunks = parallel_chunks<std::vector<Poly>>(targets.size(), [&](std::size_t b, std::size_t e) {
            std::vector<Poly> found;
            for (std::size_t t = b; t < e; ++t) {
                for (auto& fac : ring.factors_of_degree(targets[t], k, seed)) {
                    if (!is_invariant(ring, g, fac.poly))
                        fail(ErrorKind::InvariantCheckFailed,
                             "harvested factor " + ring.format(fac.poly) + " is not invariant");
                    found.push_back(std::move(fac.poly));
                }
            }
            return found;
        });
        for (auto& c : chunks) entry.polys.insert(entry.polys.end(), c.begin(), c.end());
        sort_unique_or_fail(entry.polys, "the same invariant was harvested for two values of r");
    }
    entry.millis = millis_since(start);
    report.entries.push_back(std::move(entry));
    return report;
}

std::vector<Poly> census_degree(const PolyRing& ring, const Semilinear& g, unsigned k, const Caps& caps,
                                const std::vector<Poly>* pool) {
    if (k < 2) fail(ErrorKind::DegreeTooSmall, "the action is defined for degree >= 2");
    const MobiusKernel kernel(ring, g.mat.rep(), k);
    const auto frob = static_cast<std::int64_t>(g.frob);
    std::vector<std::vector<Poly>> chunks;
    if (pool) {
        chunks = parallel_chunks<std::vector<Poly>>(pool->size(), [&](std::size_t b, std::size_t e) {
            std::vector<Poly> found;
            for (std::size_t t = b; t < e; ++t) {
                const Poly& f = (*pool)[t];
                if (kernel.maps_to(ring.sigma(f, frob), f)) found.push_back(f);
            }
            return found;
        });
    } else {
        const u64 Q = ring.field_size();
        const auto space = bounded_pow(Q, k, caps.census_candidates);
        if (!space)
            fail(ErrorKind::BudgetExceeded, "census candidate space Q^k exceeds " +
                                                std::to_string(caps.census_candidates));
        chunks = parallel_chunks<std::vector<Poly>>(*space, [&](std::size_t b, std::size_t e) {
            std::vector<Poly> found;
            std::vector<Elem> c(k + 1, Elem{0});
            c[k] = Elem{1};
            for (std::size_t idx = b; idx < e; ++idx) {
                u64 rest = idx;
                for (unsigned i = 0; i < k; ++i) {
                    c[i] = Elem{static_cast<std::uint32_t>(rest % Q)};
                    rest /= Q;
                }
                if (c[0].code == 0) continue;  // x divides it
                const Poly f(c);
                if (kernel.maps_to(ring.sigma(f, frob), f) && ring.is_irreducible(f)) found.push_back(f);
            }
            return found;
        });
    }
    std::vector<Poly> out;
    for (auto& c : chunks) out.insert(out.end(), c.begin(), c.end());
    sort_unique_or_fail(out, "census produced a duplicate");
    return out;
}

CensusReport census(const PolyRing& ring, const Semilinear& g, unsigned max_degree, const Caps& caps,
                    unsigned min_degree) {
    const FieldTower& F = ring.tower();
    CensusReport report;
    report.method = "brute-force";
    report.p = F.p();
    report.e = F.e();
    report.n = F.n();
    report.matrix = format_matrix(F, g.mat.rep());
    report.frob = g.frob;
    for (unsigned k = std::max(min_degree, 2u); k <= max_degree; ++k) {
        const auto start = Clock::now();
        CensusEntry entry;
        entry.degree = k;
        entry.polys = census_degree(ring, g, k, caps);
        entry.millis = millis_since(start);
        report.entries.push_back(std::move(entry));
    }
    return report;
}

u64 scrim_count(u64 q, unsigned n) {
    require_prime_power(q);
    if (n % 2 == 0) fail(ErrorKind::EvenDegree, "the degree of any SCRIM is odd");
    if (n < 3) fail(ErrorKind::DegreeTooSmall, "scrim_count needs odd n >= 3");
    const __int128 total = signed_moebius_sum(q, n);
    if (total % n != 0) fail(ErrorKind::InvariantViolation, "Moebius sum not divisible by n");
    return static_cast<u64>(total / n);
}

u64 bju_scrim_count(u64 q, unsigned n) {
    require_prime_power(q);
    if (n % 2 == 0) fail(ErrorKind::EvenDegree, "the degree of any SCRIM is odd");
    if (n < 3) fail(ErrorKind::DegreeTooSmall, "bju_scrim_count needs odd n >= 3");
    const u64 top = checked_pow(q, n);
    if (top == UINT64_MAX) fail(ErrorKind::Overflow, "q^n + 1 overflows");
    std::vector<u64> lower;
    for (unsigned k = 0; k < n; ++k) lower.push_back(checked_pow(q, k) + 1);
    u64 total = 0;
    for (u64 d : divisors(top + 1)) {
        const bool old = std::any_of(lower.begin(), lower.end(), [d](u64 v) { return v % d == 0; });
        if (!old) total += euler_phi(d);
    }
    if (total % n != 0) fail(ErrorKind::InvariantViolation, "phi sum not divisible by n");
    return total / n;
}

u64 srim_count(u64 q, unsigned n) {
    require_prime_power(q);
    if (n % 2 == 0) fail(ErrorKind::EvenParameter, "srim_count needs odd n");
    if (n == 1 && q % 2 == 1)
        fail(ErrorKind::DegreeHypothesisViolated, "the closed form does not cover n = 1 in odd characteristic");
    const __int128 total = signed_moebius_sum(q, n);
    if (total % (2 * n) != 0) fail(ErrorKind::InvariantViolation, "Moebius sum not divisible by 2n");
    return static_cast<u64>(total / (2 * n));
}

ScrimConstruction construct_scrim(u64 q, unsigned m, u64 seed) {
    const auto [p, e] = require_prime_power(q);
    if (m % 2 == 0) fail(ErrorKind::EvenDegree, "the degree of any SCRIM is odd");
    if (m < 3) fail(ErrorKind::DegreeTooSmall, "construct_scrim needs odd m >= 3");
    if (srim_count(q, m) == 0) fail(ErrorKind::NotFound, "no self-reciprocal irreducible of degree 2m");
    const FieldTower F2 = FieldTower::build(p, e, 2);
    const PolyRing base(F2, Level::Base);
    const FieldTower& F = base.tower();
    const unsigned deg = 2 * m;
    // Self-reciprocal means c_0^2 = 1 and c_{2m-i} = c_0 c_i; the free digits are c_1..c_m.
    std::vector<Poly> candidates;
    const std::vector<Elem> units = q == 2 ? std::vector<Elem>{F.one()} : std::vector<Elem>{F.neg(F.one()), F.one()};
    const u64 space = checked_pow(q, m);
    for (Elem c0 : units) {
        for (u64 idx = 0; idx < space; ++idx) {
            std::vector<Elem> c(deg + 1, Elem{0});
            c[0] = c0;
            c[deg] = F.one();
            u64 rest = idx;
            for (unsigned i = 1; i <= m; ++i) {
                c[i] = Elem{static_cast<std::uint32_t>(rest % q)};
                rest /= q;
            }
            for (unsigned i = 1; i < m; ++i) c[deg - i] = F.mul(c0, c[i]);
            const Poly f(c);
            if (base.reciprocal(f) == f) candidates.push_back(f);
        }
    }
    std::sort(candidates.begin(), candidates.end(), PolyLess{});
    for (const auto& f : candidates) {
        if (!base.is_irreducible(f)) continue;
        PolyRing top(F2);
        auto facs = top.factor(f, seed);
        if (facs.size() != 2 || facs[0].poly.degree() != static_cast<int>(m))
            fail(ErrorKind::InvariantViolation, "self-reciprocal irreducible did not split into two halves");
        return {std::move(top), f, facs[0].poly, facs[1].poly};
    }
    fail(ErrorKind::NotFound, "scan found no self-reciprocal irreducible of degree 2m");
}

LiftResult lift_check(const PolyRing& ring, const Poly& f, const Mat2& A, unsigned i) {
    const FieldTower& F = ring.tower();
    const unsigned n = F.n();
    if (!in_level(F, A, Level::Base)) fail(ErrorKind::LevelMismatch, "lift_check needs a matrix over F_q");
    if (i == 0 || std::gcd(i, n) != 1) fail(ErrorKind::DegreeHypothesisViolated, "lift_check needs gcd(i, n) = 1");
    LiftResult out;
    out.d = proj_order(F, A);
    out.d0 = std::gcd(out.d, static_cast<u64>(n));
    const u64 step = out.d / out.d0;
    const auto k = static_cast<u64>(f.degree());
    if (k <= 2 || k % step != 0) fail(ErrorKind::DegreeHypothesisViolated, "degree must be (d/d0) s > 2");
    out.s = k / step;
    if (std::gcd(out.s, static_cast<u64>(n)) != 1) fail(ErrorKind::DegreeHypothesisViolated, "gcd(s, n) must be 1");
    if (!ring.is_irreducible(f)) fail(ErrorKind::DegreeHypothesisViolated, "f must be irreducible");

    out.t = ring.min_subfield_degree(f);
    out.G = ring.one();
    for (u64 j = 0; j < out.d0; ++j) out.G = ring.mul(out.G, ring.sigma(f, static_cast<std::int64_t>(j)));

    out.invariant_for_i = is_invariant(ring, make_semilinear(F, A, i), f);
    for (unsigned ip = 1; ip <= n && !out.verdict_i; ++ip)
        if (std::gcd(ip, n) == 1 && is_invariant(ring, make_semilinear(F, A, ip), f)) out.verdict_i = true;
    out.verdict_ii = out.verdict_i && out.t == out.d0;

    const PolyRing base(F, Level::Base);
    if (out.G.degree() == static_cast<int>(out.d * out.s) && base.in_level(out.G, Level::Base) &&
        base.is_irreducible(out.G)) {
        const auto img = try_mat_act_poly(base, A, out.G);
        out.verdict_iii = img && *img == out.G;
    }
    return out;
}

InvolutionRatio involution_ratio_check(u64 q, const Mat2& B, unsigned m, const Caps& caps) {
    const auto [p, e] = require_prime_power(q);
    if (m % 2 == 0) fail(ErrorKind::EvenDegree, "involution_ratio_check needs odd m");
    if (m < 3) fail(ErrorKind::DegreeTooSmall, "involution_ratio_check needs m >= 3");
    const FieldTower top = FieldTower::build(p, e, 2);
    const FieldTower base = FieldTower::build(p, e, 1);
    if (!in_level(top, B, Level::Base)) fail(ErrorKind::LevelMismatch, "B must have entries in F_q");
    if (proj_order(base, B) != 2) fail(ErrorKind::NotInvolution, "B must have projective order 2");
    const PolyRing top_ring(top);
    const PolyRing base_ring(base);
    InvolutionRatio out;
    out.count_top = census_degree(top_ring, make_semilinear(top, B, 1), m, caps).size();
    out.count_base = census_degree(base_ring, make_semilinear(base, B, 1), 2 * m, caps).size();
    if (out.count_top != 2 * out.count_base)
        fail(ErrorKind::InvariantCheckFailed, "count_top = " + std::to_string(out.count_top) +
                                                  " but count_base = " + std::to_string(out.count_base));
    return out;
}

std::vector<AsymptoticRow> asymptotic_report(const PolyRing& ring, const Mat2& A, const std::vector<u64>& s_values,
                                             const Caps& caps) {
    const FieldTower& F = ring.tower();
    const u64 D = proj_order(F, a_star(F, A, F.n()));
    const double phi = static_cast<double>(euler_phi(D));
    std::vector<AsymptoticRow> rows;
    for (u64 s : s_values) {
        if (std::gcd(s, static_cast<u64>(F.n())) != 1)
            fail(ErrorKind::DegreeHypothesisViolated, "s = " + std::to_string(s) + " is not coprime to n");
        const u64 k = D * s;
        if (k <= 2) continue;
        AsymptoticRow row;
        row.s = s;
        row.degree = k;
        row.exact = enumerate_invariants(ring, A, static_cast<unsigned>(k), caps).entries.front().polys.size();
        row.predicted = phi * std::pow(static_cast<double>(F.q()), static_cast<double>(s)) / static_cast<double>(k);
        row.ratio = static_cast<double>(row.exact) / row.predicted;
        rows.push_back(row);
    }
    return rows;
}

std::string report_json(const PolyRing& ring, const CensusReport& report, bool timing) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    auto& params = j["params"];
    params["p"] = report.p;
    params["e"] = report.e;
    params["n"] = report.n;
    params["matrix"] = report.matrix;
    params["frob"] = report.frob;
    if (report.D) params["D"] = *report.D;
    j["method"] = report.method;
    auto entries = nlohmann::ordered_json::array();
    for (const auto& e : report.entries) {
        nlohmann::ordered_json row;
        row["degree"] = e.degree;
        row["count"] = e.polys.size();
        auto polys = nlohmann::ordered_json::array();
        for (const auto& f : e.polys) polys.push_back(ring.format(f));
        row["polys"] = std::move(polys);
        if (timing) row["millis"] = e.millis;
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j.dump(2);
}

std::string report_text(const PolyRing& ring, const CensusReport& report, bool timing) {
    std::ostringstream out;
    out << "method " << report.method << "  p=" << report.p << " e=" << report.e << " n=" << report.n
        << "  matrix " << report.matrix << "  frob " << report.frob;
    if (report.D) out << "  D=" << *report.D;
    out << '\n';
    for (const auto& e : report.entries) {
        out << "degree " << std::setw(3) << e.degree << "  count " << std::setw(6) << e.polys.size();
        if (timing) out << "  " << std::fixed << std::setprecision(3) << e.millis << " ms";
        out << '\n';
        for (const auto& f : e.polys) out << "  " << ring.format(f) << '\n';
    }
    return out.str();
}

}  // namespace gm
