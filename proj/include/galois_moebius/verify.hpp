#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "galois_moebius/invariants.hpp"

namespace gm::verify {

struct CheckResult {
    std::string name;
    std::string description;
    u64 cases = 0;
    u64 failures = 0;
    std::vector<std::string> notes;  // first failures and summary figures; deterministic

    bool passed() const { return cases > 0 && failures == 0; }
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// axioms, equivalence, census, formulas
const std::vector<std::string>& suite_names();
SuiteResult run_suite(std::string_view name, u64 seed);

std::string results_json(const std::vector<SuiteResult>& suites, u64 seed);
std::string results_text(const std::vector<SuiteResult>& suites, u64 seed);

// Individual checks. Sampled checks draw from a generator seeded by `seed`.
CheckResult field_axioms(u64 seed, unsigned samples = 200);
CheckResult poly_properties(u64 seed, unsigned samples = 60);
/// Identity, compatibility, degree and irreducibility preservation,
/// multiplicativity and projective well-definedness over F_4 and F_9.
CheckResult action_axioms(u64 seed, unsigned samples = 1000);
CheckResult group_axioms(u64 seed, unsigned samples = 200);
CheckResult proj_order_oracle(u64 seed, unsigned samples = 60);

/// q = 2, n = 2, every class, degrees 3..5: census invariants satisfy the
/// root condition and every harvested target factor is invariant.
CheckResult root_condition_equivalence();
CheckResult enumeration_vs_census(u64 seed, unsigned sample = 50);
/// Each invariant of degree Ds divides the target of exactly one r.
CheckResult r_partition();
CheckResult reduction_lemma(u64 seed, unsigned sample = 10);

CheckResult degree_law();
CheckResult identity_census();
CheckResult involution_ratio();
CheckResult asymptotic_trend();

CheckResult scrim_counts();
CheckResult srim_relation();
/// gcd(F_{A,m,i}, F') = 1 over every sampled (A, m <= 4, i <= m), as stated.
CheckResult separability_all(u64 seed, unsigned samples = 500);
/// Separable when m > i; at m = i separable exactly when the fixed-point
/// quadratic b x^2 + (d - a) x - c of s_{-i}(A_i^*) has no repeated root.
CheckResult separability_refined(u64 seed, unsigned samples = 500);
CheckResult r_value_counts();
CheckResult even_scrim_scan();
CheckResult scrim_construction();
CheckResult lift_consistency();

}  // namespace gm::verify
