// Acceptance run: one PASS/FAIL line per criterion. Exits nonzero only when a
// criterion fails in a way that is not the documented separability defect.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "galois_moebius/verify.hpp"

using namespace gm;
using Clock = std::chrono::steady_clock;

namespace {

constexpr u64 kSeed = 20240601;

struct Outcome {
    bool passed = false;
    bool expected_failure = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;  // 0 means unbounded
    std::function<Outcome()> run;
};

std::string summary(const verify::CheckResult& r) {
    return std::to_string(r.cases) + " cases, " + std::to_string(r.failures) + " failures";
}

Outcome from_check(const verify::CheckResult& r) { return {r.passed(), false, summary(r)}; }

Outcome from_checks(const std::vector<verify::CheckResult>& rs) {
    Outcome o{true, false, ""};
    for (const auto& r : rs) {
        o.passed = o.passed && r.passed();
        if (!o.detail.empty()) o.detail += "; ";
        o.detail += r.name + ": " + summary(r);
    }
    return o;
}

void set_threads(const char* value) {
    if (value)
        setenv("GALOIS_MOEBIUS_THREADS", value, 1);
    else
        unsetenv("GALOIS_MOEBIUS_THREADS");
}

std::string full_run_json() {
    std::vector<verify::SuiteResult> suites;
    for (const auto& name : verify::suite_names()) suites.push_back(verify::run_suite(name, kSeed));
    return verify::results_json(suites, kSeed);
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "action axioms over F_4 and F_9, 1000 triples", 30, [] { return from_check(verify::action_axioms(kSeed, 1000)); }},
        {2, "root condition and target factors, every class over F_4, degrees 3..5", 300,
         [] { return from_check(verify::root_condition_equivalence()); }},
        {3, "enumeration equals census (q=2 n=2 all classes, q=3 n=2 sample of 50)", 0,
         [] { return from_check(verify::enumeration_vs_census(kSeed, 50)); }},
        {4, "SCRIM counts agree with each other and with brute force", 0, [] { return from_check(verify::scrim_counts()); }},
        {5, "SRIM relation a(n) = 2 b(n) by double brute force", 0, [] { return from_check(verify::srim_relation()); }},
        {6, "involution ratio count_top = 2 count_base", 0, [] { return from_check(verify::involution_ratio()); }},
        {7, "degree-shape law by exhaustive census", 0, [] { return from_check(verify::degree_law()); }},
        {8, "separability of F_{A,m,i} for 500 samples, m <= 4, i <= m", 0,
         [] {
             const auto literal = verify::separability_all(kSeed, 500);
             const auto refined = verify::separability_refined(kSeed, 500);
             Outcome o = from_check(literal);
             o.detail += " (" + literal.notes.back() + ")";
             // Every sample with m > i is predicted separable by the refined check, so
             // refined passing means all literal failures sit at m = i.
             if (!o.passed && refined.passed()) {
                 o.expected_failure = true;
                 o.detail += "; all failures at m = i, refined statement: " + summary(refined);
             }
             return o;
         }},
        {9, "asymptotic trend for the antidiagonal, s = 3, 5, 7, 9", 60,
         [] {
             const auto r = verify::asymptotic_trend();
             Outcome o = from_check(r);
             for (const auto& note : r.notes)
                 if (note.rfind("s=", 0) == 0) o.detail += "; " + note;
             return o;
         }},
        {10, "reduction to [C, s_t] over F_16, 10 matrices", 300,
         [] { return from_check(verify::reduction_lemma(kSeed, 10)); }},
        {11, "full verify suite is byte-identical across runs and thread counts", 0,
         [] {
             const char* prior = std::getenv("GALOIS_MOEBIUS_THREADS");
             const std::string saved = prior ? prior : "";
             const std::string a = full_run_json();
             const std::string b = full_run_json();
             set_threads("1");
             const std::string c = full_run_json();
             set_threads("3");
             const std::string d = full_run_json();
             set_threads(prior ? saved.c_str() : nullptr);
             const bool same = a == b && a == c && a == d;
             return Outcome{same, false, std::to_string(a.size()) + " bytes, 4 runs" + (same ? "" : ", outputs differ")};
         }},
    };

    int unexpected = 0;
    int expected = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, false, std::string("threw ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.budget_seconds > 0 && secs > c.budget_seconds) {
            o.passed = false;
            o.expected_failure = false;
            o.detail += "; over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
        }
        std::string tag = o.passed ? "PASS" : "FAIL";
        if (!o.passed && o.expected_failure) tag += " (expected, documented)";
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << "criterion " << c.id << ": " << tag << " - " << c.title << " [" << o.detail << "] " << timing
                  << "\n";
        if (!o.passed) (o.expected_failure ? expected : unexpected) += 1;
    }
    std::cout << "summary: " << (criteria.size() - expected - unexpected) << " passed, " << expected
              << " expected failure, " << unexpected << " unexpected failures\n";
    return unexpected == 0 ? 0 : 1;
}
