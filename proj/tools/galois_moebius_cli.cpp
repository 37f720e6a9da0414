// galois-moebius: command-line front end.
//
// Exit status: 0 ok, 2 parse/usage, 3 math domain, 4 cap exceeded,
// 5 verification mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "galois_moebius/errors.hpp"
#include "galois_moebius/invariants.hpp"
#include "galois_moebius/verify.hpp"

using namespace gm;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitCap = 4;
constexpr int kExitMismatch = 5;

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::LevelMismatch:
            return kExitParse;
        case ErrorKind::DegreeTooLarge:
        case ErrorKind::BudgetExceeded:
        case ErrorKind::FieldTooLarge:
        case ErrorKind::Overflow:
            return kExitCap;
        case ErrorKind::InvariantCheckFailed:
        case ErrorKind::InvariantViolation:
            return kExitMismatch;
        default:
            return kExitDomain;
    }
}

struct Common {
    u64 p = 2;
    unsigned e = 1;
    unsigned n = 1;
    std::string output = "text";
    u64 seed = 0;
    u64 cap_enum = kDefaultDegreeCap;
    u64 cap_census = u64{1} << 24;
    bool timing = false;

    bool json() const { return output == "json"; }
    Caps caps() const { return {cap_enum, cap_census}; }
    FieldTower tower() const { return FieldTower::build(p, e, n); }
};

void add_tower_flags(CLI::App* app, Common& c) {
    app->add_option("--p", c.p, "characteristic")->required();
    app->add_option("--e", c.e, "degree of F_q over F_p")->capture_default_str();
    app->add_option("--n", c.n, "degree of the top field over F_q")->capture_default_str();
}

void add_output_flags(CLI::App* app, Common& c) {
    app->add_option("--output", c.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

void add_cap_flags(CLI::App* app, Common& c) {
    app->add_option("--cap-enum", c.cap_enum, "largest target degree built for enumeration")->capture_default_str();
    app->add_option("--cap-census", c.cap_census, "largest candidate space scanned by a census")
        ->capture_default_str();
    app->add_option("--seed", c.seed, "seed for randomized factorization")->capture_default_str();
    app->add_flag("--timing", c.timing, "include elapsed milliseconds (output is then not reproducible)");
}

json params_json(const Common& c) {
    json j;
    j["p"] = c.p;
    j["e"] = c.e;
    j["n"] = c.n;
    return j;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_tower(const Common& c) {
    const FieldTower F = c.tower();
    std::vector<std::string> g, h;
    for (auto d : F.g()) g.push_back(std::to_string(d));
    for (auto a : F.h()) h.push_back(F.format(a));
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
        return s;
    };
    if (c.json()) {
        json j;
        j["schema"] = 1;
        j["params"] = params_json(c);
        j["q"] = F.q();
        j["order"] = F.order();
        j["g"] = join(g);
        j["h"] = join(h);
        j["primitive"] = F.format(F.primitive());
        print_json(j);
    } else {
        std::cout << "F_" << F.p() << " < F_" << F.q() << " < F_" << F.order() << '\n'
                  << "g " << join(g) << '\n'
                  << "h " << join(h) << '\n'
                  << "primitive " << F.format(F.primitive()) << '\n';
    }
    return 0;
}

int cmd_act(const Common& c, const std::string& matrix, std::optional<std::int64_t> frob, const std::string& poly) {
    const FieldTower F = c.tower();
    const PolyRing ring(F);
    const Mat2 A = parse_matrix(F, matrix);
    const Poly f = ring.parse(poly);
    const Semilinear g = make_semilinear(F, A, frob.value_or(F.n()));
    const Poly out = semilinear_act(ring, g, f);
    if (c.json()) {
        json j;
        j["schema"] = 1;
        j["params"] = params_json(c);
        j["matrix"] = format_matrix(F, A);
        j["frob"] = g.frob;
        j["input"] = ring.format(f);
        j["result"] = ring.format(out);
        print_json(j);
    } else {
        std::cout << ring.format(out) << '\n';
    }
    return 0;
}

int cmd_invariants(const Common& c, const std::string& matrix, std::optional<std::int64_t> frob, unsigned degree,
                   const std::string& method) {
    const FieldTower F = c.tower();
    const PolyRing ring(F);
    const Mat2 A = parse_matrix(F, matrix);
    const Semilinear g = make_semilinear(F, A, frob.value_or(1));
    if (method != "census" && g.frob != 1)
        fail(ErrorKind::DegreeHypothesisViolated, "the fast method covers [A, s_1] only");
    std::vector<CensusReport> reports;
    if (method == "fast" || method == "both") reports.push_back(enumerate_invariants(ring, A, degree, c.caps(), c.seed));
    if (method == "census" || method == "both") reports.push_back(census(ring, g, degree, c.caps(), degree));
    bool agree = true;
    if (reports.size() == 2) agree = reports[0].entries.front().polys == reports[1].entries.front().polys;
    if (c.json()) {
        if (reports.size() == 1) {
            std::cout << report_json(ring, reports[0], c.timing) << '\n';
        } else {
            json j;
            j["schema"] = 1;
            j["agree"] = agree;
            j["reports"] = json::array();
            for (const auto& r : reports) j["reports"].push_back(json::parse(report_json(ring, r, c.timing)));
            print_json(j);
        }
    } else {
        for (const auto& r : reports) std::cout << report_text(ring, r, c.timing);
        if (reports.size() == 2) std::cout << (agree ? "methods agree\n" : "methods DISAGREE\n");
    }
    return agree ? 0 : kExitMismatch;
}

int cmd_scrim(const Common& c, u64 q, unsigned degree, const std::string& mode) {
    if (mode == "count") {
        const u64 a = scrim_count(q, degree);
        const u64 b = bju_scrim_count(q, degree);
        if (c.json()) {
            json j;
            j["schema"] = 1;
            j["q"] = q;
            j["degree"] = degree;
            j["scrim_count"] = a;
            j["bju_scrim_count"] = b;
            j["agree"] = a == b;
            print_json(j);
        } else if (a == b) {
            std::cout << a << '\n';
        } else {
            std::cout << "scrim_count " << a << " bju_scrim_count " << b << " DISAGREE\n";
        }
        return a == b ? 0 : kExitMismatch;
    }
    if (mode == "list") {
        const u64 expected = scrim_count(q, degree);
        const auto pe = prime_power_decompose(q);
        const FieldTower F = FieldTower::build(pe->first, pe->second, 2);
        const PolyRing ring(F);
        const CensusReport rep = enumerate_invariants(ring, parse_matrix(F, "0;1;1;0"), degree, c.caps(), c.seed);
        const auto& polys = rep.entries.front().polys;
        if (c.json()) {
            json j;
            j["schema"] = 1;
            j["q"] = q;
            j["degree"] = degree;
            j["count"] = polys.size();
            j["polys"] = json::array();
            for (const auto& f : polys) j["polys"].push_back(ring.format(f));
            print_json(j);
        } else {
            for (const auto& f : polys) std::cout << ring.format(f) << '\n';
        }
        return polys.size() == expected ? 0 : kExitMismatch;
    }
    const ScrimConstruction sc = construct_scrim(q, degree, c.seed);
    if (c.json()) {
        json j;
        j["schema"] = 1;
        j["q"] = q;
        j["degree"] = degree;
        j["srim"] = sc.ring.format(sc.srim);
        j["factors"] = {sc.ring.format(sc.first), sc.ring.format(sc.second)};
        print_json(j);
    } else {
        std::cout << "srim " << sc.ring.format(sc.srim) << '\n'
                  << "scrim " << sc.ring.format(sc.first) << '\n'
                  << "scrim " << sc.ring.format(sc.second) << '\n';
    }
    return 0;
}

int cmd_verify(const Common& c, std::vector<std::string> suites) {
    if (suites.empty()) suites = verify::suite_names();
    std::vector<verify::SuiteResult> results;
    for (const auto& s : suites) results.push_back(verify::run_suite(s, c.seed));
    std::cout << (c.json() ? verify::results_json(results, c.seed) + "\n" : verify::results_text(results, c.seed));
    const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
    return ok ? 0 : kExitMismatch;
}

std::vector<u64> parse_list(const std::string& text) {
    std::vector<u64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoull(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            fail(ErrorKind::Parse, "bad integer list '" + text + "'");
        }
    }
    return out;
}

int cmd_asymptotic(const Common& c, const std::string& matrix, const std::string& s_list) {
    const FieldTower F = c.tower();
    const PolyRing ring(F);
    const Mat2 A = parse_matrix(F, matrix);
    const auto rows = asymptotic_report(ring, A, parse_list(s_list), c.caps());
    if (c.json()) {
        json j;
        j["schema"] = 1;
        j["params"] = params_json(c);
        j["matrix"] = format_matrix(F, A);
        j["rows"] = json::array();
        for (const auto& r : rows) {
            json row;
            row["s"] = r.s;
            row["degree"] = r.degree;
            row["exact"] = r.exact;
            row["predicted"] = r.predicted;
            row["ratio"] = r.ratio;
            j["rows"].push_back(row);
        }
        print_json(j);
    } else {
        std::cout << std::setw(4) << "s" << std::setw(8) << "degree" << std::setw(10) << "exact" << std::setw(14)
                  << "predicted" << std::setw(12) << "ratio" << '\n';
        for (const auto& r : rows)
            std::cout << std::setw(4) << r.s << std::setw(8) << r.degree << std::setw(10) << r.exact << std::setw(14)
                      << std::fixed << std::setprecision(4) << r.predicted << std::setw(12) << std::setprecision(6)
                      << r.ratio << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moebius-Frobenius invariants of irreducible polynomials over finite fields"};
    app.require_subcommand(1);
    Common c;
    std::string matrix, poly, method = "fast", mode = "count", s_list = "3,5,7,9";
    std::optional<std::int64_t> frob;
    unsigned degree = 0;
    u64 q = 2;
    std::vector<std::string> suites;

    auto* tower = app.add_subcommand("tower", "build a field tower and print its moduli");
    add_tower_flags(tower, c);
    add_output_flags(tower, c);

    auto* act = app.add_subcommand("act", "apply [A, s_i] to a polynomial");
    add_tower_flags(act, c);
    add_output_flags(act, c);
    act->add_option("--matrix", matrix, "a;b;c;d")->required();
    act->add_option("--frob", frob, "Frobenius index (default n, the pure Moebius action)");
    act->add_option("--poly", poly, "c0,c1,...,ck")->required();

    auto* inv = app.add_subcommand("invariants", "invariant irreducibles of one degree");
    add_tower_flags(inv, c);
    add_output_flags(inv, c);
    add_cap_flags(inv, c);
    inv->add_option("--matrix", matrix, "a;b;c;d")->required();
    inv->add_option("--frob", frob, "Frobenius index for the census (default 1)");
    inv->add_option("--degree", degree, "polynomial degree")->required();
    inv->add_option("--method", method, "fast, census or both")
        ->check(CLI::IsMember({"fast", "census", "both"}))
        ->capture_default_str();

    auto* scrim = app.add_subcommand("scrim", "self-conjugate-reciprocal irreducibles");
    add_output_flags(scrim, c);
    add_cap_flags(scrim, c);
    scrim->add_option("--q", q, "size of the base field")->required();
    scrim->add_option("--degree", degree, "degree over F_{q^2}")->required();
    scrim->add_option("--mode", mode, "count, list or construct")
        ->check(CLI::IsMember({"count", "list", "construct"}))
        ->capture_default_str();

    auto* ver = app.add_subcommand("verify", "run property suites");
    add_output_flags(ver, c);
    ver->add_option("--suite", suites, "axioms, equivalence, census or formulas (repeatable; default all)")
        ->check(CLI::IsMember(verify::suite_names()));
    ver->add_option("--seed", c.seed, "seed for sampled checks")->capture_default_str();

    auto* asym = app.add_subcommand("asymptotic", "exact counts against phi(D) q^s / (D s)");
    add_tower_flags(asym, c);
    add_output_flags(asym, c);
    add_cap_flags(asym, c);
    asym->add_option("--matrix", matrix, "a;b;c;d")->required();
    asym->add_option("--s", s_list, "comma-separated values of s")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    try {
        if (*tower) return cmd_tower(c);
        if (*act) return cmd_act(c, matrix, frob, poly);
        if (*inv) return cmd_invariants(c, matrix, frob, degree, method);
        if (*scrim) return cmd_scrim(c, q, degree, mode);
        if (*ver) return cmd_verify(c, suites);
        if (*asym) return cmd_asymptotic(c, matrix, s_list);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    }
    return 0;
}
