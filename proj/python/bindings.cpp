#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "galois_moebius/errors.hpp"
#include "galois_moebius/invariants.hpp"
#include "galois_moebius/verify.hpp"

namespace py = pybind11;
using namespace gm;

namespace {

// A tower together with its top-level polynomial ring; polynomials and
// matrices cross the boundary in the CLI text grammar.
class Field {
public:
    Field(u64 p, unsigned e, unsigned n) : ring_(FieldTower::build(p, e, n)) {}

    const FieldTower& tower() const { return ring_.tower(); }

    std::string act(const std::string& matrix, const std::string& poly, std::optional<std::int64_t> frob) const {
        const Semilinear g = make_semilinear(tower(), parse_matrix(tower(), matrix), frob.value_or(tower().n()));
        return ring_.format(semilinear_act(ring_, g, ring_.parse(poly)));
    }

    bool invariant(const std::string& matrix, const std::string& poly, std::int64_t frob) const {
        return is_invariant(ring_, make_semilinear(tower(), parse_matrix(tower(), matrix), frob), ring_.parse(poly));
    }

    CensusReport report(const std::string& matrix, unsigned degree, const std::string& method, std::int64_t frob,
                        u64 seed) const {
        const Mat2 A = parse_matrix(tower(), matrix);
        if (method == "census") return census(ring_, make_semilinear(tower(), A, frob), degree, {}, degree);
        if (method != "fast") throw py::value_error("method must be 'fast' or 'census'");
        if (make_semilinear(tower(), A, frob).frob != 1)
            fail(ErrorKind::DegreeHypothesisViolated, "the fast method covers [A, s_1] only");
        return enumerate_invariants(ring_, A, degree, {}, seed);
    }

    std::vector<std::string> invariants(const std::string& matrix, unsigned degree, const std::string& method,
                                        std::int64_t frob, u64 seed) const {
        std::vector<std::string> out;
        const CensusReport rep = report(matrix, degree, method, frob, seed);
        for (const Poly& f : rep.entries.front().polys)
            out.push_back(ring_.format(f));
        return out;
    }

    std::string invariants_json(const std::string& matrix, unsigned degree, const std::string& method,
                                std::int64_t frob, u64 seed) const {
        return report_json(ring_, report(matrix, degree, method, frob, seed));
    }

    std::vector<std::pair<std::string, unsigned>> factor(const std::string& poly, u64 seed) const {
        std::vector<std::pair<std::string, unsigned>> out;
        for (const auto& fac : ring_.factor(ring_.parse(poly), seed)) out.emplace_back(ring_.format(fac.poly), fac.multiplicity);
        return out;
    }

    const PolyRing& ring() const { return ring_; }

private:
    PolyRing ring_;
};

}  // namespace

PYBIND11_MODULE(galois_moebius, m) {
    m.doc() = "Moebius-Frobenius invariants of irreducible polynomials over finite fields";

    py::exception<Error>(m, "GaloisError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            // The kind is also exposed as an attribute for dispatch.
            py::object type = py::module_::import("galois_moebius").attr("GaloisError");
            py::object exc = type(e.what());
            exc.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(type.ptr(), exc.ptr());
        }
    });

    py::class_<Field>(m, "Field")
        .def(py::init<u64, unsigned, unsigned>(), py::arg("p"), py::arg("e") = 1, py::arg("n") = 1)
        .def_property_readonly("p", [](const Field& f) { return f.tower().p(); })
        .def_property_readonly("e", [](const Field& f) { return f.tower().e(); })
        .def_property_readonly("n", [](const Field& f) { return f.tower().n(); })
        .def_property_readonly("q", [](const Field& f) { return f.tower().q(); })
        .def_property_readonly("order", [](const Field& f) { return f.tower().order(); })
        .def("act", &Field::act, py::arg("matrix"), py::arg("poly"), py::arg("frob") = py::none(),
             "Apply [A, s_frob]; frob defaults to n, the plain Moebius action.")
        .def("is_invariant", &Field::invariant, py::arg("matrix"), py::arg("poly"), py::arg("frob") = 1)
        .def("invariants", &Field::invariants, py::arg("matrix"), py::arg("degree"), py::arg("method") = "fast",
             py::arg("frob") = 1, py::arg("seed") = 0)
        .def("invariants_json", &Field::invariants_json, py::arg("matrix"), py::arg("degree"),
             py::arg("method") = "fast", py::arg("frob") = 1, py::arg("seed") = 0)
        .def("proj_order",
             [](const Field& f, const std::string& matrix) { return proj_order(f.tower(), parse_matrix(f.tower(), matrix)); })
        .def(
            "semilinear_order",
            [](const Field& f, const std::string& matrix, std::int64_t frob) {
                return semilinear_order(f.tower(), make_semilinear(f.tower(), parse_matrix(f.tower(), matrix), frob));
            },
            py::arg("matrix"), py::arg("frob"))
        .def("is_irreducible", [](const Field& f, const std::string& poly) {
            return f.ring().is_irreducible(f.ring().parse(poly));
        })
        .def("factor", &Field::factor, py::arg("poly"), py::arg("seed") = 0);

    m.def("scrim_count", &scrim_count, py::arg("q"), py::arg("n"));
    m.def("bju_scrim_count", &bju_scrim_count, py::arg("q"), py::arg("n"));
    m.def("srim_count", &srim_count, py::arg("q"), py::arg("n"));
    m.def(
        "verify",
        [](std::optional<std::vector<std::string>> suites, u64 seed) {
            std::vector<verify::SuiteResult> results;
            {
                py::gil_scoped_release release;
                for (const auto& name : suites.value_or(verify::suite_names())) results.push_back(verify::run_suite(name, seed));
            }
            return verify::results_json(results, seed);
        },
        py::arg("suites") = py::none(), py::arg("seed") = 0, "Run property suites and return the JSON report.");
}
