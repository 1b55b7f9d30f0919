#include <arithid/bench.hpp>
#include <arithid/evaluators.hpp>
#include <arithid/reference.hpp>
#include <arithid/registry.hpp>
#include <arithid/report.hpp>
#include <arithid/verifier.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace arithid;

namespace {

py::object from_json(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::object to_python(const EvalValue& v) {
    if (const auto* x = std::get_if<Int>(&v)) {
        return py::int_(*x);
    }
    if (const auto* r = std::get_if<ExactRational>(&v)) {
        return py::module_::import("fractions").attr("Fraction")(r->numerator(), r->denominator());
    }
    return py::cast(std::get<ApproxInteger>(v));
}

py::tuple sides(const Sides& s) { return py::make_tuple(to_python(s.lhs), to_python(s.rhs)); }

RangeConfig make_config(std::optional<Int> max_n, Int max_pair, Int k_multiplier,
                        unsigned workers, bool fail_fast) {
    RangeConfig c;
    c.max_n = max_n;
    c.max_pair = max_pair;
    c.k_multiplier = k_multiplier;
    c.workers = workers;
    c.fail_fast = fail_fast;
    return c;
}

}  // namespace

PYBIND11_MODULE(_arithid, m) {
    m.doc() = "Exact and compensated evaluation of arithmetic-function identities";

    auto arith_error = py::register_exception<ArithError>(m, "ArithError", PyExc_ArithmeticError);
    py::register_exception<DegenerateDomain>(m, "DegenerateDomain", arith_error);
    py::register_exception<DomainError>(m, "DomainError", arith_error);
    py::register_exception<OverflowError>(m, "OverflowError", arith_error);
    py::register_exception<InexactDivision>(m, "InexactDivision", arith_error);
    py::register_exception<ResidualGuard>(m, "ResidualGuard", arith_error);
    py::register_exception<UnknownIdentity>(m, "UnknownIdentity", PyExc_KeyError);
    py::register_exception<UnknownTarget>(m, "UnknownTarget", PyExc_KeyError);

    py::class_<ApproxInteger>(m, "ApproxInteger")
        .def_readonly("raw", &ApproxInteger::raw)
        .def_readonly("nearest", &ApproxInteger::nearest)
        .def_readonly("residual", &ApproxInteger::residual)
        .def("__int__", [](const ApproxInteger& a) { return a.nearest; })
        .def("__repr__", [](const ApproxInteger& a) {
            return "ApproxInteger(raw=" + std::to_string(a.raw) +
                   ", nearest=" + std::to_string(a.nearest) + ")";
        });

    m.def("gcd", [](Int a, Int b) { return gcd(a, b); });
    m.def("factorize", [](Int n) {
        std::vector<std::pair<Int, Int>> out;
        const FactoredInteger f = factorize(n);
        for (const auto& [p, e] : f.factors()) out.emplace_back(p, e);
        return out;
    }, "Prime factorization as [(p, e), ...] in ascending p");
    m.def("divisors", [](Int n) { return divisors(factorize(n)); });

    m.def("phi", &phi_definition);
    m.def("tau", &tau_definition);
    m.def("mu", [](Int n) { return mu(factorize(n)); });
    m.def("pillai", &pillai_definition);
    m.def("jordan", [](int k, Int n) { return jordan(k, factorize(n)); });
    m.def("mertens", &mertens);

    m.def("gcd_via_floor", &gcd_via_floor, py::arg("k"), py::arg("n"));
    m.def("phi_formula", [](Int n, const std::string& method) {
        return to_python(phi_formula(n, parse_phi_method(method)));
    }, py::arg("n"), py::arg("method"), "method: res1 | fourier | res2 | res3");
    m.def("tau_formula", [](Int n, const std::string& form) {
        return to_python(tau_formula(n, parse_tau_form(form)));
    }, py::arg("n"), py::arg("form"), "form: toto | res1_form | res2_form | res3_form");
    m.def("pillai_formula", [](Int n, const std::string& form) {
        return to_python(pillai_formula(n, parse_pillai_form(form)));
    }, py::arg("n"), py::arg("form"),
          "form: divisor_phi | divisor_tau_mu | padic_product | phi_over_d");
    m.def("menon_sum", &menon_rhs, "Sum of gcd(k - 1, n) over k coprime to n");
    m.def("mobius_sum", [](Int n, const std::string& which) {
        return to_python(mobius_identity_lhs(n, parse_mobius_sum(which)));
    }, py::arg("n"), py::arg("which"), "which: floor_sum | kline | expsum");
    m.def("lemma", [](Int n, const std::string& name, Int param) {
        return sides(lemma_sides(n, parse_lemma(name), param));
    }, py::arg("n"), py::arg("name"), py::arg("param") = 0);

    m.def("list_identities", [] { return from_json(to_json(list_identities())); });
    m.def("verify", [](std::vector<std::string> ids, std::optional<Int> max_n, Int max_pair,
                       Int k_multiplier, unsigned workers, bool fail_fast) {
        const auto config = make_config(max_n, max_pair, k_multiplier, workers, fail_fast);
        RunReport report;
        {
            py::gil_scoped_release release;
            report = verify_all(config, ids);
        }
        return from_json(to_json(report));
    }, py::arg("ids") = std::vector<std::string>{}, py::arg("max_n") = std::nullopt,
          py::arg("max_pair") = RangeConfig{}.max_pair,
          py::arg("k_multiplier") = RangeConfig{}.k_multiplier, py::arg("workers") = 1u,
          py::arg("fail_fast") = false,
          "Run the verifier and return the JSON report as a dict");

    m.def("bench", [](std::vector<std::string> targets, std::vector<Int> ns, int reps) {
        std::vector<BenchRecord> records;
        {
            py::gil_scoped_release release;
            records = bench(targets, ns, reps);
        }
        py::list out;
        for (const auto& r : records) {
            py::dict d;
            d["target"] = r.target;
            d["n"] = r.n;
            d["reps"] = r.reps;
            d["min_ns"] = r.min_ns;
            d["median_ns"] = r.median_ns;
            d["checksum"] = r.checksum;
            out.append(d);
        }
        return out;
    }, py::arg("targets"), py::arg("ns"), py::arg("reps") = 5);
}
