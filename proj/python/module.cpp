#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gtam/bijections.hpp"
#include "gtam/counting.hpp"
#include "gtam/dispatch.hpp"
#include "gtam/errors.hpp"
#include "gtam/verify.hpp"
#include "gtam/walks.hpp"

namespace py = pybind11;
using namespace gtam;

namespace {

py::int_ int_of(const std::string& digits) {
    PyObject* n = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (!n) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(n);
}

py::int_ to_python(const BigInt& n) { return int_of(n.str()); }

py::tuple to_python(const WalkTriple& r) {
    return py::make_tuple(r.lower.word(), r.middle.word(), r.upper.word());
}

WalkTriple triple_of(const std::string& lower, const std::string& middle, const std::string& upper) {
    return {Walk(lower), Walk(middle), Walk(upper)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Generalized Tamari intervals and their bijections";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_ValueError);
    py::register_exception<InvariantFailure>(m, "InvariantFailure", PyExc_RuntimeError);

    m.def("count_nonseparable", [](int n) { return to_python(count_nonseparable(n)); }, py::arg("n"));
    m.def("count_nonseparable_refined", [](int i, int j) { return to_python(count_nonseparable_refined(i, j)); },
          py::arg("i"), py::arg("j"));
    m.def("count_mtamari", [](int m_, int n) { return to_python(count_mtamari(m_, n)); }, py::arg("m"), py::arg("n"));

    m.def("tamari_leq", [](const std::string& nu, const std::string& a, const std::string& b) {
        return tamari_leq(Walk(nu), Walk(a), Walk(b));
    });
    m.def("tamari_violation", [](const std::string& nu, const std::string& a, const std::string& b) {
        return tamari_violation(Walk(nu), Walk(a), Walk(b));
    }, "First 1-based index where the bracket vector of a exceeds that of b, or None.");
    m.def("bracket_vector", [](const std::string& nu, const std::string& g) { return bracket_vector(Walk(nu), Walk(g)); });
    m.def("enumerate_G", [](int i, int j, int cap) {
        py::list out;
        for (const auto& r : enumerate_G(i, j, cap)) out.append(to_python(r));
        return out;
    }, py::arg("i"), py::arg("j"), py::arg("cap") = kDefaultWalkCap);
    m.def("enumerate_R", [](int i, int j, int cap) {
        py::list out;
        for (const auto& r : enumerate_R(i, j, cap)) out.append(to_python(r));
        return out;
    }, py::arg("i"), py::arg("j"), py::arg("cap") = kDefaultWalkCap);
    m.def("tau_triple", [](const std::string& l, const std::string& mid, const std::string& u) {
        return to_python(tau_triple(triple_of(l, mid, u)));
    });

    m.def("family_names", &family_names);
    m.def("enumerate", &enumerate_family, py::arg("family"), py::arg("params"), py::arg("max") = -1,
          "Serialized objects of a family.");
    m.def("count", [](const std::string& family, const std::vector<int>& params, int max) {
        return int_of(count_family(family, params, max));
    }, py::arg("family"), py::arg("params"), py::arg("max") = -1);
    m.def("bijection_names", &bijection_names);
    m.def("apply", &apply_bijection, py::arg("bijection"), py::arg("text"),
          "Apply a named bijection to a serialized object.");
    m.def("render", &render, py::arg("text"), py::arg("format") = "text");

    m.def("F_series", [](int degree) {
        py::dict out;
        for (const auto& [e, c] : F_series(degree).terms()) out[py::make_tuple(e[0], e[1], e[2])] = to_python(c);
        return out;
    }, py::arg("degree"), "Coefficients of F(x,y,z) up to total degree, keyed by exponent.");

    m.def("suite_names", &suite_names);
    m.def("run_suite", [](const std::string& suite, int max) {
        const auto r = run_suite(suite, max < 0 ? default_suite_size(suite) : max);
        py::dict out;
        out["suite"] = r.suite;
        out["instances"] = r.instances;
        out["ok"] = r.ok;
        out["counterexample"] = r.counterexample;
        out["seconds"] = r.seconds;
        return out;
    }, py::arg("suite"), py::arg("max") = -1);
}
