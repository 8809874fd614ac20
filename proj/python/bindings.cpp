#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bierflag/cli.hpp"
#include "bierflag/complex.hpp"
#include "bierflag/error.hpp"
#include "bierflag/gamma.hpp"
#include "bierflag/groebner.hpp"
#include "bierflag/homology.hpp"
#include "bierflag/presentation.hpp"
#include "bierflag/resolutions.hpp"

namespace py = pybind11;
using namespace bierflag;

namespace {

std::vector<long> longs(const std::vector<mpz_class>& v) {
    std::vector<long> out;
    for (const auto& x : v) {
        if (!x.fits_slong_p()) throw Error(ErrorKind::OutOfRange, "coefficient does not fit in 64 bits");
        out.push_back(x.get_si());
    }
    return out;
}

RunConfig config(std::vector<std::uint32_t> chars, int i_max) {
    RunConfig cfg;
    if (!chars.empty()) cfg.characteristics = std::move(chars);
    cfg.i_max = i_max;
    return cfg;
}

FacetOrder order_from_names(const SimplicialComplex& c, const std::vector<std::string>& names) {
    FacetOrder order;
    for (const auto& name : names) {
        std::size_t k = 0;
        while (k < c.facets().size() && c.face_name(c.facets()[k]) != name) ++k;
        if (k == c.facets().size()) throw Error(ErrorKind::NotAFace, "not a facet: " + name);
        order.push_back(k);
    }
    return order;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bier balls, idealizations and their homological invariants";

    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
    error.call_once_and_store_result([&]() { return py::exception<Error>(m, "BierflagError"); });
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            std::string msg = std::string(to_string(e.kind())) + ": " + e.what();
            py::set_error(error.get_stored(), msg.c_str());
        }
    });

    py::class_<SimplicialComplex>(m, "Complex")
        .def(py::init([](std::vector<std::string> vertices, std::vector<std::vector<std::string>> facets) {
                 return SimplicialComplex::from_labels(std::move(vertices), facets);
             }),
             py::arg("vertices"), py::arg("facets"))
        .def_static("parse", &SimplicialComplex::parse, py::arg("text"))
        .def_static("load", &SimplicialComplex::load, py::arg("path"))
        .def_static(
            "builtin", [](const std::string& name, std::vector<int> params) { return builtin::by_name(name, params); },
            py::arg("name"), py::arg("params") = std::vector<int>{})
        .def_property_readonly("vertices", &SimplicialComplex::labels)
        .def_property_readonly("facets",
                               [](const SimplicialComplex& c) {
                                   std::vector<std::vector<std::string>> out;
                                   for (VertexSet f : c.facets()) out.push_back(c.face_labels(f));
                                   return out;
                               })
        .def_property_readonly("dim", &SimplicialComplex::dim)
        .def("is_pure", &SimplicialComplex::is_pure)
        .def("is_flag", &SimplicialComplex::is_flag)
        .def("f_vector", &SimplicialComplex::f_vector)
        .def("h_vector", [](const SimplicialComplex& c) { return h_vector(c); })
        .def("to_json", [](const SimplicialComplex& c) { return c.to_json().dump(); })
        .def("__repr__", [](const SimplicialComplex& c) {
            return "<Complex " + std::to_string(c.num_vertices()) + " vertices, " + std::to_string(c.facets().size()) +
                   " facets>";
        });

    m.def("h_r_delta", &h_vector_r_delta, py::arg("complex"));
    m.def(
        "gamma_from_h", [](const HVector& h) { return gamma_from_h(h).to_longs(); }, py::arg("h"));
    m.def(
        "h_from_gamma",
        [](const std::vector<long>& g, int s) {
            GammaVector v;
            v.s = s;
            for (long x : g) v.entries.emplace_back(x);
            return longs(h_from_gamma(v));
        },
        py::arg("gamma"), py::arg("s"));
    m.def(
        "top_gamma_via_euler",
        [](const SimplicialComplex& c, std::uint32_t p) { return top_gamma_via_euler(c, FieldSpec(p)).get_si(); },
        py::arg("complex"), py::arg("characteristic") = 0);
    m.def(
        "serre_profile",
        [](const SimplicialComplex& c, std::vector<std::uint32_t> chars) { return serre_profile(c, chars); },
        py::arg("complex"), py::arg("characteristics") = std::vector<std::uint32_t>{0, 2, 3, 5});
    m.def(
        "is_cohen_macaulay",
        [](const SimplicialComplex& c, std::uint32_t p) { return is_cohen_macaulay(c, FieldSpec(p)); },
        py::arg("complex"), py::arg("characteristic") = 0);
    m.def(
        "koszul",
        [](const SimplicialComplex& c, std::uint32_t p) {
            KoszulVerdict v = koszul_verdict(c, FieldSpec(p));
            py::dict d;
            d["koszul"] = v.koszul;
            d["reason"] = v.reason;
            d["linear_steps"] = v.linear_steps == kLinearThroughout ? py::object(py::none()) : py::int_(v.linear_steps);
            return d;
        },
        py::arg("complex"), py::arg("characteristic") = 0);
    m.def(
        "poincare_from_hilbert",
        [](const std::vector<std::int64_t>& h, int krull_dim, int i_max) {
            return longs(poincare_from_hilbert(h, krull_dim, i_max));
        },
        py::arg("h"), py::arg("krull_dim"), py::arg("i_max"));
    m.def(
        "find_shelling",
        [](const SimplicialComplex& c, std::uint64_t budget) -> py::object {
            ShellingResult s = find_shelling(c, budget);
            if (s.status != ShellingResult::Status::Found) return py::none();
            std::vector<std::string> names;
            for (auto k : s.order) names.push_back(c.face_name(c.facets()[k]));
            return py::cast(names);
        },
        py::arg("complex"), py::arg("node_budget") = 10'000'000);
    m.def(
        "quadratic_gb_test",
        [](const SimplicialComplex& c, const std::vector<std::string>& order, std::uint32_t p) {
            QuadraticGbReport r = quadratic_gb_test(c, order_from_names(c, order), FieldSpec(p));
            py::dict d;
            d["passed"] = r.passed;
            d["pairs_checked"] = r.pairs_checked;
            d["offending_pair"] = r.offending_pair;
            d["remainder"] = r.remainder;
            return d;
        },
        py::arg("complex"), py::arg("order"), py::arg("characteristic") = 0);
    m.def(
        "presentation",
        [](const SimplicialComplex& c, const std::string& format, bool minimal, bool artinian) {
            Presentation p = r_delta_presentation(c);
            if (minimal) p = binomial_redundancy_filter(p);
            if (artinian) p = artinian_reduction(p);
            return export_presentation(p, parse_export_format(format));
        },
        py::arg("complex"), py::arg("format") = "json", py::arg("minimal") = true, py::arg("artinian") = false);

    // JSON-returning commands; the Python wrapper decodes them
    m.def(
        "_analyze",
        [](const SimplicialComplex& c, std::vector<std::uint32_t> chars) {
            return cmd_analyze(c, config(std::move(chars), 4)).dump();
        },
        py::arg("complex"), py::arg("characteristics") = std::vector<std::uint32_t>{});
    m.def(
        "_betti",
        [](const std::string& input, const std::string& mode, std::vector<std::uint32_t> chars, int i_max) {
            return cmd_betti(nlohmann::json::parse(input), mode, config(std::move(chars), i_max)).dump();
        },
        py::arg("input"), py::arg("mode"), py::arg("characteristics") = std::vector<std::uint32_t>{},
        py::arg("i_max") = 4);
    m.def(
        "_verify",
        [](const std::string& dir, std::vector<std::uint32_t> chars) {
            return cmd_verify(dir, config(std::move(chars), 4)).dump();
        },
        py::arg("corpus_dir"), py::arg("characteristics") = std::vector<std::uint32_t>{});
}
