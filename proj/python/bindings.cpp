#include "syzmf/json_io.hpp"
#include "syzmf/latex.hpp"
#include "syzmf/pipeline.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace syzmf;

namespace {

LaurentPoly poly_from_json_str(const std::string& s) {
    return poly_from_json(nlohmann::json::parse(s));
}

MatrixFactorization mf_from_json_str(const std::string& s) {
    return mf_from_json(nlohmann::json::parse(s));
}

py::dict verify_dict(const MatrixFactorization& mf, const LaurentPoly& w) {
    const VerifyReport report = mf_verify(mf, w);
    py::dict out;
    out["pass"] = report.pass;
    out["lambda"] = poly_to_json(report.lambda).dump();
    out["summary"] = report.summary();
    return out;
}

py::dict floer_dict(const std::string& surface, int samples, unsigned long long seed,
                    double tolerance, double qmin, double qmax) {
    const Surface s = surface_from_string(surface);
    const FloerReport report =
        floer_square_check(surface_psi(s), surface_superpotential(s), surface_reference_value(s),
                           samples, seed, tolerance, qmin, qmax);
    py::dict out;
    out["samples"] = report.samples.size();
    out["max_square_residual"] = report.max_square_residual;
    out["max_transform_mismatch"] = report.max_transform_mismatch;
    out["pass"] = report.pass;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact matrix factorizations of mirror superpotentials for toric Fano surfaces";

    py::class_<LaurentPoly>(m, "LaurentPoly")
        .def_static("from_json", &poly_from_json_str, py::arg("text"))
        .def_static("zero", [](int n) { return LaurentPoly(n); }, py::arg("n"))
        .def_static("variable", &LaurentPoly::variable, py::arg("n"), py::arg("var"),
                    py::arg("power") = 1)
        .def_static(
            "term",
            [](int n, const std::string& coeff, const std::string& qexp, std::vector<int> zexp) {
                return LaurentPoly::term(n, parse_fraction(coeff), parse_fraction(qexp),
                                         std::move(zexp));
            },
            py::arg("n"), py::arg("coeff"), py::arg("qexp"), py::arg("zexp"))
        .def_property_readonly("n", &LaurentPoly::dimension)
        .def("is_zero", &LaurentPoly::is_zero)
        .def("term_count", &LaurentPoly::term_count)
        .def("to_json", [](const LaurentPoly& p) { return poly_to_json(p).dump(); })
        .def("to_latex", &poly_to_latex)
        .def("evaluate",
             [](const LaurentPoly& p, double qval, const std::vector<std::complex<double>>& z) {
                 return p.evaluate(qval, z);
             },
             py::arg("qval"), py::arg("z"))
        .def("substitute", &LaurentPoly::substitute, py::arg("var"), py::arg("value"))
        .def("divide_linear", &LaurentPoly::divide_linear, py::arg("var"), py::arg("root"))
        .def("__add__", [](const LaurentPoly& a, const LaurentPoly& b) { return a + b; })
        .def("__sub__", [](const LaurentPoly& a, const LaurentPoly& b) { return a - b; })
        .def("__mul__", [](const LaurentPoly& a, const LaurentPoly& b) { return a * b; })
        .def("__neg__", [](const LaurentPoly& a) { return -a; })
        .def("__eq__", [](const LaurentPoly& a, const LaurentPoly& b) { return a == b; })
        .def("__repr__", &LaurentPoly::to_string)
        .def("__str__", &LaurentPoly::to_string);

    py::class_<MatrixFactorization>(m, "MatrixFactorization")
        .def_static("from_json", &mf_from_json_str, py::arg("text"))
        .def_property_readonly("half_rank", &MatrixFactorization::half_rank)
        .def_property_readonly("n", &MatrixFactorization::dimension)
        .def_property_readonly("offset", &MatrixFactorization::offset)
        .def("to_json", [](const MatrixFactorization& mf) { return mf_to_json(mf).dump(); })
        .def("to_latex", &mf_to_latex)
        .def("__eq__", [](const MatrixFactorization& a, const MatrixFactorization& b) { return a == b; });

    m.def(
        "koszul",
        [](const std::vector<std::pair<LaurentPoly, LaurentPoly>>& pairs) {
            std::vector<FactorPair> fp;
            fp.reserve(pairs.size());
            for (const auto& [f, g] : pairs) fp.push_back({f, g});
            return mf_koszul(fp);
        },
        py::arg("pairs"));
    m.def("tensor", &mf_tensor, py::arg("a"), py::arg("b"));
    m.def(
        "from_point",
        [](const LaurentPoly& w, const std::vector<LaurentPoly>& point) {
            return mf_from_point(w, point);
        },
        py::arg("w"), py::arg("point"));
    m.def("verify", &verify_dict, py::arg("mf"), py::arg("w"));

    m.def("superpotential",
          [](const std::string& s) { return surface_superpotential(surface_from_string(s)); },
          py::arg("surface"));
    m.def("reference_point",
          [](const std::string& s) { return surface_reference_point(surface_from_string(s)); },
          py::arg("surface"));
    m.def("reference_value",
          [](const std::string& s) { return surface_reference_value(surface_from_string(s)); },
          py::arg("surface"));
    m.def("polytope_json",
          [](const std::string& s) {
              return polytope_to_json(surface_catalogue(surface_from_string(s))).dump();
          },
          py::arg("surface"));

    m.def(
        "build",
        [](const std::string& surface, const std::string& pipeline) {
            return build_factorization(surface_from_string(surface), pipeline_from_string(pipeline))
                .mf;
        },
        py::arg("surface"), py::arg("pipeline") = "disks");

    m.def(
        "enumerate_json",
        [](const std::string& surface) {
            const Surface s = surface_from_string(surface);
            if (s == Surface::P1) return disk_catalogue_json(p1_catalogue()).dump();
            if (s == Surface::P2) return pair_catalogue_json(p2_enumerate_all()).dump();
            throw std::invalid_argument("enumerate supports p1 and p2 only");
        },
        py::arg("surface"));
    m.def(
        "enumerate_pair_json",
        [](const std::string& p, const std::string& q) {
            return pair_catalogue_json(p2_enumerate(p, q)).dump();
        },
        py::arg("p"), py::arg("q"));

    m.def("floer_check", &floer_dict, py::arg("surface"), py::arg("samples") = 100,
          py::arg("seed") = 0, py::arg("tolerance") = 1e-9, py::arg("qmin") = 0.01,
          py::arg("qmax") = 0.9);
}
