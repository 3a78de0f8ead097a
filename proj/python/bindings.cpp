// Python bindings for the main engine operations: category data, axiom
// checks, Cardy algebras, correlator sets, extraction, and string-net
// dimension counts.  Derived objects hold a pointer to the category that
// produced them, so every factory keeps its inputs alive from Python.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>

#include "sewnet/algebra.hpp"
#include "sewnet/category.hpp"
#include "sewnet/center.hpp"
#include "sewnet/io.hpp"
#include "sewnet/sewing.hpp"

namespace py = pybind11;
using namespace sewnet;

namespace {

py::dict check_dict(const CheckResult& r) {
    py::dict d;
    d["name"] = r.name;
    d["residual"] = double(r.residual);
    d["pass"] = r.pass;
    d["detail"] = r.detail;
    return d;
}

py::dict report_dict(const AlgebraReport& rep, Real tol) {
    py::dict d;
    py::list cs;
    for (const auto& c : rep.checks) cs.append(check_dict(c));
    d["checks"] = cs;
    d["pass"] = rep.ok(tol);
    return d;
}

std::vector<CenterObj> boundary_objs(const CategoryData& C,
                                     const std::vector<std::pair<int, int>>& b) {
    std::vector<CenterObj> objs;
    for (auto [a, u] : b) {
        if (a < 0 || a >= C.num_labels || u < 0 || u >= C.num_labels)
            throw std::invalid_argument("boundary label out of range");
        objs.push_back(center_simple(a, u));
    }
    return objs;
}

}  // namespace

PYBIND11_MODULE(_sewnet, m) {
    m.doc() = "modular-category sewing-constraint engine";
    m.attr("default_tol") = double(kDefaultTol);

    py::class_<CategoryData>(m, "CategoryData")
        .def_readonly("num_labels", &CategoryData::num_labels)
        .def_readonly("names", &CategoryData::names)
        .def("qdim",
             [](const CategoryData& C, int i) {
                 return std::complex<double>(C.qdim.at(std::size_t(i)));
             })
        .def("twist",
             [](const CategoryData& C, int i) {
                 return std::complex<double>(C.twist.at(std::size_t(i)));
             })
        .def("nfus", &CategoryData::nfus)
        .def_property_readonly("global_dim2", [](const CategoryData& C) {
            return std::complex<double>(C.global_dim2);
        });
    py::class_<CardyAlgebra>(m, "CardyAlgebra");
    py::class_<CorrelatorSet>(m, "CorrelatorSet");

    m.def("make_vect", &make_vect);
    m.def("make_fibonacci", &make_fibonacci);
    m.def("make_ising", &make_ising);
    m.def("load_category", &load_category, py::arg("path"));
    m.def("save_category", &save_category, py::arg("category"),
          py::arg("path"));

    m.def(
        "check_category",
        [](const CategoryData& C, Real tol) {
            py::list out;
            for (const auto& r : check_category(C, tol))
                out.append(check_dict(r));
            return out;
        },
        py::arg("category"), py::arg("tol") = kDefaultTol);

    m.def("canonical_cardy", &canonical_cardy, py::arg("category"),
          py::keep_alive<0, 1>());
    m.def("load_cardy", &load_cardy, py::arg("category"), py::arg("path"),
          py::keep_alive<0, 1>());
    m.def("save_cardy", &save_cardy, py::arg("cardy"), py::arg("path"));
    m.def(
        "verify_cardy",
        [](const CardyAlgebra& Cd, Real tol) {
            return report_dict(verify_cardy(Cd, tol), tol);
        },
        py::arg("cardy"), py::arg("tol") = kDefaultTol);
    m.def(
        "is_cardy_isomorphic",
        [](const CardyAlgebra& a, const CardyAlgebra& b, Real tol) {
            return cardy_isomorphic(a, b, tol).has_value();
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = kDefaultTol);

    m.def("canonical_correlators", &canonical_correlators, py::arg("cardy"),
          py::keep_alive<0, 1>());
    m.def("load_correlators", &load_correlators, py::arg("category"),
          py::arg("path"), py::keep_alive<0, 1>());
    m.def("save_correlators", &save_correlators, py::arg("correlators"),
          py::arg("path"));
    m.def("inflate_correlators", &inflate_correlators, py::arg("correlators"),
          py::arg("seed"), py::keep_alive<0, 1>());
    m.def(
        "check_sewing",
        [](const CorrelatorSet& S, Real tol) {
            py::list out;
            for (const auto& r : check_all(S, tol)) {
                py::dict d;
                d["id"] = r.id;
                d["residual"] = double(r.residual);
                d["pass"] = r.pass;
                d["relation"] = relation_encoding(r.id);
                out.append(d);
            }
            return out;
        },
        py::arg("correlators"), py::arg("tol") = kDefaultTol);
    m.def("extract_cardy", &extract_cardy, py::arg("correlators"),
          py::arg("tol") = kDefaultTol, py::arg("seed") = 0,
          py::keep_alive<0, 1>());
    m.def("relation_encoding", &relation_encoding, py::arg("id"));

    m.def(
        "stringnet_dim",
        [](const CategoryData& C, int genus,
           const std::vector<std::pair<int, int>>& boundary) {
            if (genus < 0) throw std::invalid_argument("negative genus");
            return stringnet_dim(C, genus, boundary_objs(C, boundary));
        },
        py::arg("category"), py::arg("genus"), py::arg("boundary"));
}
