// Copyright 2026 The stinekit developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stinekit/channels.hpp"
#include "stinekit/diagnostics.hpp"
#include "stinekit/dilation.hpp"
#include "stinekit/gksl.hpp"
#include "stinekit/linalg.hpp"

namespace py = pybind11;
using namespace stinekit;

namespace {

using ComplexArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

Matrix matrix_from_array(const ComplexArray &array) {
    const py::buffer_info info = array.request();
    if (info.ndim != 2) {
        throw py::value_error("expected a 2-D complex array");
    }
    Matrix m(static_cast<std::size_t>(info.shape[0]), static_cast<std::size_t>(info.shape[1]));
    const auto *data = static_cast<const std::complex<double> *>(info.ptr);
    for (std::size_t i = 0; i < m.size(); ++i) {
        m.data()[i] = data[i];
    }
    return m;
}

py::array_t<std::complex<double>> array_from_matrix(const Matrix &m) {
    py::array_t<std::complex<double>> array({m.rows(), m.cols()});
    auto *data = static_cast<std::complex<double> *>(array.request().ptr);
    for (std::size_t i = 0; i < m.size(); ++i) {
        data[i] = m.data()[i];
    }
    return array;
}

std::vector<Matrix> matrices_from_list(const std::vector<ComplexArray> &arrays) {
    std::vector<Matrix> out;
    out.reserve(arrays.size());
    for (const auto &array : arrays) {
        out.push_back(matrix_from_array(array));
    }
    return out;
}

py::list list_from_matrices(const std::vector<Matrix> &matrices) {
    py::list out;
    for (const Matrix &m : matrices) {
        out.append(array_from_matrix(m));
    }
    return out;
}

KrausSet kraus_from_list(const std::vector<ComplexArray> &arrays) {
    if (arrays.empty()) {
        throw py::value_error("empty Kraus operator list");
    }
    KrausSet kraus;
    kraus.operators = matrices_from_list(arrays);
    kraus.out_dim = kraus.operators.front().rows();
    kraus.in_dim = kraus.operators.front().cols();
    return kraus;
}

LindbladData lindblad_from_args(const ComplexArray &h0, const std::vector<ComplexArray> &jumps) {
    LindbladData data;
    data.h0 = matrix_from_array(h0);
    data.jumps = matrices_from_list(jumps);
    return data;
}

CurveTrace curve_trace(const StinespringCurve &curve, const std::vector<double> &grid) {
    return trace_from_curve(curve, grid);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum channel representations, GKSL semigroups, and type-I Stinespring dilation curves";

    py::class_<Channel>(m, "Channel")
        .def_property_readonly("in_dim", &Channel::in_dim)
        .def_property_readonly("out_dim", &Channel::out_dim)
        .def_property_readonly("superop", [](const Channel &c) { return array_from_matrix(c.superop()); })
        .def("apply", [](const Channel &c, const ComplexArray &x) {
            return array_from_matrix(c.apply(matrix_from_array(x)));
        }, py::arg("x"))
        .def("choi", [](const Channel &c) { return array_from_matrix(choi_of(c)); })
        .def("compose", &Channel::compose, py::arg("inner"))
        .def_static("identity", &Channel::identity, py::arg("dim"));

    py::class_<StinespringDilation>(m, "StinespringDilation")
        .def_readonly("in_dim", &StinespringDilation::in_dim)
        .def_readonly("out_dim", &StinespringDilation::out_dim)
        .def_readonly("d", &StinespringDilation::d)
        .def_readonly("ell", &StinespringDilation::ell)
        .def_readonly("unitary_form", &StinespringDilation::unitary_form)
        .def_property_readonly("u", [](const StinespringDilation &s) { return array_from_matrix(s.u); });

    py::class_<StinespringCurve>(m, "StinespringCurve")
        .def_readonly("system_dim", &StinespringCurve::sys_dim)
        .def_readonly("ancilla_dim", &StinespringCurve::anc_dim)
        .def_property_readonly("hamiltonian",
                               [](const StinespringCurve &c) { return array_from_matrix(c.hamiltonian); })
        .def_property_readonly("omega",
                               [](const StinespringCurve &c) { return array_from_matrix(c.ancilla.omega); })
        .def("evaluate", &evaluate, py::arg("t"))
        .def("derivative_at_zero",
             [](const StinespringCurve &c, int order) {
                 return array_from_matrix(derivative_at_zero(c, order));
             },
             py::arg("order"))
        .def("extract_jump_operators",
             [](const StinespringCurve &c, double tol) {
                 const JumpOperators jumps = extract_jump_operators(c, tol);
                 return py::make_tuple(list_from_matrices(jumps.full), list_from_matrices(jumps.reduced));
             },
             py::arg("tol") = kDefaultTol)
        .def("taylor_compare", &taylor_compare, py::arg("t"));

    m.def("channel_from_kraus",
          [](const std::vector<ComplexArray> &ops) { return channel_from_kraus(kraus_from_list(ops)); },
          py::arg("operators"));
    m.def("channel_from_choi",
          [](const ComplexArray &choi, std::size_t in_dim, std::size_t out_dim) {
              return channel_from_choi(matrix_from_array(choi), in_dim, out_dim);
          },
          py::arg("choi"), py::arg("in_dim"), py::arg("out_dim"));
    m.def("is_completely_positive",
          [](const Channel &channel, double tol) {
              const CpReport report = is_completely_positive(channel, tol);
              return py::make_tuple(report.completely_positive, report.min_eigenvalue);
          },
          py::arg("channel"), py::arg("tol") = kDefaultTol);
    m.def("is_trace_preserving", &is_trace_preserving, py::arg("channel"), py::arg("tol") = kDefaultTol);
    m.def("kraus_from_choi",
          [](const ComplexArray &choi, std::size_t in_dim, std::size_t out_dim, double tol) {
              return list_from_matrices(kraus_from_choi(matrix_from_array(choi), in_dim, out_dim, tol).operators);
          },
          py::arg("choi"), py::arg("in_dim"), py::arg("out_dim"), py::arg("tol") = kDefaultTol);
    m.def("stinespring_from_kraus",
          [](const std::vector<ComplexArray> &ops, std::uint64_t seed, double tol) {
              return stinespring_from_kraus(kraus_from_list(ops), seed, tol);
          },
          py::arg("operators"), py::arg("seed") = 1, py::arg("tol") = kDefaultTol);
    m.def("kraus_from_stinespring",
          [](const StinespringDilation &dilation, double tol) {
              return list_from_matrices(kraus_from_stinespring(dilation, tol).operators);
          },
          py::arg("dilation"), py::arg("tol") = kDefaultTol);
    m.def("channel_from_stinespring", &channel_from_stinespring, py::arg("dilation"));
    m.def("choi_distance", &choi_distance, py::arg("a"), py::arg("b"));

    m.def("dissipator",
          [](const ComplexArray &v) { return array_from_matrix(dissipator_superop(matrix_from_array(v))); },
          py::arg("v"));
    m.def("generator_superop",
          [](const ComplexArray &h0, const std::vector<ComplexArray> &jumps, double tol) {
              return array_from_matrix(generator(lindblad_from_args(h0, jumps), tol).superop);
          },
          py::arg("h0"), py::arg("jumps"), py::arg("tol") = kDefaultTol);
    m.def("semigroup_evolve",
          [](const ComplexArray &h0, const std::vector<ComplexArray> &jumps, double t, double tol) {
              return semigroup_evolve(generator(lindblad_from_args(h0, jumps), tol), t);
          },
          py::arg("h0"), py::arg("jumps"), py::arg("t"), py::arg("tol") = kDefaultTol);

    m.def("make_curve",
          [](std::size_t sys_dim, std::size_t anc_dim, const ComplexArray &h, const ComplexArray &omega,
             double tol) {
              return make_curve(sys_dim, anc_dim, matrix_from_array(h), matrix_from_array(omega), tol);
          },
          py::arg("system_dim"), py::arg("ancilla_dim"), py::arg("hamiltonian"), py::arg("omega"),
          py::arg("tol") = kDefaultTol);
    m.def("build_curve_from_lindblad",
          [](const ComplexArray &h0, const std::vector<ComplexArray> &jumps, double tol) {
              return build_curve_from_lindblad(lindblad_from_args(h0, jumps), tol);
          },
          py::arg("h0"), py::arg("jumps"), py::arg("tol") = kDefaultTol);
    m.def("operator_partial_trace",
          [](const ComplexArray &b, const ComplexArray &a) {
              const Matrix bm = matrix_from_array(b);
              const Matrix am = matrix_from_array(a);
              if (am.rows() == 0 || bm.rows() % am.rows() != 0) {
                  throw py::value_error("dimensions do not factor");
              }
              return array_from_matrix(operator_partial_trace(bm, am, bm.rows() / am.rows(), am.rows()));
          },
          py::arg("b"), py::arg("a"));

    m.def("semigroup_deviation",
          [](const StinespringCurve &curve, const std::vector<double> &grid) {
              return semigroup_deviation(curve_trace(curve, grid));
          },
          py::arg("curve"), py::arg("grid"));
    m.def("bijectivity_failures",
          [](const StinespringCurve &curve, const std::vector<double> &grid, double det_tol) {
              return bijectivity_failures(curve_trace(curve, grid), det_tol);
          },
          py::arg("curve"), py::arg("grid"), py::arg("det_tol") = 1e-9);
    m.def("recurrence_detect",
          [](const StinespringCurve &curve, const std::vector<double> &grid, double epsilon)
              -> std::optional<double> {
              return recurrence_detect(curve_trace(curve, grid), epsilon);
          },
          py::arg("curve"), py::arg("grid"), py::arg("epsilon"));
    m.def("p_divisibility_change_points",
          [](const StinespringCurve &curve, const std::vector<double> &grid, double tol) {
              return p_divisibility_scan(curve_trace(curve, grid), tol).change_points;
          },
          py::arg("curve"), py::arg("grid"), py::arg("tol") = kDefaultTol);

    m.attr("__version__") = "0.1.0";
}
