// Copyright 2026 The zwtick Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zwtick/diagram.hpp"
#include "zwtick/normalform.hpp"
#include "zwtick/qinfo.hpp"
#include "zwtick/rules.hpp"
#include "zwtick/semantics.hpp"

namespace py = pybind11;
using namespace py::literals;
using namespace zwtick;

namespace {

Scalar to_scalar(const py::handle& h) {
  if (py::isinstance<Scalar>(h)) return h.cast<Scalar>();
  if (py::isinstance<py::int_>(h)) return Scalar(h.cast<long>());
  if (py::isinstance<py::str>(h)) return Scalar::parse(h.cast<std::string>());
  throw py::type_error("expected Scalar, int or str");
}

std::vector<std::vector<std::complex<double>>> to_complex_rows(const Matrix& m) {
  std::vector<std::vector<std::complex<double>>> out(m.rows(), std::vector<std::complex<double>>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).to_complex();
  return out;
}

void bind_scalar(py::module_& m) {
  py::class_<Scalar>(m, "Scalar", "Exact element of Q[w], w = exp(i pi/4).")
      .def(py::init<>())
      .def(py::init<long>())
      .def(py::init([](const std::string& s) { return Scalar::parse(s); }))
      .def_static("rational", &Scalar::rational, "p"_a, "q"_a)
      .def_static("omega", &Scalar::omega, "k"_a = 1)
      .def_static("i", &Scalar::i)
      .def_static("sqrt2", &Scalar::sqrt2)
      .def("conj", &Scalar::conj)
      .def("inverse", &Scalar::inverse)
      .def("is_real", &Scalar::is_real)
      .def("__complex__", &Scalar::to_complex)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__hash__", [](const Scalar& s) { return py::hash(py::str(s.str())); })
      .def("__str__", &Scalar::str)
      .def("__repr__", [](const Scalar& s) { return "Scalar('" + s.str() + "')"; });
}

void bind_matrix(py::module_& m) {
  py::class_<Matrix>(m, "Matrix", "Dense exact matrix over Q[w].")
      .def(py::init<std::size_t, std::size_t>(), "rows"_a, "cols"_a)
      .def_static("parse", [](const std::string& s) { return Matrix::parse(s); })
      .def_static("identity", &Matrix::identity)
      .def_static("from_rows",
                  [](const std::vector<std::vector<py::object>>& rows) {
                    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
                    Matrix out(rows.size(), cols);
                    for (std::size_t r = 0; r < rows.size(); ++r) {
                      if (rows[r].size() != cols) throw py::value_error("ragged rows");
                      for (std::size_t c = 0; c < cols; ++c) out(r, c) = to_scalar(rows[r][c]);
                    }
                    return out;
                  })
      .def_property_readonly("shape", [](const Matrix& a) { return py::make_tuple(a.rows(), a.cols()); })
      .def("__getitem__",
           [](const Matrix& a, std::pair<std::size_t, std::size_t> rc) {
             if (rc.first >= a.rows() || rc.second >= a.cols()) throw py::index_error();
             return a(rc.first, rc.second);
           })
      .def("adjoint", &Matrix::adjoint)
      .def("transpose", &Matrix::transpose)
      .def("trace", &Matrix::trace)
      .def("is_hermitian", &Matrix::is_hermitian)
      .def("is_zero", &Matrix::is_zero)
      .def("to_complex", &to_complex_rows, "Nested lists of Python complex numbers.")
      .def(py::self * py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self == py::self)
      .def("float_str", &Matrix::float_str)
      .def("__str__", &Matrix::str)
      .def("__repr__", [](const Matrix& a) {
        return "<Matrix " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ">";
      });
  m.def("kron", &kron);
}

void bind_diagram(py::module_& m) {
  py::class_<Diagram>(m, "Diagram", "Immutable diagram term.")
      .def_static("parse", [](const std::string& s) { return parse_diagram(s); })
      .def_static("compose", &Diagram::compose, "after"_a, "before"_a)
      .def_static("tensor", &Diagram::tensor, "left"_a, "right"_a)
      .def_property_readonly("inputs", &Diagram::inputs)
      .def_property_readonly("outputs", &Diagram::outputs)
      .def("has_tick", &Diagram::has_tick)
      .def("__matmul__", [](const Diagram& a, const Diagram& b) { return Diagram::compose(a, b); })
      .def("__mul__", [](const Diagram& a, const Diagram& b) { return Diagram::tensor(a, b); })
      .def("__str__", &print_diagram)
      .def("__repr__", [](const Diagram& d) { return "Diagram.parse('" + print_diagram(d) + "')"; });
  m.def("z_spider", [](const py::object& r, unsigned n, unsigned k) { return z_spider(to_scalar(r), n, k); },
        "r"_a, "n"_a, "m"_a);
  m.def("w_spider", &w_spider, "n"_a, "m"_a);
  m.def("fswap", &fswap);
  m.def("tick", &tick);
  m.def("id", &id, "n"_a = 1);
  m.def("swap", [] { return zwtick::swap(); });
  m.def("cup", &cup);
  m.def("cap", &cap);
  m.def("ground", &ground);
  m.def("ket0", &ket0);
  m.def("ket1", &ket1);
  m.def("bra0", &bra0);
  m.def("bra1", &bra1);
  m.def("not_gate", &not_gate);
  m.def("dagger", &dagger);
  m.def("render_dot", &render_dot);
}

void bind_semantics(py::module_& m) {
  m.def("interp", &interp, "Pure interpretation; raises for ticked diagrams.");
  m.def("unzip", &unzip);
  m.def("superoperator", &superoperator);
  m.def("apply_superop", &apply_superop, "d"_a, "rho"_a);
  m.def("choi", &choi);
  m.def("proper_choi", &proper_choi);
  m.def("state_operator", &state_operator);
  m.def("is_hermiticity_preserving", &is_hermiticity_preserving);
  m.def(
      "is_completely_positive",
      [](const Diagram& d, std::optional<double> tol) {
        return std::string(to_string(is_completely_positive(d, tol.value_or(default_tolerance()))));
      },
      "d"_a, "tolerance"_a = py::none(), "Returns 'yes', 'no' or 'unknown'.");
  m.def("min_eigenvalue", &min_eigenvalue);
}

void bind_normalform(py::module_& m) {
  py::class_<NormalForm>(m, "NormalForm")
      .def_static("parse", [](const std::string& s) { return NormalForm::parse(s); })
      .def_readonly("n", &NormalForm::n)
      .def_property_readonly("terms",
                             [](const NormalForm& nf) {
                               py::list out;
                               for (const auto& t : nf.terms)
                                 out.append(py::make_tuple(bitstring(t.x, nf.n), bitstring(t.y, nf.n), t.lambda));
                               return out;
                             })
      .def("matrix", &NormalForm::matrix)
      .def(py::self == py::self)
      .def("__str__", &NormalForm::str);
  m.def("nf_from_matrix", &nf_from_matrix);
  m.def("nf_to_diagram", &nf_to_diagram, "nf"_a, "reduced"_a = true);
  m.def("canonical_of_map", &canonical_of_map);
  m.def("diagrams_equal", &diagrams_equal);
}

void bind_rules(py::module_& m) {
  m.def("rule_names", [] {
    std::vector<std::string> names;
    for (const auto& r : axiom_schemas()) names.push_back(r.name);
    return names;
  });
  m.def("check_axioms", [] { return check_soundness(axiom_schemas()).text(); },
        "Soundness report text, ending in 'total/pass/fail failures'.");
  m.def("check_lemmas", [] { return check_corpus(lemma_corpus()).text(); });
}

void bind_qinfo(py::module_& m) {
  m.def("partial_transpose", &partial_transpose, "rho"_a, "first_block"_a);
  m.def(
      "ppt_check",
      [](const Matrix& rho, unsigned split, std::optional<double> tol) {
        return std::string(to_string(ppt_check(rho, split, tol.value_or(default_tolerance()))));
      },
      "rho"_a, "split"_a, "tolerance"_a = py::none());
  m.def("bloch", [](const Matrix& rho) {
    BlochVector v = bloch(rho);
    return py::make_tuple(v.rx, v.ry, v.rz);
  });
  m.def("spin_flip", &spin_flip);
  m.def("spin_flip_diagram", &spin_flip_diagram);
  m.def("sesqui_pairing", &sesqui_pairing, "s1"_a, "s2"_a, "ticked"_a);
  m.def("internal_dagger", &internal_dagger);
  m.def("is_unitary_semantic", &is_unitary_semantic);
}

}  // namespace

PYBIND11_MODULE(_zwtick, m) {
  m.doc() = "Exact semantics and normal forms for ZW diagrams with the tick generator.";
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ArityError>(m, "ArityError", PyExc_ValueError);
  py::register_exception<NotHermitianError>(m, "NotHermitianError", PyExc_ValueError);
  bind_scalar(m);
  bind_matrix(m);
  bind_diagram(m);
  bind_semantics(m);
  bind_normalform(m);
  bind_rules(m);
  bind_qinfo(m);
}
