/*
   Copyright 2026 The fxgroup Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Python bindings: a Group object holding an alphabet, a ring and named
// bindings, plus an immutable Element value.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <tuple>

#include "fxg/errors.hpp"
#include "fxg/group_ops.hpp"
#include "fxg/oracle.hpp"
#include "fxg/session.hpp"

namespace py = pybind11;

namespace {

using SessionPtr = std::shared_ptr<fxg::Session>;

fxg::RingElement exponent_of(const fxg::Session& s, const py::object& x) {
  if (py::isinstance<py::int_>(x)) return fxg::RingElement(fxg::BigInt(py::str(x).cast<std::string>()));
  return s.context().ring->parse(x.cast<std::string>(), 0);
}

struct PyElement {
  fxg::Element value;
  SessionPtr session;

  std::string str() const { return session->format(value); }
  PyElement wrap(fxg::Element e) const { return {std::move(e), session}; }
};

struct Group {
  SessionPtr session;

  Group(const std::string& gens, const std::string& ring, std::uint64_t seed,
        std::vector<long> points)
      : session(std::make_shared<fxg::Session>(fxg::Alphabet::parse(gens), fxg::make_ring(ring), seed,
                                               std::move(points))) {}

  fxg::Element get(const py::object& x) const {
    if (py::isinstance<PyElement>(x)) {
      const auto& e = x.cast<const PyElement&>();
      if (!(e.session->context().alphabet == session->context().alphabet))
        throw fxg::AlphabetMismatchError("element belongs to a different alphabet");
      return e.value;
    }
    return session->evaluate(x.cast<std::string>());
  }
  PyElement wrap(fxg::Element e) const { return {std::move(e), session}; }
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computation in free exponential groups";

  auto base = py::register_exception<fxg::Error>(m, "Error", PyExc_ValueError);
  py::register_exception<fxg::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<fxg::CapabilityError>(m, "CapabilityError", base.ptr());

  py::class_<PyElement>(m, "Element")
      .def("__str__", &PyElement::str)
      .def("__repr__", [](const PyElement& e) { return "Element('" + e.str() + "')"; })
      .def("__eq__", [](const PyElement& a, const PyElement& b) { return fxg::equals(a.value, b.value); })
      .def("__hash__", [](const PyElement& e) { return e.value.hash(); })
      .def("__mul__", [](const PyElement& a, const PyElement& b) { return a.wrap(fxg::multiply(a.value, b.value)); })
      .def("__pow__",
           [](const PyElement& a, const py::object& x) {
             return a.wrap(fxg::power(a.value, exponent_of(*a.session, x)));
           })
      .def("inverse", [](const PyElement& a) { return a.wrap(fxg::invert(a.value)); })
      .def_property_readonly("level", [](const PyElement& a) { return a.value.level(); })
      .def_property_readonly("is_identity", [](const PyElement& a) { return a.value.is_identity(); })
      .def("__len__", [](const PyElement& a) { return fxg::syllable_length(a.value); });

  py::class_<Group>(m, "Group")
      .def(py::init([](const std::string& gens, const std::string& ring, std::uint64_t seed,
                       std::vector<long> points) { return Group(gens, ring, seed, std::move(points)); }),
           py::arg("gens"), py::arg("ring") = "zt", py::arg("seed") = 1,
           py::arg("points") = std::vector<long>{-2, -1, 0, 1, 2, 3})
      .def("__call__", [](const Group& g, const std::string& text) { return g.wrap(g.session->evaluate(text)); })
      .def("norm", [](const Group& g, const py::object& x) { return g.session->format(g.get(x)); })
      .def("eq", [](const Group& g, const py::object& x, const py::object& y) {
        return fxg::equals(g.get(x), g.get(y));
      })
      .def("comm", [](const Group& g, const py::object& x, const py::object& y) {
        return fxg::commutes(g.get(x), g.get(y));
      })
      .def("conj",
           [](const Group& g, const py::object& x, const py::object& y) -> std::optional<PyElement> {
             auto c = fxg::conjugate_test(g.get(x), g.get(y));
             if (!c) return std::nullopt;
             return g.wrap(*c);
           })
      .def("root",
           [](const Group& g, const py::object& x) {
             auto r = fxg::extract_root(g.get(x));
             return std::make_tuple(g.wrap(r.conjugator), g.wrap(r.root.body), r.exponent.to_string());
           })
      .def("cent",
           [](const Group& g, const py::object& x) {
             auto c = fxg::centralizer(g.get(x));
             return std::make_tuple(g.wrap(c.conjugator), g.wrap(c.root.body));
           })
      .def("level", [](const Group& g, const py::object& x) { return g.get(x).level(); })
      .def("length", [](const Group& g, const py::object& x) { return fxg::syllable_length(g.get(x)); })
      .def("pow", [](const Group& g, const py::object& x,
                     const py::object& e) { return g.wrap(fxg::power(g.get(x), exponent_of(*g.session, e))); })
      .def("eval",
           [](const Group& g, const py::object& x, long k) {
             if (!g.session->context().ring->has_evaluation())
               throw fxg::CapabilityError("ring has no integer evaluations");
             return g.session->context().alphabet.format(fxg::evaluate_hom(g.get(x), fxg::BigInt(k)));
           })
      .def("let",
           [](Group& g, const std::string& name, const py::object& x) {
             std::string expr = py::isinstance<PyElement>(x) ? g.session->format(g.get(x)) : x.cast<std::string>();
             auto r = g.session->run("let " + name + " = " + expr);
             if (r.status != fxg::kTrue) throw fxg::Error(r.output);
             return g.wrap(g.session->bindings().find(name)->second);
           })
      .def("run", [](Group& g, const std::string& line) {
        auto r = g.session->run(line);
        return std::make_tuple(r.status, r.output);
      });
}
