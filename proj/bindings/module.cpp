#include "rsn/dot.hpp"
#include "rsn/json_io.hpp"
#include "rsn/representation.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

using rsn::Json;

Json doc_from(py::handle obj) {
  if (py::isinstance<py::str>(obj)) return rsn::parse_json_text(py::cast<std::string>(obj));
  py::object dumps = py::module_::import("json").attr("dumps");
  return rsn::parse_json_text(py::cast<std::string>(dumps(obj)));
}

py::object to_py(const Json& j) {
  py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

// Python-facing relation: a universe plus pairs, optionally closed.
struct Relation {
  rsn::BinaryRelation rel;

  Relation(const std::vector<std::string>& names,
           const std::vector<std::pair<std::string, std::string>>& pairs,
           const std::string& closure)
      : rel(rsn::build_relation(rsn::Universe(names), pairs,
                                rsn::closure_mode_from_string(closure))) {}

  std::vector<std::string> lower(const std::vector<std::string>& x) const {
    return rel.universe().render(rsn::lower_approx(rel, x));
  }
  std::vector<std::string> upper(const std::vector<std::string>& x) const {
    return rel.universe().render(rsn::upper_approx(rel, x));
  }
};

using PairOfLists = std::pair<std::vector<std::string>, std::vector<std::string>>;

std::vector<PairOfLists> rs_as_lists(const rsn::RoughSetLattice& rs) {
  std::vector<PairOfLists> out;
  out.reserve(rs.size());
  const rsn::Universe& u = rs.universe();
  for (const rsn::RoughPair& p : rs.pairs()) out.emplace_back(u.render(p.lower), u.render(p.upper));
  return out;
}

std::vector<PairOfLists> rough_sets(const Relation& r, const std::string& method,
                                    std::size_t max_universe) {
  if (method == "generated") return rs_as_lists(rsn::enumerate_rs_generated(r.rel));
  if (method == "brute") return rs_as_lists(rsn::enumerate_rs_bruteforce(r.rel, max_universe));
  if (method == "both") {
    rsn::RoughSetLattice g = rsn::enumerate_rs_generated(r.rel);
    rsn::RoughSetLattice b = rsn::enumerate_rs_bruteforce(r.rel, max_universe);
    if (g.pairs() != b.pairs())
      throw rsn::InternalError("generated and brute-force enumerations disagree; this is a bug");
    return rs_as_lists(g);
  }
  throw rsn::InputError("method must be generated, brute, or both");
}

py::object join_irreducibles_py(const Relation& r) {
  Json out = Json::array();
  for (const rsn::TaggedPair& t : rsn::rs_join_irreducibles(r.rel)) {
    Json e = rsn::rough_pair_to_json(r.rel.universe(), t.pair);
    e["class"] = rsn::to_string(t.cls);
    e["witness"] = r.rel.universe().name(t.witness);
    out.push_back(std::move(e));
  }
  return to_py(out);
}

py::object decompose_py(const Relation& r, std::size_t max_universe) {
  Json out = Json::array();
  for (const rsn::Component& c : rsn::decompose(r.rel, max_universe)) {
    Json e;
    e["block"] = r.rel.universe().render(c.block);
    e["rs"] = rsn::rs_to_json(c.rs);
    out.push_back(std::move(e));
  }
  return to_py(out);
}

py::object verify_py(py::handle doc) {
  rsn::DeMorganAlgebra a = rsn::parse_algebra_doc(doc_from(doc));
  rsn::AlgebraReport report = rsn::verify_algebra(a);
  Json out = rsn::algebra_report_to_json(report);
  if (report.delta) {
    Json d = Json::object();
    for (std::size_t x = 0; x < a.size(); ++x) d[a.name(x)] = a.name((*report.delta)[x]);
    out["delta"] = std::move(d);
  }
  return to_py(out);
}

py::object represent_py(py::handle doc) {
  rsn::DeMorganAlgebra a = rsn::parse_algebra_doc(doc_from(doc));
  rsn::Representation rep = rsn::represent(a);
  Json out;
  out["report"] = rsn::algebra_report_to_json(rep.report);
  out["representation"] = rsn::representation_to_json(rep);
  return to_py(out);
}

py::object verify_rs_py(const Relation& r) {
  rsn::RoughSetLattice rs = rsn::enumerate_rs_generated(r.rel);
  rsn::AlgebraReport report = rsn::verify_algebra(rsn::rs_algebra(rs));
  return to_py(rsn::algebra_report_to_json(report));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "rough-set algebras of quasiorders";
  m.attr("__version__") = "0.1.0";

  auto base = py::register_exception<rsn::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<rsn::InputError>(m, "InputError", base.ptr());
  py::register_exception<rsn::RelationClassError>(m, "RelationClassError", base.ptr());
  py::register_exception<rsn::CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<rsn::LatticeError>(m, "LatticeError", base.ptr());
  py::register_exception<rsn::PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<rsn::InternalError>(m, "InternalError", base.ptr());

  py::class_<Relation>(m, "Relation")
      .def(py::init<const std::vector<std::string>&,
                    const std::vector<std::pair<std::string, std::string>>&,
                    const std::string&>(),
           py::arg("universe"), py::arg("pairs") = std::vector<std::pair<std::string, std::string>>{},
           py::arg("closure") = "none")
      .def_property_readonly("universe",
                             [](const Relation& r) { return r.rel.universe().names(); })
      .def_property_readonly("is_reflexive", [](const Relation& r) { return r.rel.is_reflexive(); })
      .def_property_readonly("is_transitive",
                             [](const Relation& r) { return r.rel.is_transitive(); })
      .def_property_readonly("is_symmetric", [](const Relation& r) { return r.rel.is_symmetric(); })
      .def_property_readonly("is_quasiorder",
                             [](const Relation& r) { return r.rel.is_quasiorder(); })
      .def_property_readonly("is_equivalence",
                             [](const Relation& r) { return r.rel.is_equivalence(); })
      .def_property_readonly("is_partial_order",
                             [](const Relation& r) { return r.rel.is_partial_order(); })
      .def("pairs", [](const Relation& r) { return r.rel.pairs(); })
      .def("lower", &Relation::lower, py::arg("elements"))
      .def("upper", &Relation::upper, py::arg("elements"))
      .def("dot", [](const Relation& r) { return rsn::relation_dot(r.rel); })
      .def("__eq__", [](const Relation& a, const Relation& b) { return a.rel == b.rel; })
      .def("__repr__", [](const Relation& r) {
        return "Relation(" + std::to_string(r.rel.size()) + " elements, " +
               std::to_string(r.rel.pairs().size()) + " pairs)";
      });

  m.def("rough_sets", &rough_sets, py::arg("relation"), py::arg("method") = "generated",
        py::arg("max_universe") = 20,
        "all (lower, upper) pairs of the relation, canonically ordered");
  m.def("join_irreducibles", &join_irreducibles_py, py::arg("relation"),
        "join-irreducible rough pairs with their class and witness");
  m.def("decompose", &decompose_py, py::arg("relation"), py::arg("max_universe") = 20,
        "connected components and the rough-set family of each");
  m.def("verify", &verify_py, py::arg("algebra"),
        "law report for an algebra document (dict or JSON text)");
  m.def("verify_rough_algebra", &verify_rs_py, py::arg("relation"),
        "law report for the rough-set algebra of a quasiorder");
  m.def("represent", &represent_py, py::arg("algebra"),
        "rebuild a finite Nelson algebra as the rough-set algebra of a quasiorder");
}
