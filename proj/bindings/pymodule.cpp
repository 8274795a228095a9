#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "odplab/classes.hpp"
#include "odplab/corpus.hpp"
#include "odplab/delta.hpp"
#include "odplab/epexpr.hpp"
#include "odplab/epset.hpp"
#include "odplab/frink.hpp"
#include "odplab/io.hpp"

namespace py = pybind11;
using namespace odplab;

namespace {

/// The binding works on whole instances; the delta table may be absent for
/// bare orthoposet files.
struct PyInstance {
  FinOrthoPoset poset;
  std::optional<DeltaTable> delta;

  Instance as_instance() const {
    if (!delta) throw std::invalid_argument("structure has no difference table");
    return {poset, *delta};
  }
};

py::list report_to_list(const ViolationReport& rep) {
  py::list out;
  for (const auto& v : rep.violations) {
    py::dict d;
    d["axiom"] = v.axiom;
    d["witness"] = v.witness;
    if (!v.detail.empty()) d["detail"] = v.detail;
    out.append(d);
  }
  return out;
}

std::vector<int> bitset_indices(const Bitset& b) {
  std::vector<int> out;
  for (std::size_t i = b.first(); i < b.universe(); i = b.next(i + 1))
    out.push_back((int)i);
  return out;
}

PyInstance make_instance(const Instance& inst) {
  return {inst.poset, inst.delta};
}

}  // namespace

PYBIND11_MODULE(_odplab, m) {
  m.doc() =
      "Finite orthocomplemented difference structures and eventually "
      "periodic set families";

  py::register_exception<StructuralError>(m, "StructuralError");
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");

  py::class_<PyInstance>(m, "Instance")
      .def_property_readonly("size",
                             [](const PyInstance& s) { return s.poset.size(); })
      .def_property_readonly(
          "has_delta", [](const PyInstance& s) { return s.delta.has_value(); })
      .def("label", [](const PyInstance& s, int a) { return s.poset.label(a); })
      .def("labels",
           [](const PyInstance& s) {
             std::vector<std::string> out;
             for (int a = 0; a < s.poset.size(); ++a)
               out.push_back(s.poset.label(a));
             return out;
           })
      .def("leq",
           [](const PyInstance& s, int a, int b) { return s.poset.leq(a, b); })
      .def("perp", [](const PyInstance& s, int a) { return s.poset.perp(a); })
      .def("delta",
           [](const PyInstance& s, int a, int b) {
             if (!s.delta)
               throw std::invalid_argument("structure has no difference table");
             return s.delta->at(a, b);
           })
      .def("meet",
           [](const PyInstance& s, int a, int b) { return s.poset.meet(a, b); })
      .def("join",
           [](const PyInstance& s, int a, int b) { return s.poset.join(a, b); })
      .def("verify",
           [](const PyInstance& s) {
             py::dict out;
             out["orthoposet"] = report_to_list(verify_orthoposet(s.poset));
             out["orthomodular"] = report_to_list(check_orthomodularity(s.poset));
             if (s.delta) {
               out["difference"] = report_to_list(verify_odp(s.poset, *s.delta));
               out["identities"] = report_to_list(
                   delta_identities_report(s.poset, *s.delta).violations);
             }
             bool ok = true;
             for (auto item : out) ok = ok && py::len(item.second) == 0;
             out["ok"] = ok;
             return out;
           })
      .def("classify",
           [](const PyInstance& s) {
             ClassReport rep = classify(s.poset, s.as_instance().delta);
             py::dict out;
             out["in_R"] = rep.in_r;
             out["in_S"] = std::string(tri_name(rep.in_s));
             out["in_T"] = rep.in_t;
             out["lattice"] = rep.lattice;
             out["boolean"] = rep.boolean;
             if (rep.ideal_count) out["ideal_count"] = *rep.ideal_count;
             if (rep.selective_count)
               out["selective_count"] = *rep.selective_count;
             if (rep.r_witness) out["r_witness"] = *rep.r_witness;
             if (rep.t_witness) out["t_witness"] = *rep.t_witness;
             if (rep.s_witness_pair) out["s_witness_pair"] = *rep.s_witness_pair;
             return out;
           })
      .def("maximal_ideals",
           [](const PyInstance& s) {
             std::vector<std::vector<int>> out;
             for (const Bitset& ideal : enumerate_maximal_ideals(s.poset))
               out.push_back(bitset_indices(ideal));
             return out;
           })
      .def("representation",
           [](const PyInstance& s) {
             Representation rep =
                 representation(s.poset, s.as_instance().delta);
             py::dict out;
             out["q"] = rep.ideals.size();
             out["order_embedding"] = rep.order_embedding;
             out["perp_ok"] = rep.perp_ok;
             out["delta_ok"] = rep.delta_ok;
             std::vector<std::vector<int>> e;
             for (const Bitset& row : rep.e) e.push_back(bitset_indices(row));
             out["e"] = e;
             return out;
           })
      .def("compatible",
           [](const PyInstance& s, int a, int b) {
             return compatible(s.poset, a, b);
           })
      .def("text",
           [](const PyInstance& s) {
             return instance_text(s.poset, s.delta ? &*s.delta : nullptr);
           })
      .def("dot", [](const PyInstance& s) { return to_dot(s.poset); })
      .def("__repr__", [](const PyInstance& s) {
        return "<odplab.Instance of " + std::to_string(s.poset.size()) +
               " elements>";
      });

  m.def("parse", [](const std::string& text) {
    ParsedInstance pi = read_instance_text(text);
    return PyInstance{std::move(pi.poset), std::move(pi.delta)};
  });
  m.def("powerset", [](int n) { return make_instance(powerset_odp(n)); });
  m.def("even_sets", [](int n) { return make_instance(even_sets_odp(n)); });
  m.def("product", [](const PyInstance& a, const PyInstance& b) {
    return make_instance(product_odp(a.as_instance(), b.as_instance()));
  });
  m.def("corpus_names", [] {
    std::vector<std::string> names;
    for (const auto& e : corpus()) names.push_back(e.name);
    return names;
  });
  m.def("corpus_instance", [](const std::string& name) {
    for (const auto& e : corpus())
      if (e.name == name) return make_instance(e.inst);
    throw std::invalid_argument("no corpus instance named '" + name + "'");
  });

  py::class_<EPSet>(m, "EPSet")
      .def_static("parse", &parse_epexpr)
      .def_static("empty", &EPSet::empty)
      .def_static("naturals", &EPSet::naturals)
      .def_static("from_elements", &EPSet::from_elements)
      .def_static("residues", &EPSet::residues)
      .def_property_readonly("period", &EPSet::period)
      .def_property_readonly("threshold", &EPSet::threshold)
      .def("member", &EPSet::member)
      .def("truncate", &EPSet::truncate)
      .def("is_empty", &EPSet::is_empty)
      .def("is_finite", &EPSet::is_finite)
      .def("first_element", &EPSet::first_element)
      .def("literal", &EPSet::literal)
      .def("complement", [](const EPSet& s) { return complement(s); })
      .def("union", [](const EPSet& a, const EPSet& b) { return union_of(a, b); })
      .def("intersect",
           [](const EPSet& a, const EPSet& b) { return intersect(a, b); })
      .def("symdiff",
           [](const EPSet& a, const EPSet& b) { return symdiff(a, b); })
      .def("subset_of",
           [](const EPSet& a, const EPSet& b) { return is_subset(a, b); })
      .def("__or__", [](const EPSet& a, const EPSet& b) { return union_of(a, b); })
      .def("__and__",
           [](const EPSet& a, const EPSet& b) { return intersect(a, b); })
      .def("__xor__",
           [](const EPSet& a, const EPSet& b) { return symdiff(a, b); })
      .def("__invert__", [](const EPSet& s) { return complement(s); })
      .def("__eq__", [](const EPSet& a, const EPSet& b) { return a == b; })
      .def("__ne__", [](const EPSet& a, const EPSet& b) { return a != b; })
      .def("__contains__",
           [](const EPSet& s, std::uint64_t n) { return s.member(n); })
      .def("__repr__", [](const EPSet& s) { return s.literal(); });

  m.def("A1", &ep_A1);
  m.def("A2", &ep_A2);
  m.def("A3", &ep_A3);
  m.def("N", &ep_N);

  py::class_<CosetFamily>(m, "CosetFamily")
      .def_property_readonly("name",
                             [](const CosetFamily& f) { return f.name; })
      .def_property_readonly("base",
                             [](const CosetFamily& f) { return f.base; })
      .def_property_readonly("support",
                             [](const CosetFamily& f) { return f.support; })
      .def("contains",
           [](const CosetFamily& f, const EPSet& x)
               -> std::optional<std::pair<int, EPSet>> {
             auto wit = family_contains(f, x);
             if (!wit) return std::nullopt;
             return std::make_pair(wit->base_index, wit->exceptions);
           })
      .def("has_nonzero_lower_bound",
           [](const CosetFamily& f, const EPSet& s) {
             return has_nonzero_lower_bound(f, s);
           })
      .def("meets_zero",
           [](const CosetFamily& f, const EPSet& a, const EPSet& b) {
             return meets_zero(f, a, b);
           })
      .def("class_r_check",
           [](const CosetFamily& f) {
             RCheckResult res = class_R_check(f);
             py::dict out;
             out["verdict"] = std::string(verdict_name(res.verdict));
             if (res.witness) {
               out["a"] = res.witness->first;
               out["b"] = res.witness->second;
             }
             return out;
           })
      .def(
          "witness_search",
          [](const CosetFamily& f, unsigned bound, const std::string& cls,
             unsigned fragment_cap)
              -> std::optional<std::pair<EPSet, EPSet>> {
            FamilyClass fc;
            if (cls == "R")
              fc = FamilyClass::R;
            else if (cls == "T")
              fc = FamilyClass::T;
            else
              throw std::invalid_argument("class must be 'R' or 'T'");
            SearchOptions opts;
            opts.fragment_cap = fragment_cap;
            auto wit = class_witness_search(f, bound, fc, opts);
            if (!wit) return std::nullopt;
            return std::make_pair(member_value(f, wit->first),
                                  member_value(f, wit->second));
          },
          py::arg("bound"), py::arg("cls"), py::arg("fragment_cap") = 16)
      .def("__repr__", [](const CosetFamily& f) {
        return "<odplab.CosetFamily " + f.name + ">";
      });

  m.def("r_family", &build_r_family);
  m.def("t_family", &build_t_family);
}
