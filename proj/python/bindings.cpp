#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "effalg/errors.hpp"
#include "effalg/json_io.hpp"
#include "effalg/search.hpp"
#include "effalg/suite.hpp"

namespace py = pybind11;
using namespace effalg;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::str(to_decimal(v))); }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(e.what());
  }
}

AlgebraPtr algebra_of(const std::vector<int>& u) { return make_algebra(EffectAlgebra::simplicial(Shape(u))); }

SearchOptions options(std::uint64_t cap, std::uint64_t node_budget, unsigned threads) {
  SearchOptions o;
  o.cap = cap;
  o.node_budget = node_budget;
  o.threads = threads;
  return o;
}

py::dict report_dict(const AxiomReport& report) {
  py::dict out;
  for (int k = 1; k <= report.upto; ++k) {
    const auto axiom = static_cast<Axiom>(k);
    const auto& w = report.failure(axiom);
    if (!w) {
      out[to_string(axiom)] = py::none();
      continue;
    }
    py::list tuple;
    tuple.append(w->a);
    if (w->b) tuple.append(*w->b);
    if (w->c) tuple.append(*w->c);
    out[to_string(axiom)] = py::tuple(tuple);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_effalg, m) {
  m.doc() = "Finite effect algebras, subunital matrices and sequential-product axioms";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<InputError>(m, "InputError", error.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", error.ptr());
  py::register_exception<CarrierTooLarge>(m, "CarrierTooLarge", error.ptr());
  py::register_exception<InternalError>(m, "InternalError", error.ptr());

  py::class_<EffectAlgebra, std::shared_ptr<EffectAlgebra>>(m, "EffectAlgebra")
      .def_static("simplicial", [](const std::vector<int>& u) { return EffectAlgebra::simplicial(Shape(u)); },
                  py::arg("u"))
      .def_static("from_json", [](const std::string& text) { return algebra_from_json(parse_json(text)); })
      .def_static("mo2", [] { return EffectAlgebra::from_table(mo2_table()); })
      .def_static("chain", [](int n) { return EffectAlgebra::from_table(chain_table(n)); }, py::arg("n"))
      .def_property_readonly("size", &EffectAlgebra::size)
      .def_property_readonly("zero", &EffectAlgebra::zero)
      .def_property_readonly("one", &EffectAlgebra::one)
      .def_property_readonly("is_simplicial", &EffectAlgebra::is_simplicial)
      .def("oplus",
           [](const EffectAlgebra& e, Index x, Index y) -> std::optional<Index> {
             const Index s = e.oplus(x, y);
             if (s == kUndefined) return std::nullopt;
             return s;
           })
      .def("complement", py::overload_cast<Index>(&EffectAlgebra::complement, py::const_))
      .def("leq", py::overload_cast<Index, Index>(&EffectAlgebra::leq, py::const_))
      .def("coords", [](const EffectAlgebra& e, Index x) { return e.elem(x).coords; })
      .def("atoms",
           [](const EffectAlgebra& e) {
             std::vector<std::pair<Index, int>> out;
             for (const auto& a : e.atoms()) out.emplace_back(a.atom, a.isotropic_index);
             return out;
           })
      .def("isotropic_index", &EffectAlgebra::isotropic_index)
      .def("has_obstruction_atom", &EffectAlgebra::has_obstruction_atom)
      .def("unique_atom_chain_length",
           [](const EffectAlgebra& e) -> std::optional<int> {
             auto chain = unique_atom_chain(e);
             if (!chain) return std::nullopt;
             return chain->length;
           })
      .def("to_json", [](const EffectAlgebra& e) { return algebra_to_json(e).dump(); })
      .def("__repr__", &EffectAlgebra::describe);

  py::class_<Operation>(m, "Operation")
      .def_property_readonly("size", &Operation::size)
      .def("__call__", &Operation::operator())
      .def("table",
           [](const Operation& op) {
             std::vector<std::vector<Index>> rows;
             for (Index a = 0; a < op.size(); ++a) {
               auto row = op.left_translation(a);
               rows.emplace_back(row.begin(), row.end());
             }
             return rows;
           })
      .def("check", [](const Operation& op, int upto) { return report_dict(check_axioms(op, upto)); },
           py::arg("upto") = 5)
      .def("right_unit", [](const Operation& op) { return right_unit_holds(op).holds; })
      .def("commutes", &commutes)
      .def("same_table", &Operation::same_table)
      .def("to_json", [](const Operation& op) { return operation_to_json(op).dump(); })
      .def_static("from_json", [](const std::string& text) { return operation_from_json(parse_json(text)); });

  m.def("sigma", [](const std::vector<int>& u) { return sigma_universal(algebra_of(u)); }, py::arg("u"));
  m.def("meet", [](int rank) { return meet_boolean(rank); }, py::arg("rank"));
  m.def("tau", [](const std::vector<int>& u, const std::vector<int>& perm) { return tau_perm(Shape(u), perm); },
        py::arg("u"), py::arg("perm"));

  m.def("count_subunital",
        [](const std::vector<int>& u, std::optional<std::vector<int>> v) {
          return to_py(count_subunital(Shape(u), Shape(v ? *v : u)));
        },
        py::arg("u"), py::arg("v") = py::none());
  m.def("subunital_matrices",
        [](const std::vector<int>& u, std::optional<std::vector<int>> v, std::uint64_t cap) {
          std::vector<std::vector<RowVec>> out;
          for (const auto& mat : enumerate_subunital(Shape(u), Shape(v ? *v : u), cap))
            out.push_back(mat.row_vectors());
          return out;
        },
        py::arg("u"), py::arg("v") = py::none(), py::arg("cap") = kDefaultMatrixCap);
  m.def("count_s1s2", [](const std::vector<int>& u) { return to_py(count_s1s2(Shape(u))); }, py::arg("u"));

  m.def("enumerate",
        [](const std::vector<int>& u, int k, std::uint64_t cap, std::uint64_t node_budget, unsigned threads) {
          std::optional<SearchResult> found;
          {
            py::gil_scoped_release release;
            found = enumerate_s1sk(Shape(u), k, options(cap, node_budget, threads));
          }
          const SearchResult& r = *found;
          py::dict out;
          out["count"] = to_py(r.count);
          out["complete"] = r.status == SearchStatus::Complete;
          out["certificate"] = to_string(r.certificate);
          out["nodes"] = r.nodes;
          if (r.operations) out["operations"] = py::cast(*r.operations);
          else out["operations"] = py::none();
          return out;
        },
        py::arg("u"), py::arg("k"), py::arg("cap") = kDefaultOperationCap,
        py::arg("node_budget") = kDefaultNodeBudget, py::arg("threads") = 1);

  m.def("exists_s1s4",
        [](const std::vector<int>& u, std::uint64_t node_budget) {
          SearchOptions o;
          o.node_budget = node_budget;
          return std::string(to_string(exists_s1s4(Shape(u), o).verdict));
        },
        py::arg("u"), py::arg("node_budget") = kDefaultNodeBudget);

  m.def("verify_suite", [] {
    std::vector<CriterionResult> rows;
    {
      py::gil_scoped_release release;
      rows = run_reference_suite();
    }
    py::list out;
    for (const auto& row : rows) {
      py::dict d;
      d["id"] = row.id;
      d["name"] = row.name;
      d["expected"] = row.expected;
      d["actual"] = row.actual;
      d["pass"] = row.pass;
      d["note"] = row.note;
      d["seconds"] = row.seconds;
      out.append(d);
    }
    return out;
  });
}
