#include "effalg/json_io.hpp"

#include <fstream>

#include "effalg/errors.hpp"

namespace effalg {

namespace {

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("field '") + key + "' has the wrong type: " + e.what());
  }
}

json shape_json(const Shape& s) { return json(std::vector<int>(s.top().begin(), s.top().end())); }

}  // namespace

json table_to_json(const TableAlgebra& t) {
  return json{{"type", "table"}, {"size", t.size}, {"zero", t.zero}, {"one", t.one}, {"sum", t.sum}};
}

json algebra_to_json(const EffectAlgebra& algebra) {
  if (algebra.is_simplicial()) return json{{"type", "simplicial"}, {"u", shape_json(algebra.shape())}};
  return table_to_json(algebra.to_table());
}

TableAlgebra table_from_json(const json& j) {
  TableAlgebra t;
  t.size = get_field<Index>(j, "size");
  t.zero = get_field<Index>(j, "zero");
  t.one = get_field<Index>(j, "one");
  t.sum = get_field<std::vector<std::vector<Index>>>(j, "sum");
  return t;
}

EffectAlgebra algebra_from_json(const json& j) {
  const auto type = get_field<std::string>(j, "type");
  if (type == "simplicial") return EffectAlgebra::simplicial(Shape(get_field<std::vector<int>>(j, "u")));
  if (type == "table") return EffectAlgebra::from_table(table_from_json(j));
  throw InputError("unknown algebra type '" + type + "'");
}

json matrix_to_json(const SubunitalMatrix& m) {
  return json{{"rows", m.row_vectors()}, {"u", shape_json(m.domain())}, {"v", shape_json(m.codomain())}};
}

SubunitalMatrix matrix_from_json(const json& j) {
  return SubunitalMatrix(Shape(get_field<std::vector<int>>(j, "u")), Shape(get_field<std::vector<int>>(j, "v")),
                         get_field<std::vector<RowVec>>(j, "rows"));
}

json operation_table_json(const Operation& op) {
  json rows = json::array();
  for (Index a = 0; a < op.size(); ++a) {
    auto row = op.left_translation(a);
    rows.push_back(std::vector<Index>(row.begin(), row.end()));
  }
  return rows;
}

json operation_to_json(const Operation& op) {
  json out{{"algebra", algebra_to_json(op.algebra())}};
  if (op.representation() == Representation::MatrixFamily) {
    json rows = json::object();
    const auto& ms = op.matrices();
    for (std::size_t a = 0; a < ms.size(); ++a) rows[std::to_string(a)] = ms[a].row_vectors();
    out["rows"] = std::move(rows);
  } else {
    out["table"] = operation_table_json(op);
  }
  return out;
}

Operation operation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("algebra")) throw InputError("operation needs an 'algebra' field");
  auto algebra = make_algebra(algebra_from_json(j.at("algebra")));
  const Index n = algebra->size();
  if (j.contains("table")) {
    auto rows = get_field<std::vector<std::vector<Index>>>(j, "table");
    if (rows.size() != static_cast<std::size_t>(n)) throw InputError("operation table needs N rows");
    std::vector<Index> flat;
    for (const auto& row : rows) {
      if (row.size() != static_cast<std::size_t>(n)) throw InputError("operation table rows need N entries");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return Operation::from_table(std::move(algebra), std::move(flat));
  }
  if (j.contains("rows")) {
    const Shape& u = algebra->shape();
    const json& rows = j.at("rows");
    if (!rows.is_object()) throw InputError("'rows' must map element indices to matrices");
    std::vector<SubunitalMatrix> family;
    for (Index a = 0; a < n; ++a) {
      const auto key = std::to_string(a);
      if (!rows.contains(key)) throw InputError("'rows' lacks element " + key);
      family.emplace_back(u, u, get_field<std::vector<RowVec>>(rows, key.c_str()));
    }
    if (rows.size() != static_cast<std::size_t>(n)) throw InputError("'rows' has unknown element keys");
    return Operation::from_matrices(std::move(algebra), std::move(family));
  }
  throw InputError("operation needs 'table' or 'rows'");
}

json report_to_json(const AxiomReport& report) {
  json out = json::object();
  for (int k = 1; k <= report.upto; ++k) {
    const auto axiom = static_cast<Axiom>(k);
    const auto& w = report.failure(axiom);
    if (!w) {
      out[to_string(axiom)] = "pass";
      continue;
    }
    json witness{{"a", w->a}};
    if (w->b) witness["b"] = *w->b;
    if (w->c) witness["c"] = *w->c;
    out[to_string(axiom)] = json{{"fail", witness}};
  }
  return out;
}

json search_result_to_json(const SearchResult& result, bool include_operations) {
  json out{{"u", shape_json(result.shape)},
           {"k", result.k},
           {"count", to_decimal(result.count)},
           {"certificate", to_string(result.certificate)},
           {"status", result.status == SearchStatus::Complete ? "complete" : "undecided"},
           {"nodes", result.nodes}};
  if (include_operations && result.operations) {
    json ops = json::array();
    for (const auto& op : *result.operations) ops.push_back(operation_table_json(op));
    out["operations"] = std::move(ops);
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace effalg
