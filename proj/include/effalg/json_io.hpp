#ifndef EFFALG_JSON_IO_HPP
#define EFFALG_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "effalg/additive_maps.hpp"
#include "effalg/algebra.hpp"
#include "effalg/axioms.hpp"
#include "effalg/operation.hpp"
#include "effalg/search.hpp"

namespace effalg {

using json = nlohmann::json;

// Algebras: {"type":"simplicial","u":[2,1]} or
// {"type":"table","size":6,"zero":0,"one":5,"sum":[[...],...]} with -1 undefined.
json algebra_to_json(const EffectAlgebra& algebra);
json table_to_json(const TableAlgebra& table);
/// Table algebras are validated; every schema problem is an InputError.
EffectAlgebra algebra_from_json(const json& j);
TableAlgebra table_from_json(const json& j);

// Matrices: {"rows":[[0,1],[1,0]],"u":[1,1],"v":[1,1]}
json matrix_to_json(const SubunitalMatrix& m);
SubunitalMatrix matrix_from_json(const json& j);

// Operations: {"algebra":{...},"table":[[...]]} or
// {"algebra":{...},"rows":{"<element index>":[[matrix rows]], ...}}
json operation_to_json(const Operation& op);
Operation operation_from_json(const json& j);
/// N x N nested array of result indices.
json operation_table_json(const Operation& op);

// {"s1":"pass","s4":{"fail":{"a":i,"b":j,"c":k}}, ...}
json report_to_json(const AxiomReport& report);

// {"u":[1,1],"k":3,"count":"34","certificate":"exhaustive","operations":[...]}
json search_result_to_json(const SearchResult& result, bool include_operations = true);

json read_json_file(const std::string& path);

}  // namespace effalg

#endif  // EFFALG_JSON_IO_HPP
