// ea: command-line front end for the effect-algebra workbench.
//
// Machine-readable JSON goes to stdout for every exit code; summaries and
// diagnostics go to stderr.
//
// Exit codes: 0 success, 1 a check or verification failed, 2 malformed
// input, 3 cap or node budget exceeded.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "effalg/errors.hpp"
#include "effalg/json_io.hpp"
#include "effalg/search.hpp"
#include "effalg/suite.hpp"

namespace {

using namespace effalg;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Globals {
  unsigned threads = 1;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

int fail_with(int code, const std::string& kind, const std::string& message, json extra = json::object()) {
  extra["error"] = message;
  extra["kind"] = kind;
  emit(extra);
  std::cerr << "ea: " << message << '\n';
  return code;
}

SearchOptions search_options(const Globals& g, std::uint64_t cap) {
  SearchOptions o;
  o.threads = g.threads;
  o.node_budget = g.node_budget;
  o.cap = cap;
  return o;
}

int axioms_to_k(const std::string& axioms) {
  if (axioms == "s1") return 1;
  if (axioms == "s1s2") return 2;
  if (axioms == "s1s3") return 3;
  if (axioms == "s1s4") return 4;
  if (axioms == "s1s5") return 5;
  throw InputError("unknown axiom prefix '" + axioms + "' (expected s1s2, s1s3, s1s4 or s1s5)");
}

std::vector<int> parse_permutation(const std::string& text) {
  const Shape parsed = parse_shape(text);  // positive comma-separated integers
  return {parsed.top().begin(), parsed.top().end()};
}

AlgebraPtr load_algebra(const std::string& file, const std::string& u) {
  if (!file.empty() && !u.empty()) throw InputError("give either an algebra file or --u, not both");
  if (!file.empty()) return make_algebra(algebra_from_json(read_json_file(file)));
  if (!u.empty()) return make_algebra(EffectAlgebra::simplicial(parse_shape(u)));
  throw InputError("an algebra is required (--u or a file)");
}

json elem_json(const EffectAlgebra& algebra, Index x) {
  if (algebra.is_simplicial()) return algebra.elem(x).coords;
  return x;
}

int cmd_algebra(const std::string& u, const std::string& file, bool full) {
  auto algebra = load_algebra(file, u);
  json out{{"size", algebra->size()}, {"zero", algebra->zero()}, {"one", algebra->one()},
           {"simplicial", algebra->is_simplicial()}};
  if (algebra->is_simplicial()) {
    json elements = json::array();
    for (Index x = 0; x < algebra->size(); ++x) elements.push_back(elem_json(*algebra, x));
    out["elements"] = std::move(elements);
  }
  json atoms = json::array();
  for (const auto& a : algebra->atoms()) {
    atoms.push_back({{"atom", a.atom}, {"element", elem_json(*algebra, a.atom)}, {"isotropic_index", a.isotropic_index}});
  }
  out["atoms"] = std::move(atoms);
  out["obstruction"] = algebra->has_obstruction_atom();
  auto chain = unique_atom_chain(*algebra);
  out["unique_atom_chain"] = chain ? json(chain->length) : json(nullptr);
  if (full) out["algebra"] = algebra_to_json(*algebra);
  emit(out);
  std::cerr << algebra->describe() << ": " << algebra->size() << " elements, " << out["atoms"].size()
            << " atoms, obstruction " << (out["obstruction"].get<bool>() ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_matrices(const std::string& u_text, const std::string& v_text, bool count_only, std::uint64_t cap) {
  const Shape u = parse_shape(u_text);
  const Shape v = v_text.empty() ? u : parse_shape(v_text);
  const BigInt count = count_subunital(u, v);
  std::cerr << "(u,v)-subunital matrices for u=" << u.to_string() << ", v=" << v.to_string() << ": "
            << count << '\n';
  if (count_only) {
    emit({{"count", to_decimal(count)}});
    return kExitOk;
  }
  json matrices = json::array();
  for (const auto& m : enumerate_subunital(u, v, cap)) matrices.push_back(matrix_to_json(m));
  emit({{"count", to_decimal(count)}, {"matrices", std::move(matrices)}});
  return kExitOk;
}

int cmd_count(const std::string& u_text, const std::string& axioms) {
  const Shape u = parse_shape(u_text);
  const int k = axioms_to_k(axioms);
  if (k > 2) throw InputError("closed-form counts exist for s1 and s1s2; use 'enumerate' for higher prefixes");
  const BigInt count = count_prefix_formula(u, k);
  std::cerr << axioms << " operations on E_" << u.to_string() << ": " << count << '\n';
  emit({{"count", to_decimal(count)}});
  return kExitOk;
}

int cmd_enumerate(const Globals& g, const std::string& u_text, const std::string& axioms, bool count_only,
                  std::uint64_t cap, const std::string& out_path) {
  const Shape u = parse_shape(u_text);
  const int k = axioms_to_k(axioms);
  auto options = search_options(g, count_only && k <= 2 ? 0 : cap);
  auto result = enumerate_s1sk(u, k, options);
  std::cerr << axioms << " on E_" << u.to_string() << ": " << result.count << " operations ("
            << to_string(result.certificate) << ", " << result.nodes << " nodes)\n";
  if (result.status == SearchStatus::Undecided) {
    return fail_with(kExitBudget, "budget", "node budget exhausted; result undecided",
                     {{"status", "undecided"}, {"count_lower_bound", to_decimal(result.count)}});
  }
  if (count_only) {
    emit({{"count", to_decimal(result.count)}});
    return kExitOk;
  }
  if (!result.operations) {
    return fail_with(kExitBudget, "cap",
                     "operation count " + to_decimal(result.count) + " exceeds cap " + std::to_string(cap),
                     {{"count", to_decimal(result.count)}});
  }
  json full = search_result_to_json(result, true);
  if (out_path.empty()) {
    emit(full);
    return kExitOk;
  }
  std::ofstream file(out_path);
  if (!file) throw InputError("cannot write '" + out_path + "'");
  file << full.dump() << '\n';
  json summary = search_result_to_json(result, false);
  summary["out"] = out_path;
  emit(summary);
  return kExitOk;
}

Operation resolve_operation(const std::string& spec, const std::string& algebra_file, const std::string& u) {
  const bool named = spec == "sigma" || spec == "meet" || spec.rfind("tau:", 0) == 0;
  if (!named) {
    auto op = operation_from_json(read_json_file(spec));
    if (!algebra_file.empty() || !u.empty()) {
      auto given = load_algebra(algebra_file, u);
      if (algebra_to_json(*given) != algebra_to_json(op.algebra())) {
        throw InputError("operation file is defined on a different algebra");
      }
    }
    return op;
  }
  auto algebra = load_algebra(algebra_file, u);
  if (spec == "sigma") return sigma_universal(algebra);
  if (spec == "meet") return meet_boolean(algebra);
  if (!algebra->is_simplicial()) throw InputError("tau needs a simplicial algebra");
  return tau_perm(algebra->shape(), parse_permutation(spec.substr(4)));
}

int cmd_check(const std::string& algebra_file, const std::string& u, const std::string& op_spec, int upto) {
  auto op = resolve_operation(op_spec, algebra_file, u);
  auto report = check_axioms(op, upto);
  emit(report_to_json(report));
  for (int k = 1; k <= upto; ++k) {
    const auto axiom = static_cast<Axiom>(k);
    std::cerr << to_string(axiom) << ": " << (report.passes(axiom) ? "pass" : "FAIL") << '\n';
  }
  return report.all_pass() ? kExitOk : kExitFailed;
}

int cmd_verify(const Globals& g, const std::string& suite, bool as_json) {
  if (suite != "paper") throw InputError("unknown suite '" + suite + "'");
  SuiteConfig config;
  config.search = search_options(g, kDefaultOperationCap);
  auto rows = run_reference_suite(config);
  int failed = 0;
  json list = json::array();
  for (const auto& row : rows) {
    failed += !row.pass;
    std::cerr << (row.pass ? "PASS " : "FAIL ") << std::setw(2) << row.id << "  " << row.name << "  ["
              << std::fixed << std::setprecision(3) << row.seconds << "s]\n"
              << "        expected: " << row.expected << "\n"
              << "        actual:   " << row.actual << '\n';
    if (!row.note.empty()) std::cerr << "        note:     " << row.note << '\n';
    list.push_back({{"id", row.id}, {"name", row.name}, {"expected", row.expected}, {"actual", row.actual},
                    {"pass", row.pass}, {"note", row.note}});
  }
  json out{{"suite", suite}, {"passed", static_cast<int>(rows.size()) - failed}, {"failed", failed}};
  if (as_json) out["rows"] = std::move(list);
  emit(out);
  return failed ? kExitFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite effect-algebra workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads for searches")->check(CLI::Range(1u, 256u));
  app.add_option("--node-budget", g.node_budget, "Search node budget");

  std::string u, v, file, axioms, op_spec, out_path, suite;
  bool as_json = false, count_only = false;
  std::uint64_t cap = 0;
  int upto = 0;

  auto* algebra_cmd = app.add_subcommand("algebra", "Elements, atoms, isotropic indices, obstruction flag");
  algebra_cmd->add_option("--u", u, "Shape, e.g. 2,1");
  algebra_cmd->add_option("--file", file, "Algebra JSON file");
  algebra_cmd->add_flag("--json", as_json, "Include the full algebra JSON");

  auto* matrices_cmd = app.add_subcommand("matrices", "Enumerate (u,v)-subunital matrices");
  matrices_cmd->add_option("--u", u)->required();
  matrices_cmd->add_option("--v", v);
  matrices_cmd->add_flag("--count-only", count_only);
  auto* matrix_cap = matrices_cmd->add_option("--cap", cap)->default_val(kDefaultMatrixCap);

  auto* count_cmd = app.add_subcommand("count", "Closed-form operation counts");
  count_cmd->add_option("--u", u)->required();
  count_cmd->add_option("--axioms", axioms)->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate operations satisfying an axiom prefix");
  enumerate_cmd->add_option("--u", u)->required();
  enumerate_cmd->add_option("--axioms", axioms)->required();
  enumerate_cmd->add_flag("--count-only", count_only);
  auto* op_cap = enumerate_cmd->add_option("--cap", cap)->default_val(kDefaultOperationCap);
  enumerate_cmd->add_option("--out", out_path);

  auto* check_cmd = app.add_subcommand("check", "Check axioms S1..Sk for an operation");
  check_cmd->add_option("--algebra", file, "Algebra JSON file");
  check_cmd->add_option("--u", u);
  check_cmd->add_option("--op", op_spec, "Operation file, sigma, meet or tau:<perm>")->required();
  check_cmd->add_option("--upto", upto)->required()->check(CLI::Range(1, 5));

  auto* verify_cmd = app.add_subcommand("verify", "Run the reproduction suite");
  verify_cmd->add_option("--suite", suite)->required();
  verify_cmd->add_flag("--json", as_json);
  (void)matrix_cap;
  (void)op_cap;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cerr << app.help();
    emit({{"help", true}});
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return fail_with(kExitInput, "usage", e.what());
  }

  try {
    if (*algebra_cmd) return cmd_algebra(u, file, as_json);
    if (*matrices_cmd) return cmd_matrices(u, v, count_only, cap);
    if (*count_cmd) return cmd_count(u, axioms);
    if (*enumerate_cmd) return cmd_enumerate(g, u, axioms, count_only, cap, out_path);
    if (*check_cmd) return cmd_check(file, u, op_spec, upto);
    if (*verify_cmd) return cmd_verify(g, suite, as_json);
  } catch (const CapExceeded& e) {
    return fail_with(kExitBudget, "cap", e.what(), {{"count", e.count()}});
  } catch (const CarrierTooLarge& e) {
    return fail_with(kExitBudget, "cap", e.what());
  } catch (const InputError& e) {
    return fail_with(kExitInput, "input", e.what());
  } catch (const InternalError& e) {
    return fail_with(kExitFailed, "internal", e.what());
  }
  return kExitInput;
}
