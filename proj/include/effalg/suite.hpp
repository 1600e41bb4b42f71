#ifndef EFFALG_SUITE_HPP
#define EFFALG_SUITE_HPP

#include <functional>
#include <string>
#include <vector>

#include "effalg/search.hpp"

namespace effalg {

/// One row of the reproduction suite.
struct CriterionResult {
  int id = 0;
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::string note;  // e.g. a case reported undecided without failing the row
  double seconds = 0;
  double time_limit = 0;
};

using SearchFn = std::function<SearchResult(const Shape&, int, const SearchOptions&)>;

struct SuiteConfig {
  SearchOptions search;
  /// Structured search used by the rows that count survivors; replaceable so
  /// a deliberately broken search can be shown to turn rows red.
  SearchFn search_fn = [](const Shape& u, int k, const SearchOptions& o) { return enumerate_s1sk(u, k, o); };
  bool enforce_time_limits = true;
};

/// Runs the ten exact reproduction criteria. Each row passes only on exact
/// equality and, when enforced, within its time limit.
std::vector<CriterionResult> run_reference_suite(const SuiteConfig& config = {});

/// Single criterion, 1..10.
CriterionResult run_criterion(int id, const SuiteConfig& config = {});

inline constexpr int kCriterionCount = 10;

}  // namespace effalg

#endif  // EFFALG_SUITE_HPP
