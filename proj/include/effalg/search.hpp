#ifndef EFFALG_SEARCH_HPP
#define EFFALG_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "effalg/axioms.hpp"
#include "effalg/bigint.hpp"
#include "effalg/operation.hpp"

namespace effalg {

inline constexpr std::uint64_t kDefaultOperationCap = 100'000;
inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultTableCap = 1'000'000;

enum class Certificate { Formula, Exhaustive };
enum class SearchStatus { Complete, Undecided };

const char* to_string(Certificate certificate);

struct SearchOptions {
  std::uint64_t cap = kDefaultOperationCap;  // operations materialized per result
  std::uint64_t node_budget = kDefaultNodeBudget;
  unsigned threads = 1;
  // Reject partial assignments that already violate an S4/S5 instance whose
  // values are all known. Off means S4/S5 are checked on complete candidates
  // only; the survivor set is the same either way.
  bool prune_upper_axioms = true;
};

struct SearchResult {
  Shape shape;
  int k;
  BigInt count;  // exact when status is Complete; a lower bound otherwise
  std::optional<std::vector<Operation>> operations;  // present when count <= cap
  Certificate certificate;
  SearchStatus status;
  std::uint64_t nodes = 0;
};

/// #M(u)^(|E_u| - 1).
BigInt count_s1s2(const Shape& u);

/// Closed-form count for prefixes k = 1 (#M(u)^|E_u|) and k = 2.
BigInt count_prefix_formula(const Shape& u, int k);

/// Every (S1)+(S2) operation as a matrix family: M_u = I, each other element
/// takes every matrix of M(u). Elements in canonical order, first slowest.
/// Throws CapExceeded when count_s1s2(u) > cap.
std::vector<Operation> enumerate_s1s2(const Shape& u, std::uint64_t cap = kDefaultOperationCap);

/// All operations on E_u satisfying (S1)..(Sk), k in 1..5.
///
/// k <= 2 is answered by formula (operations listed when within the cap).
/// k >= 3 runs a backtracking search over left translations in canonical
/// element order. Each new row is checked against every assigned row for the
/// two-sided zero condition a o b = 0 <=> b o a = 0; complete candidates are
/// filtered by check_axioms. Node budget exhaustion yields Undecided.
SearchResult enumerate_s1sk(const Shape& u, int k, const SearchOptions& options = {});

enum class Existence { Exists, None, Undecided };

const char* to_string(Existence existence);

struct ExistenceResult {
  Existence verdict;
  std::optional<Operation> witness;
  std::vector<Operation> survivors;  // every (S1)-(S4) operation, when materialized
  BigInt survivor_count;
  Certificate certificate = Certificate::Exhaustive;
  std::uint64_t nodes = 0;
  bool obstruction = false;
};

/// Decides whether E_u carries an (S1)-(S4) operation by exhaustive search.
/// On Boolean shapes the witness is the meet when it survives, otherwise the
/// first survivor. Throws InternalError when a survivor exists despite an
/// obstruction atom.
ExistenceResult exists_s1s4(const Shape& u, const SearchOptions& options = {});

struct B2Entry {
  Operation op;
  // A = p o -, B = q o -; u = A(p), v = A(q), s = B(p), t = B(q).
  Index u, v, s, t;
};

struct B2Classification {
  std::vector<B2Entry> entries;
  std::size_t zero_block = 0;     // v = 0 and s = 0
  std::size_t nonzero_block = 0;  // v != 0 and s != 0
  bool row_pattern = true;        // every entry has 0 o x = 0 and 1 o x = x
  bool cross_zero = true;         // every entry has A(q) = 0 <=> B(p) = 0
};

/// Extracts (A, B) and the block structure from operations on E_(1,1)
/// without judging them.
B2Classification classify_b2_survivors(const std::vector<Operation>& survivors);

/// Classifies the (S1)-(S3) operations on E_(1,1). Throws InternalError when
/// a survivor breaks the row pattern 0 o x = 0, 1 o x = x or the cross-zero
/// condition, or the blocks are not 9 and 25.
B2Classification classify_b2(const SearchOptions& options = {});

struct ChainReport {
  int n;
  BigInt s1s2_count;
  std::size_t s1s2_enumerated;
  std::size_t s1s3_count;
  bool s1s3_is_sigma;
  Existence s1s4;
  Existence s1s5;
  bool s1s5_is_meet;  // the unique (S1)-(S5) survivor equals the meet (n = 1)
};

ChainReport chain_report(int n, const SearchOptions& options = {});

/// Enumerates all N^(N*N) tables and keeps those passing check_axioms(., k).
/// Throws CapExceeded when the table space exceeds `cap`.
std::vector<Operation> full_bruteforce_ops(const AlgebraPtr& algebra, int k,
                                           std::uint64_t cap = kDefaultTableCap);

}  // namespace effalg

#endif  // EFFALG_SEARCH_HPP
