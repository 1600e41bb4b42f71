#ifndef EFFALG_AXIOMS_HPP
#define EFFALG_AXIOMS_HPP

#include <array>
#include <optional>
#include <string>

#include "effalg/operation.hpp"

namespace effalg {

/// The five axioms of a sequential product, in order.
///
///   S1  b -> a o b is additive
///   S2  1 o a = a
///   S3  a o b = 0  implies  b o a = 0
///   S4  a | b  implies  a | b'  and  a o (b o c) = (a o b) o c for every c
///   S5  c | a and c | b  imply  c | (a o b), and c | (a + b) when a, b orthogonal
///
/// where a | b means a o b = b o a.
enum class Axiom { S1 = 1, S2, S3, S4, S5 };

const char* to_string(Axiom axiom);

/// The violating tuple. S2 uses only `a`; S3 and the first S4 clause use
/// (a, b); S1, the associativity clause of S4, and S5 use (a, b, c).
struct Witness {
  Index a;
  std::optional<Index> b;
  std::optional<Index> c;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct AxiomReport {
  int upto = 0;
  std::array<std::optional<Witness>, 5> failures{};

  bool checked(Axiom axiom) const noexcept { return static_cast<int>(axiom) <= upto; }
  bool passes(Axiom axiom) const noexcept {
    return checked(axiom) && !failures[static_cast<int>(axiom) - 1];
  }
  const std::optional<Witness>& failure(Axiom axiom) const {
    return failures[static_cast<int>(axiom) - 1];
  }
  bool all_pass() const noexcept;
};

/// Checks S1..S`upto` exhaustively. Each axiom stops at its lexicographically
/// least violation; every axiom up to `upto` is evaluated.
AxiomReport check_axioms(const Operation& op, int upto);

/// True when re-evaluating `witness` against `op` shows the axiom failing.
bool replay_violation(const Operation& op, Axiom axiom, const Witness& witness);

}  // namespace effalg

#endif  // EFFALG_AXIOMS_HPP
