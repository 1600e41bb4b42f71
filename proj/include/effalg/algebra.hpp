#ifndef EFFALG_ALGEBRA_HPP
#define EFFALG_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "effalg/shape.hpp"

namespace effalg {

/// A finite partial algebra given by its full sum table; entry kUndefined
/// means the sum does not exist.
struct TableAlgebra {
  Index size = 0;
  Index zero = 0;
  Index one = 0;
  std::vector<std::vector<Index>> sum;
};

enum class TableAxiom { Commutativity, Associativity, Orthosupplement, ZeroOne, Positivity };

const char* to_string(TableAxiom axiom);

struct TableViolation {
  TableAxiom axiom;
  std::vector<Index> witness;
  std::string detail;
};

/// One entry per failing check, in the order the checks run.
struct ValidationReport {
  std::vector<TableViolation> violations;

  bool valid() const noexcept { return violations.empty(); }
  const TableViolation* find(TableAxiom axiom) const;
};

/// Checks commutativity, associativity (definedness included), unique
/// orthosupplements, the zero-one law, and positivity. Throws InputError when
/// the table is malformed (wrong dimensions, indices out of range).
ValidationReport validate_table_algebra(const TableAlgebra& table);

struct AtomRecord {
  Index atom;
  int isotropic_index;
};

/// An immutable finite effect algebra: either a simplicial interval E_u or a
/// validated table algebra.
class EffectAlgebra {
 public:
  static EffectAlgebra simplicial(const Shape& u);
  /// Validates eagerly; throws InputError carrying the first violation.
  static EffectAlgebra from_table(const TableAlgebra& table);

  bool is_simplicial() const noexcept { return shape_.has_value(); }
  /// Throws InputError on table algebras.
  const Shape& shape() const;

  Index size() const noexcept { return size_; }
  Index zero() const noexcept { return zero_; }
  Index one() const noexcept { return one_; }

  Index oplus(Index x, Index y) const;
  bool orthogonal(Index x, Index y) const { return oplus(x, y) != kUndefined; }
  Index complement(Index x) const { return complement_[x]; }
  bool leq(Index x, Index y) const;

  /// Minimal nonzero elements in canonical order, with isotropic indices.
  std::vector<AtomRecord> atoms() const;
  /// Largest n with n-fold x defined. Throws InputError for x = 0.
  int isotropic_index(Index x) const;
  /// Some atom has isotropic index >= 2.
  bool has_obstruction_atom() const;

  TableAlgebra to_table() const;
  std::string describe() const;

  // Coordinate-level access on simplicial algebras.
  Elem elem(Index x) const;
  Index index(const Elem& x) const;
  std::optional<Elem> oplus(const Elem& x, const Elem& y) const;
  Elem complement(const Elem& x) const;
  bool leq(const Elem& x, const Elem& y) const;

 private:
  EffectAlgebra() = default;
  Index simplicial_sum(Index x, Index y) const;
  void check_member(Index x) const;

  std::optional<Shape> shape_;
  Index size_ = 0;
  Index zero_ = 0;
  Index one_ = 0;
  std::vector<Index> dense_sum_;  // size_*size_ when materialized
  std::vector<Index> complement_;
};

/// Result of analysing a table algebra with a single atom.
struct ChainDecomposition {
  Index atom;
  int length;                    // ord(atom)
  std::vector<Index> multiples;  // multiples[k] = k*atom
};

/// For a valid algebra with exactly one atom p, verifies every element is kp
/// for a unique k and returns the chain. Returns nullopt when the number of
/// atoms is not one. Throws InternalError if the decomposition fails.
std::optional<ChainDecomposition> unique_atom_chain(const EffectAlgebra& algebra);

/// Table fixtures.
TableAlgebra mo2_table();
TableAlgebra chain_table(int n);

}  // namespace effalg

#endif  // EFFALG_ALGEBRA_HPP
