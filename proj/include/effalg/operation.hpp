#ifndef EFFALG_OPERATION_HPP
#define EFFALG_OPERATION_HPP

#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "effalg/additive_maps.hpp"
#include "effalg/algebra.hpp"

namespace effalg {

using AlgebraPtr = std::shared_ptr<const EffectAlgebra>;

inline AlgebraPtr make_algebra(EffectAlgebra algebra) {
  return std::make_shared<const EffectAlgebra>(std::move(algebra));
}

/// Largest carrier for which operations are materialized.
inline constexpr Index kMaxOperationCarrier = 4096;

enum class Representation { MatrixFamily, FullTable };

/// A total binary operation a o b on a finite effect algebra.
///
/// MatrixFamily operations live on simplicial algebras and store one
/// u-subunital matrix per left translation; their value table is computed by
/// matrix application. FullTable operations store the N x N table directly.
class Operation {
 public:
  /// rows[a] is the matrix of x -> a o x. Throws InputError on mismatch.
  static Operation from_matrices(AlgebraPtr algebra, std::vector<SubunitalMatrix> rows);
  /// table[a * N + b] = a o b. Throws InputError on bad size or entries.
  static Operation from_table(AlgebraPtr algebra, std::vector<Index> table);

  Representation representation() const noexcept { return representation_; }
  const EffectAlgebra& algebra() const noexcept { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  Index size() const noexcept { return algebra_->size(); }

  Index operator()(Index a, Index b) const {
    return table_[static_cast<std::size_t>(a) * algebra_->size() + b];
  }
  std::span<const Index> table() const noexcept { return table_; }
  std::span<const Index> left_translation(Index a) const {
    return std::span<const Index>(table_).subspan(static_cast<std::size_t>(a) * size(), size());
  }
  /// Throws InputError on FullTable operations.
  const std::vector<SubunitalMatrix>& matrices() const;

  bool same_table(const Operation& other) const { return table_ == other.table_; }

 private:
  Operation() = default;

  AlgebraPtr algebra_;
  Representation representation_ = Representation::FullTable;
  std::vector<SubunitalMatrix> matrices_;
  std::vector<Index> table_;
};

/// a o b = 0 if a = 0, else b.
Operation sigma_universal(AlgebraPtr algebra);

/// On E_(n,...,n): 0 at a = 0, identity at a = u, x -> Px otherwise.
/// `perm` is 1-based: (Px)_i = x_{perm[i]}.
Operation tau_perm(const Shape& u, std::span<const int> perm);

/// Componentwise minimum on E_(1,...,1) of rank r.
Operation meet_boolean(int rank);
/// Same, for a Boolean algebra built elsewhere. Throws InputError otherwise.
Operation meet_boolean(AlgebraPtr algebra);

struct RightUnit {
  bool holds;
  std::optional<Index> witness;  // least a with a o 1 != a
};

RightUnit right_unit_holds(const Operation& op);

bool commutes(const Operation& op, Index a, Index b);

Operation to_full_table(const Operation& op);

/// Left translation `row` is not additive; (x, y) is the least witness pair.
struct NotS1 {
  Index row;
  Index x;
  Index y;
};

/// Recovers the matrix family of an (S1) table on a simplicial algebra.
std::variant<Operation, NotS1> from_full_table(AlgebraPtr algebra, std::vector<Index> table);

}  // namespace effalg

#endif  // EFFALG_OPERATION_HPP
