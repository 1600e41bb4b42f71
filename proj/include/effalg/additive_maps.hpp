#ifndef EFFALG_ADDITIVE_MAPS_HPP
#define EFFALG_ADDITIVE_MAPS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "effalg/algebra.hpp"
#include "effalg/bigint.hpp"
#include "effalg/shape.hpp"

namespace effalg {

inline constexpr std::uint64_t kDefaultMatrixCap = 1'000'000;
inline constexpr std::uint64_t kDefaultFunctionCap = 10'000'000;

using RowVec = std::vector<int>;

/// Nonnegative integer s x r matrix M with M u <= v, the coordinate form of
/// an additive map E_u -> E_v. Row-major.
class SubunitalMatrix {
 public:
  /// Throws InputError on wrong dimensions, negative entries, or M u > v.
  SubunitalMatrix(Shape domain, Shape codomain, std::vector<RowVec> rows);

  static SubunitalMatrix identity(const Shape& u);
  static SubunitalMatrix zero(const Shape& u, const Shape& v);

  std::size_t rows() const noexcept { return codomain_.rank(); }
  std::size_t cols() const noexcept { return domain_.rank(); }
  int at(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  std::span<const int> row(std::size_t i) const {
    return std::span<const int>(entries_).subspan(i * cols(), cols());
  }
  std::vector<RowVec> row_vectors() const;

  const Shape& domain() const noexcept { return domain_; }
  const Shape& codomain() const noexcept { return codomain_; }

  std::vector<int> apply(std::span<const int> x) const;

  friend bool operator==(const SubunitalMatrix&, const SubunitalMatrix&) = default;

 private:
  Shape domain_;
  Shape codomain_;
  std::vector<int> entries_;
};

/// M u <= v. Throws InputError on dimension mismatch or negative entries.
bool is_subunital(const std::vector<RowVec>& m, const Shape& u, const Shape& v);

/// All alpha >= 0 with alpha . u <= budget, lexicographic.
std::vector<RowVec> enumerate_rows(const Shape& u, int budget);

/// #{alpha >= 0 : alpha . u <= budget}, by a counting recursion.
BigInt count_rows(const Shape& u, int budget);

/// Number of (u,v)-subunital matrices: prod_i count_rows(u, v_i).
BigInt count_subunital(const Shape& u, const Shape& v);

/// Row-wise Cartesian product of enumerate_rows, last row fastest.
/// Throws CapExceeded when the count is above `cap`.
std::vector<SubunitalMatrix> enumerate_subunital(const Shape& u, const Shape& v,
                                                 std::uint64_t cap = kDefaultMatrixCap);

Elem apply_matrix(const SubunitalMatrix& m, const Elem& x);

/// images[i] = L(element i), canonical domain order.
using MapTable = std::vector<Index>;

/// x -> Mx as a table between the two simplicial algebras.
MapTable map_table(const SubunitalMatrix& m);

/// Every function E_u -> E_v that is additive over all orthogonal pairs,
/// found by a mixed-radix counter over raw image choices (no matrices).
/// Tables come out in lexicographic order. Throws CapExceeded when
/// |E_v|^|E_u| > cap.
std::vector<MapTable> additive_maps_bruteforce(const EffectAlgebra& domain,
                                               const EffectAlgebra& codomain,
                                               std::uint64_t cap = kDefaultFunctionCap);

/// An orthogonal pair (x, y) with L(x + y) != L(x) + L(y).
struct NotAdditive {
  Index x;
  Index y;
};

/// First orthogonal pair violating additivity, in lexicographic order.
std::optional<NotAdditive> additivity_violation(const EffectAlgebra& domain,
                                                const EffectAlgebra& codomain,
                                                std::span<const Index> table);

/// Builds M from the columns L(e_j), then verifies L(x) = Mx everywhere.
std::variant<SubunitalMatrix, NotAdditive> matrix_of_map(const EffectAlgebra& domain,
                                                         const EffectAlgebra& codomain,
                                                         std::span<const Index> table);

/// phi(i) in {0..r}: 0 for a zero row, j for row e_j (1-based). nullopt if
/// some row is neither.
std::optional<std::vector<int>> coordinate_picker(const SubunitalMatrix& m);

}  // namespace effalg

#endif  // EFFALG_ADDITIVE_MAPS_HPP
