#include "effalg/operation.hpp"

#include <algorithm>

#include "effalg/errors.hpp"

namespace effalg {

namespace {

void require_operation_carrier(const EffectAlgebra& algebra) {
  if (algebra.size() > kMaxOperationCarrier) {
    throw CarrierTooLarge("operations are limited to carriers of " +
                          std::to_string(kMaxOperationCarrier) + " elements");
  }
}

}  // namespace

Operation Operation::from_matrices(AlgebraPtr algebra, std::vector<SubunitalMatrix> rows) {
  require_operation_carrier(*algebra);
  const Shape& u = algebra->shape();
  const Index n = algebra->size();
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw InputError("matrix family needs one matrix per element");
  }
  Operation op;
  op.algebra_ = std::move(algebra);
  op.representation_ = Representation::MatrixFamily;
  op.table_.resize(static_cast<std::size_t>(n) * n);
  std::vector<std::vector<int>> coords(n);
  for (Index x = 0; x < n; ++x) coords[x] = u.coords_of(x);
  for (Index a = 0; a < n; ++a) {
    if (rows[a].domain() != u || rows[a].codomain() != u) {
      throw InputError("matrix for element " + std::to_string(a) + " has the wrong shape");
    }
    for (Index x = 0; x < n; ++x) {
      op.table_[static_cast<std::size_t>(a) * n + x] = u.index_of(rows[a].apply(coords[x]));
    }
  }
  op.matrices_ = std::move(rows);
  return op;
}

Operation Operation::from_table(AlgebraPtr algebra, std::vector<Index> table) {
  require_operation_carrier(*algebra);
  const Index n = algebra->size();
  if (table.size() != static_cast<std::size_t>(n) * n) {
    throw InputError("operation table must have N*N entries");
  }
  for (Index v : table) {
    if (v < 0 || v >= n) throw InputError("operation table entry out of range");
  }
  Operation op;
  op.algebra_ = std::move(algebra);
  op.representation_ = Representation::FullTable;
  op.table_ = std::move(table);
  return op;
}

const std::vector<SubunitalMatrix>& Operation::matrices() const {
  if (representation_ != Representation::MatrixFamily) throw InputError("operation has no matrix form");
  return matrices_;
}

Operation sigma_universal(AlgebraPtr algebra) {
  if (algebra->is_simplicial()) {
    const Shape& u = algebra->shape();
    std::vector<SubunitalMatrix> rows(algebra->size(), SubunitalMatrix::identity(u));
    rows[algebra->zero()] = SubunitalMatrix::zero(u, u);
    return Operation::from_matrices(std::move(algebra), std::move(rows));
  }
  const Index n = algebra->size();
  std::vector<Index> table(static_cast<std::size_t>(n) * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] = a == algebra->zero() ? algebra->zero() : b;
  return Operation::from_table(std::move(algebra), std::move(table));
}

Operation tau_perm(const Shape& u, std::span<const int> perm) {
  if (!u.homogeneous() || u.rank() < 2) throw InputError("tau needs a homogeneous shape of rank >= 2");
  const std::size_t r = u.rank();
  if (perm.size() != r) throw InputError("permutation length must equal the rank");
  std::vector<int> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < r; ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) throw InputError("not a permutation of 1..r");
  }
  std::vector<RowVec> p(r, RowVec(r, 0));
  for (std::size_t i = 0; i < r; ++i) p[i][perm[i] - 1] = 1;
  SubunitalMatrix permutation(u, u, std::move(p));

  auto algebra = make_algebra(EffectAlgebra::simplicial(u));
  std::vector<SubunitalMatrix> rows(algebra->size(), permutation);
  rows[algebra->zero()] = SubunitalMatrix::zero(u, u);
  rows[algebra->one()] = SubunitalMatrix::identity(u);
  return Operation::from_matrices(std::move(algebra), std::move(rows));
}

Operation meet_boolean(int rank) {
  if (rank < 1) throw InputError("rank must be >= 1");
  return meet_boolean(make_algebra(EffectAlgebra::simplicial(Shape(std::vector<int>(rank, 1)))));
}

Operation meet_boolean(AlgebraPtr algebra) {
  const Shape& u = algebra->shape();
  if (!u.boolean()) throw InputError("meet is defined here only on E_(1,...,1)");
  std::vector<SubunitalMatrix> rows;
  for (Index a = 0; a < algebra->size(); ++a) {
    auto coords = u.coords_of(a);
    std::vector<RowVec> diag(u.rank(), RowVec(u.rank(), 0));
    for (std::size_t i = 0; i < u.rank(); ++i) diag[i][i] = coords[i];
    rows.emplace_back(u, u, std::move(diag));
  }
  return Operation::from_matrices(std::move(algebra), std::move(rows));
}

RightUnit right_unit_holds(const Operation& op) {
  const Index one = op.algebra().one();
  for (Index a = 0; a < op.size(); ++a) {
    if (op(a, one) != a) return {false, a};
  }
  return {true, std::nullopt};
}

bool commutes(const Operation& op, Index a, Index b) { return op(a, b) == op(b, a); }

Operation to_full_table(const Operation& op) {
  return Operation::from_table(op.algebra_ptr(), std::vector<Index>(op.table().begin(), op.table().end()));
}

std::variant<Operation, NotS1> from_full_table(AlgebraPtr algebra, std::vector<Index> table) {
  // Validate size and range through the table constructor first.
  Operation raw = Operation::from_table(algebra, std::move(table));
  std::vector<SubunitalMatrix> rows;
  for (Index a = 0; a < raw.size(); ++a) {
    auto result = matrix_of_map(*algebra, *algebra, raw.left_translation(a));
    if (auto* bad = std::get_if<NotAdditive>(&result)) return NotS1{a, bad->x, bad->y};
    rows.push_back(std::get<SubunitalMatrix>(std::move(result)));
  }
  return Operation::from_matrices(std::move(algebra), std::move(rows));
}

}  // namespace effalg
