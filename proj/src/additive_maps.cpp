#include "effalg/additive_maps.hpp"

#include <map>
#include <utility>

#include "effalg/errors.hpp"

namespace effalg {

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt square = base;
  while (exponent) {
    if (exponent & 1) result *= square;
    exponent >>= 1;
    if (exponent) square *= square;
  }
  return result;
}

namespace {

std::vector<int> flatten(const std::vector<RowVec>& rows, std::size_t cols) {
  std::vector<int> flat;
  flat.reserve(rows.size() * cols);
  for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

void check_dimensions(const std::vector<RowVec>& m, const Shape& u, const Shape& v) {
  if (m.size() != v.rank()) {
    throw InputError("matrix has " + std::to_string(m.size()) + " rows, codomain rank is " +
                     std::to_string(v.rank()));
  }
  for (const auto& row : m) {
    if (row.size() != u.rank()) throw InputError("matrix row length does not match domain rank");
    for (int entry : row) {
      if (entry < 0) throw InputError("matrix entries must be nonnegative");
    }
  }
}

void enumerate_rows_from(const Shape& u, std::size_t i, long long remaining, RowVec& alpha,
                         std::vector<RowVec>& out) {
  if (i == u.rank()) {
    out.push_back(alpha);
    return;
  }
  for (int k = 0; static_cast<long long>(k) * u[i] <= remaining; ++k) {
    alpha[i] = k;
    enumerate_rows_from(u, i + 1, remaining - static_cast<long long>(k) * u[i], alpha, out);
  }
  alpha[i] = 0;
}

}  // namespace

SubunitalMatrix::SubunitalMatrix(Shape domain, Shape codomain, std::vector<RowVec> rows)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (!is_subunital(rows, domain_, codomain_)) {
    throw InputError("matrix is not subunital: M u exceeds v");
  }
  entries_ = flatten(rows, domain_.rank());
}

SubunitalMatrix SubunitalMatrix::identity(const Shape& u) {
  std::vector<RowVec> rows(u.rank(), RowVec(u.rank(), 0));
  for (std::size_t i = 0; i < u.rank(); ++i) rows[i][i] = 1;
  return SubunitalMatrix(u, u, std::move(rows));
}

SubunitalMatrix SubunitalMatrix::zero(const Shape& u, const Shape& v) {
  return SubunitalMatrix(u, v, std::vector<RowVec>(v.rank(), RowVec(u.rank(), 0)));
}

std::vector<RowVec> SubunitalMatrix::row_vectors() const {
  std::vector<RowVec> out;
  for (std::size_t i = 0; i < rows(); ++i) out.emplace_back(row(i).begin(), row(i).end());
  return out;
}

std::vector<int> SubunitalMatrix::apply(std::span<const int> x) const {
  if (x.size() != cols()) throw InputError("vector length does not match matrix columns");
  std::vector<int> y(rows(), 0);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) y[i] += at(i, j) * x[j];
  return y;
}

bool is_subunital(const std::vector<RowVec>& m, const Shape& u, const Shape& v) {
  check_dimensions(m, u, v);
  for (std::size_t i = 0; i < m.size(); ++i) {
    long long dot = 0;
    for (std::size_t j = 0; j < u.rank(); ++j) dot += static_cast<long long>(m[i][j]) * u[j];
    if (dot > v[i]) return false;
  }
  return true;
}

std::vector<RowVec> enumerate_rows(const Shape& u, int budget) {
  std::vector<RowVec> out;
  if (budget < 0) return out;
  RowVec alpha(u.rank(), 0);
  enumerate_rows_from(u, 0, budget, alpha, out);
  return out;
}

BigInt count_rows(const Shape& u, int budget) {
  if (budget < 0) return 0;
  // ways(i, b) = number of (alpha_i, ..., alpha_r) with sum_{j>=i} alpha_j u_j <= b.
  std::map<std::pair<std::size_t, long long>, BigInt> memo;
  auto ways = [&](auto&& self, std::size_t i, long long b) -> BigInt {
    if (i == u.rank()) return 1;
    auto key = std::make_pair(i, b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = 0;
    for (long long rest = b; rest >= 0; rest -= u[i]) total += self(self, i + 1, rest);
    memo.emplace(key, total);
    return total;
  };
  return ways(ways, 0, budget);
}

BigInt count_subunital(const Shape& u, const Shape& v) {
  BigInt total = 1;
  for (std::size_t i = 0; i < v.rank(); ++i) total *= count_rows(u, v[i]);
  return total;
}

std::vector<SubunitalMatrix> enumerate_subunital(const Shape& u, const Shape& v, std::uint64_t cap) {
  BigInt count = count_subunital(u, v);
  if (count > cap) {
    throw CapExceeded("subunital matrix count " + to_decimal(count) + " exceeds cap " +
                          std::to_string(cap),
                      to_decimal(count));
  }
  std::vector<std::vector<RowVec>> choices;
  for (std::size_t i = 0; i < v.rank(); ++i) choices.push_back(enumerate_rows(u, v[i]));

  std::vector<SubunitalMatrix> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<std::size_t> pick(v.rank(), 0);
  for (;;) {
    std::vector<RowVec> rows;
    for (std::size_t i = 0; i < v.rank(); ++i) rows.push_back(choices[i][pick[i]]);
    out.emplace_back(u, v, std::move(rows));
    std::size_t i = v.rank();
    while (i > 0) {
      --i;
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
  }
}

Elem apply_matrix(const SubunitalMatrix& m, const Elem& x) {
  if (!m.domain().contains(x.coords)) throw InputError("element is not in the matrix domain");
  return Elem{m.apply(x.coords)};
}

MapTable map_table(const SubunitalMatrix& m) {
  m.domain().require_carrier_limit();
  const auto n = static_cast<Index>(m.domain().carrier_size());
  MapTable table(n);
  for (Index x = 0; x < n; ++x) table[x] = m.codomain().index_of(m.apply(m.domain().coords_of(x)));
  return table;
}

std::optional<NotAdditive> additivity_violation(const EffectAlgebra& domain,
                                                const EffectAlgebra& codomain,
                                                std::span<const Index> table) {
  for (Index x = 0; x < domain.size(); ++x) {
    for (Index y = 0; y < domain.size(); ++y) {
      Index s = domain.oplus(x, y);
      if (s == kUndefined) continue;
      if (table[s] != codomain.oplus(table[x], table[y])) return NotAdditive{x, y};
    }
  }
  return std::nullopt;
}

std::vector<MapTable> additive_maps_bruteforce(const EffectAlgebra& domain,
                                               const EffectAlgebra& codomain, std::uint64_t cap) {
  const Index n = domain.size();
  const Index m = codomain.size();
  BigInt space = pow(BigInt(m), static_cast<std::uint64_t>(n));
  if (space > cap) {
    throw CapExceeded("function space " + to_decimal(space) + " exceeds cap " + std::to_string(cap),
                      to_decimal(space));
  }

  std::vector<std::pair<Index, Index>> pairs;  // orthogonal (x, y) with their sum
  std::vector<Index> sums;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (Index s = domain.oplus(x, y); s != kUndefined) {
        pairs.emplace_back(x, y);
        sums.push_back(s);
      }

  std::vector<MapTable> out;
  MapTable images(n, 0);
  for (;;) {
    bool additive = true;
    for (std::size_t k = 0; k < pairs.size() && additive; ++k) {
      additive = images[sums[k]] == codomain.oplus(images[pairs[k].first], images[pairs[k].second]);
    }
    if (additive) out.push_back(images);
    Index i = n;
    while (i > 0) {
      --i;
      if (++images[i] < m) break;
      images[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::variant<SubunitalMatrix, NotAdditive> matrix_of_map(const EffectAlgebra& domain,
                                                         const EffectAlgebra& codomain,
                                                         std::span<const Index> table) {
  const Shape& u = domain.shape();
  const Shape& v = codomain.shape();
  if (table.size() != static_cast<std::size_t>(domain.size())) {
    throw InputError("map table must list one image per domain element");
  }
  for (Index image : table) {
    if (image < 0 || image >= codomain.size()) throw InputError("map image out of range");
  }

  auto fail = [&]() -> std::variant<SubunitalMatrix, NotAdditive> {
    if (auto witness = additivity_violation(domain, codomain, table)) return *witness;
    throw InternalError("map is additive but not of the form x -> Mx");
  };

  std::vector<RowVec> rows(v.rank(), RowVec(u.rank(), 0));
  for (std::size_t j = 0; j < u.rank(); ++j) {
    std::vector<int> basis(u.rank(), 0);
    basis[j] = 1;
    auto column = v.coords_of(table[u.index_of(basis)]);
    for (std::size_t i = 0; i < v.rank(); ++i) rows[i][j] = column[i];
  }
  if (!is_subunital(rows, u, v)) return fail();
  SubunitalMatrix matrix(u, v, std::move(rows));
  for (Index x = 0; x < domain.size(); ++x) {
    if (table[x] != v.index_of(matrix.apply(u.coords_of(x)))) return fail();
  }
  return matrix;
}

std::optional<std::vector<int>> coordinate_picker(const SubunitalMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("coordinate pickers are square");
  std::vector<int> phi(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int ones = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      int entry = m.at(i, j);
      if (entry > 1) return std::nullopt;
      if (entry == 1) {
        ++ones;
        phi[i] = static_cast<int>(j) + 1;
      }
    }
    if (ones > 1) return std::nullopt;
  }
  return phi;
}

}  // namespace effalg
