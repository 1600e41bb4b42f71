#include "effalg/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "effalg/errors.hpp"

namespace effalg {

namespace {

constexpr Index kDenseLimit = 1024;
constexpr Index kTableExportLimit = 4096;

Index lookup(const TableAlgebra& t, Index x, Index y) { return t.sum[x][y]; }

Index sum_or_undefined(const TableAlgebra& t, Index x, Index y) {
  if (x == kUndefined || y == kUndefined) return kUndefined;
  return lookup(t, x, y);
}

void check_well_formed(const TableAlgebra& t) {
  if (t.size < 2) throw InputError("table algebra needs at least 2 elements");
  if (t.size > kTableExportLimit) throw CarrierTooLarge("table algebra too large");
  auto in_range = [&](Index x) { return x >= 0 && x < t.size; };
  if (!in_range(t.zero) || !in_range(t.one)) throw InputError("zero/one index out of range");
  if (t.zero == t.one) throw InputError("zero and one must differ");
  if (t.sum.size() != static_cast<std::size_t>(t.size)) {
    throw InputError("sum table must have " + std::to_string(t.size) + " rows");
  }
  for (Index x = 0; x < t.size; ++x) {
    if (t.sum[x].size() != static_cast<std::size_t>(t.size)) {
      throw InputError("sum table row " + std::to_string(x) + " has wrong length");
    }
    for (Index y = 0; y < t.size; ++y) {
      Index v = t.sum[x][y];
      if (v != kUndefined && !in_range(v)) {
        throw InputError("sum[" + std::to_string(x) + "][" + std::to_string(y) +
                         "] = " + std::to_string(v) + " is out of range");
      }
    }
  }
}

}  // namespace

const char* to_string(TableAxiom axiom) {
  switch (axiom) {
    case TableAxiom::Commutativity: return "commutativity";
    case TableAxiom::Associativity: return "associativity";
    case TableAxiom::Orthosupplement: return "orthosupplement";
    case TableAxiom::ZeroOne: return "zero_one";
    case TableAxiom::Positivity: return "positivity";
  }
  return "?";
}

const TableViolation* ValidationReport::find(TableAxiom axiom) const {
  for (const auto& v : violations) {
    if (v.axiom == axiom) return &v;
  }
  return nullptr;
}

ValidationReport validate_table_algebra(const TableAlgebra& t) {
  check_well_formed(t);
  ValidationReport report;
  const Index n = t.size;

  [&] {
    for (Index a = 0; a < n; ++a)
      for (Index b = a + 1; b < n; ++b)
        if (lookup(t, a, b) != lookup(t, b, a)) {
          report.violations.push_back({TableAxiom::Commutativity, {a, b}, "a+b != b+a"});
          return;
        }
  }();

  [&] {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c) {
          Index left = sum_or_undefined(t, lookup(t, a, b), c);
          Index right = sum_or_undefined(t, a, lookup(t, b, c));
          if (left != right) {
            report.violations.push_back(
                {TableAxiom::Associativity, {a, b, c}, "(a+b)+c != a+(b+c)"});
            return;
          }
        }
  }();

  [&] {
    for (Index a = 0; a < n; ++a) {
      int count = 0;
      Index supplement = kUndefined;
      for (Index b = 0; b < n; ++b) {
        if (lookup(t, a, b) == t.one) {
          ++count;
          supplement = b;
        }
      }
      if (count != 1) {
        report.violations.push_back({TableAxiom::Orthosupplement, {a},
                                     std::to_string(count) + " orthosupplements"});
        return;
      }
      if (a == t.one && supplement != t.zero) {
        report.violations.push_back(
            {TableAxiom::Orthosupplement, {a}, "orthosupplement of one is not zero"});
        return;
      }
    }
  }();

  for (Index a = 0; a < n; ++a) {
    if (a != t.zero && lookup(t, a, t.one) != kUndefined) {
      report.violations.push_back({TableAxiom::ZeroOne, {a}, "a+1 defined for a != 0"});
      break;
    }
  }

  [&] {
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        if (lookup(t, x, y) == t.zero && (x != t.zero || y != t.zero)) {
          report.violations.push_back({TableAxiom::Positivity, {x, y}, "x+y = 0 with x or y nonzero"});
          return;
        }
  }();

  return report;
}

EffectAlgebra EffectAlgebra::simplicial(const Shape& u) {
  u.require_carrier_limit();
  EffectAlgebra e;
  e.shape_ = u;
  e.size_ = static_cast<Index>(u.carrier_size());
  e.zero_ = 0;
  e.one_ = e.size_ - 1;
  e.complement_.resize(e.size_);
  for (Index x = 0; x < e.size_; ++x) e.complement_[x] = e.one_ - x;  // mixed radix: u - x
  if (e.size_ <= kDenseLimit) {
    e.dense_sum_.resize(static_cast<std::size_t>(e.size_) * e.size_);
    for (Index x = 0; x < e.size_; ++x)
      for (Index y = 0; y < e.size_; ++y)
        e.dense_sum_[static_cast<std::size_t>(x) * e.size_ + y] = e.simplicial_sum(x, y);
  }
  return e;
}

EffectAlgebra EffectAlgebra::from_table(const TableAlgebra& table) {
  auto report = validate_table_algebra(table);
  if (!report.valid()) {
    const auto& v = report.violations.front();
    std::ostringstream msg;
    msg << "invalid effect algebra table: " << to_string(v.axiom) << " fails (" << v.detail
        << ") at";
    for (Index w : v.witness) msg << ' ' << w;
    throw InputError(msg.str());
  }
  EffectAlgebra e;
  e.size_ = table.size;
  e.zero_ = table.zero;
  e.one_ = table.one;
  e.dense_sum_.resize(static_cast<std::size_t>(e.size_) * e.size_);
  e.complement_.assign(e.size_, kUndefined);
  for (Index x = 0; x < e.size_; ++x) {
    for (Index y = 0; y < e.size_; ++y) {
      e.dense_sum_[static_cast<std::size_t>(x) * e.size_ + y] = table.sum[x][y];
      if (table.sum[x][y] == table.one) e.complement_[x] = y;
    }
  }
  return e;
}

const Shape& EffectAlgebra::shape() const {
  if (!shape_) throw InputError("algebra is not simplicial");
  return *shape_;
}

Index EffectAlgebra::simplicial_sum(Index x, Index y) const {
  // Add digit by digit in mixed radix; any carry means x + y exceeds u.
  const auto top = shape_->top();
  Index result = 0;
  Index stride = 1;
  for (int ui : top) {
    const int radix = ui + 1;
    const int digit = x % radix + y % radix;
    if (digit > ui) return kUndefined;
    result += digit * stride;
    stride *= radix;
    x /= radix;
    y /= radix;
  }
  return result;
}

void EffectAlgebra::check_member(Index x) const {
  if (x < 0 || x >= size_) throw InputError("element index " + std::to_string(x) + " out of range");
}

Index EffectAlgebra::oplus(Index x, Index y) const {
  if (!dense_sum_.empty()) return dense_sum_[static_cast<std::size_t>(x) * size_ + y];
  return simplicial_sum(x, y);
}

bool EffectAlgebra::leq(Index x, Index y) const {
  if (shape_) {
    const auto top = shape_->top();
    for (int ui : top) {
      if (x % (ui + 1) > y % (ui + 1)) return false;
      x /= ui + 1;
      y /= ui + 1;
    }
    return true;
  }
  for (Index c = 0; c < size_; ++c) {
    if (oplus(x, c) == y) return true;
  }
  return false;
}

std::vector<AtomRecord> EffectAlgebra::atoms() const {
  std::vector<AtomRecord> result;
  if (shape_) {
    // Componentwise order: x is minimal nonzero iff its coordinates sum to 1.
    for (Index x = 1; x < size_; ++x) {
      auto c = shape_->coords_of(x);
      int total = 0;
      for (int ci : c) total += ci;
      if (total == 1) result.push_back({x, isotropic_index(x)});
    }
    return result;
  }
  for (Index x = 0; x < size_; ++x) {
    if (x == zero_) continue;
    bool minimal = true;
    for (Index y = 0; y < size_ && minimal; ++y) {
      if (y != zero_ && y != x && leq(y, x)) minimal = false;
    }
    if (minimal) result.push_back({x, isotropic_index(x)});
  }
  return result;
}

int EffectAlgebra::isotropic_index(Index x) const {
  check_member(x);
  if (x == zero_) throw InputError("isotropic index of 0 is not finite");
  int n = 1;
  Index multiple = x;
  for (;;) {
    Index next = oplus(multiple, x);
    if (next == kUndefined) return n;
    multiple = next;
    if (++n > size_) throw InternalError("n-fold sums of a nonzero element never stop");
  }
}

bool EffectAlgebra::has_obstruction_atom() const {
  auto list = atoms();
  return std::any_of(list.begin(), list.end(), [](const AtomRecord& r) { return r.isotropic_index >= 2; });
}

TableAlgebra EffectAlgebra::to_table() const {
  if (size_ > kTableExportLimit) throw CarrierTooLarge("carrier too large to export as a table");
  TableAlgebra t;
  t.size = size_;
  t.zero = zero_;
  t.one = one_;
  t.sum.assign(size_, std::vector<Index>(size_));
  for (Index x = 0; x < size_; ++x)
    for (Index y = 0; y < size_; ++y) t.sum[x][y] = oplus(x, y);
  return t;
}

std::string EffectAlgebra::describe() const {
  if (shape_) return "E_" + shape_->to_string();
  return "table algebra of size " + std::to_string(size_);
}

Elem EffectAlgebra::elem(Index x) const {
  check_member(x);
  return Elem{shape().coords_of(x)};
}

Index EffectAlgebra::index(const Elem& x) const {
  if (!shape().contains(x.coords)) throw InputError("element does not belong to E_" + shape().to_string());
  return shape().index_of(x.coords);
}

std::optional<Elem> EffectAlgebra::oplus(const Elem& x, const Elem& y) const {
  Index s = oplus(index(x), index(y));
  if (s == kUndefined) return std::nullopt;
  return elem(s);
}

Elem EffectAlgebra::complement(const Elem& x) const { return elem(complement(index(x))); }

bool EffectAlgebra::leq(const Elem& x, const Elem& y) const { return leq(index(x), index(y)); }

std::optional<ChainDecomposition> unique_atom_chain(const EffectAlgebra& algebra) {
  auto atom_list = algebra.atoms();
  if (atom_list.size() != 1) return std::nullopt;
  ChainDecomposition chain{atom_list.front().atom, atom_list.front().isotropic_index, {}};
  chain.multiples.push_back(algebra.zero());
  Index multiple = algebra.zero();
  for (int k = 1; k <= chain.length; ++k) {
    multiple = algebra.oplus(multiple, chain.atom);
    chain.multiples.push_back(multiple);
  }
  std::vector<int> seen(algebra.size(), 0);
  for (Index m : chain.multiples) {
    if (m == kUndefined || seen[m]++) throw InternalError("unique-atom algebra: multiples not distinct");
  }
  if (chain.multiples.back() != algebra.one()) {
    throw InternalError("unique-atom algebra: ord(p)*p != 1");
  }
  if (chain.multiples.size() != static_cast<std::size_t>(algebra.size())) {
    throw InternalError("unique-atom algebra has elements that are not multiples of its atom");
  }
  return chain;
}

TableAlgebra mo2_table() {
  // 0, a, a', b, b', 1
  constexpr Index n = 6;
  TableAlgebra t{n, 0, 5, std::vector<std::vector<Index>>(n, std::vector<Index>(n, kUndefined))};
  for (Index x = 0; x < n; ++x) {
    t.sum[0][x] = x;
    t.sum[x][0] = x;
  }
  t.sum[1][2] = t.sum[2][1] = 5;
  t.sum[3][4] = t.sum[4][3] = 5;
  return t;
}

TableAlgebra chain_table(int n) {
  if (n < 1) throw InputError("chain length must be >= 1");
  const Index size = n + 1;
  TableAlgebra t{size, 0, n, std::vector<std::vector<Index>>(size, std::vector<Index>(size, kUndefined))};
  for (Index i = 0; i < size; ++i)
    for (Index j = 0; i + j <= n; ++j) t.sum[i][j] = i + j;
  return t;
}

}  // namespace effalg
