#include "effalg/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "axiom_kernels.hpp"
#include "effalg/errors.hpp"

namespace effalg {

const char* to_string(Certificate certificate) {
  return certificate == Certificate::Formula ? "formula" : "exhaustive";
}

const char* to_string(Existence existence) {
  switch (existence) {
    case Existence::Exists: return "exists";
    case Existence::None: return "none";
    case Existence::Undecided: return "undecided";
  }
  return "?";
}

BigInt count_prefix_formula(const Shape& u, int k) {
  if (k != 1 && k != 2) throw InputError("closed-form counts exist only for k = 1, 2");
  u.require_carrier_limit();
  const auto n = static_cast<std::uint64_t>(u.carrier_size());
  return pow(count_subunital(u, u), k == 1 ? n : n - 1);
}

BigInt count_s1s2(const Shape& u) { return count_prefix_formula(u, 2); }

namespace {

/// Backtracking over left translations. Row `a` holds an index into the
/// candidate matrix list; rows are assigned in canonical order, with the top
/// row fixed to the identity when k >= 2.
class RowSearch {
 public:
  RowSearch(const Shape& u, int k, const SearchOptions& options)
      : k_(k), options_(options), algebra_(make_algebra(EffectAlgebra::simplicial(u))) {
    if (algebra_->size() > kMaxOperationCarrier) {
      throw CarrierTooLarge("carrier too large for operation search");
    }
    n_ = algebra_->size();
    matrices_ = enumerate_subunital(u, u);
    images_.reserve(matrices_.size());
    for (const auto& m : matrices_) images_.push_back(map_table(m));
    identity_ = static_cast<int>(std::find(matrices_.begin(), matrices_.end(),
                                           SubunitalMatrix::identity(u)) - matrices_.begin());
    for (Index a = 0; a < n_; ++a) {
      if (k_ >= 2 && a == algebra_->one()) continue;
      free_rows_.push_back(a);
    }
  }

  SearchResult run() {
    std::vector<int> base(n_, -1);
    if (k_ >= 2) base[algebra_->one()] = identity_;

    // Split the tree into independent prefixes so workers can share it.
    const unsigned threads = std::max(1u, options_.threads);
    std::vector<std::vector<int>> frontier{base};
    std::size_t depth = 0;
    std::uint64_t frontier_nodes = 0;
    while (threads > 1 && frontier.size() < 8 * threads && depth + 1 < free_rows_.size()) {
      std::vector<std::vector<int>> next;
      for (auto& prefix : frontier) {
        for (int m = 0; m < static_cast<int>(matrices_.size()); ++m) {
          prefix[free_rows_[depth]] = m;
          ++frontier_nodes;
          if (consistent(prefix, free_rows_[depth])) next.push_back(prefix);
        }
        prefix[free_rows_[depth]] = -1;
      }
      frontier = std::move(next);
      ++depth;
    }
    nodes_ = frontier_nodes;

    std::vector<Partition> parts(frontier.size());
    std::atomic<std::size_t> next_item{0};
    auto worker = [&] {
      for (;;) {
        std::size_t item = next_item.fetch_add(1);
        if (item >= frontier.size() || aborted_.load(std::memory_order_relaxed)) return;
        std::vector<int> choice = frontier[item];
        std::vector<Index> scratch(static_cast<std::size_t>(n_) * n_);
        descend(choice, depth, parts[item], scratch);
      }
    };
    if (threads == 1 || frontier.size() <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < std::min<std::size_t>(threads, frontier.size()); ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }

    SearchResult result{algebra_->shape(), k_, 0, std::nullopt, Certificate::Exhaustive,
                        aborted_ ? SearchStatus::Undecided : SearchStatus::Complete, nodes_.load()};
    std::uint64_t total = 0;
    for (const auto& part : parts) total += part.count;
    result.count = total;
    if (!aborted_ && total <= options_.cap) {
      std::vector<Operation> ops;
      for (const auto& part : parts)
        for (const auto& choice : part.kept) ops.push_back(build(choice));
      result.operations = std::move(ops);
    }
    return result;
  }

  Operation build(const std::vector<int>& choice) const {
    std::vector<SubunitalMatrix> rows;
    rows.reserve(n_);
    for (int m : choice) rows.push_back(matrices_[m]);
    return Operation::from_matrices(algebra_, std::move(rows));
  }

  const AlgebraPtr& algebra() const { return algebra_; }

 private:
  struct Partition {
    std::uint64_t count = 0;
    std::vector<std::vector<int>> kept;
  };

  Index value(const std::vector<int>& choice, Index a, Index b) const {
    return choice[a] < 0 ? kernels::kUnknown : images_[choice[a]][b];
  }

  bool consistent(const std::vector<int>& choice, Index row) const {
    if (k_ < 3) return true;
    const Index zero = algebra_->zero();
    const auto& mine = images_[choice[row]];
    for (Index b = 0; b < n_; ++b) {
      if (choice[b] < 0) continue;
      if ((mine[b] == zero) != (images_[choice[b]][row] == zero)) return false;
    }
    if (k_ >= 4 && options_.prune_upper_axioms) {
      auto at = [&](Index a, Index b) { return value(choice, a, b); };
      if (kernels::scan_s4(*algebra_, at)) return false;
      if (k_ >= 5 && kernels::scan_s5(*algebra_, at)) return false;
    }
    return true;
  }

  bool accept(const std::vector<int>& choice, std::vector<Index>& scratch) const {
    for (Index a = 0; a < n_; ++a) {
      std::copy(images_[choice[a]].begin(), images_[choice[a]].end(),
                scratch.begin() + static_cast<std::ptrdiff_t>(a) * n_);
    }
    auto at = [&](Index a, Index b) { return scratch[static_cast<std::size_t>(a) * n_ + b]; };
    for (int axiom = 1; axiom <= k_; ++axiom) {
      if (kernels::scan(static_cast<Axiom>(axiom), *algebra_, at)) return false;
    }
    return true;
  }

  void descend(std::vector<int>& choice, std::size_t depth, Partition& part,
               std::vector<Index>& scratch) {
    if (aborted_.load(std::memory_order_relaxed)) return;
    if (depth == free_rows_.size()) {
      if (accept(choice, scratch)) {
        ++part.count;
        if (part.kept.size() <= options_.cap) part.kept.push_back(choice);
      }
      return;
    }
    const Index row = free_rows_[depth];
    for (int m = 0; m < static_cast<int>(matrices_.size()); ++m) {
      if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > options_.node_budget) {
        aborted_.store(true);
        return;
      }
      choice[row] = m;
      if (consistent(choice, row)) descend(choice, depth + 1, part, scratch);
      if (aborted_.load(std::memory_order_relaxed)) break;
    }
    choice[row] = -1;
  }

  int k_;
  SearchOptions options_;
  AlgebraPtr algebra_;
  Index n_ = 0;
  std::vector<SubunitalMatrix> matrices_;
  std::vector<MapTable> images_;
  int identity_ = 0;
  std::vector<Index> free_rows_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> aborted_{false};
};

}  // namespace

std::vector<Operation> enumerate_s1s2(const Shape& u, std::uint64_t cap) {
  BigInt count = count_s1s2(u);
  if (count > cap) {
    throw CapExceeded("(S1)+(S2) count " + to_decimal(count) + " exceeds cap " + std::to_string(cap),
                      to_decimal(count));
  }
  SearchOptions options;
  options.cap = cap;
  options.node_budget = std::numeric_limits<std::uint64_t>::max();
  auto result = RowSearch(u, 2, options).run();
  return std::move(*result.operations);
}

SearchResult enumerate_s1sk(const Shape& u, int k, const SearchOptions& options) {
  if (k < 1 || k > 5) throw InputError("axiom prefix must be between 1 and 5");
  if (k <= 2) {
    BigInt count = count_prefix_formula(u, k);
    SearchResult result{u, k, count, std::nullopt, Certificate::Formula, SearchStatus::Complete, 0};
    if (count <= options.cap) {
      SearchOptions unlimited = options;
      unlimited.node_budget = std::numeric_limits<std::uint64_t>::max();
      auto listed = RowSearch(u, k, unlimited).run();
      if (listed.count != count) throw InternalError("enumeration disagrees with the counting formula");
      result.operations = std::move(listed.operations);
      result.nodes = listed.nodes;
    }
    return result;
  }
  return RowSearch(u, k, options).run();
}

ExistenceResult exists_s1s4(const Shape& u, const SearchOptions& options) {
  auto algebra = EffectAlgebra::simplicial(u);
  ExistenceResult out;
  out.obstruction = algebra.has_obstruction_atom();
  auto search = enumerate_s1sk(u, 4, options);
  out.nodes = search.nodes;
  out.survivor_count = search.count;
  if (search.status == SearchStatus::Undecided) {
    out.verdict = Existence::Undecided;
    return out;
  }
  if (search.count == 0) {
    out.verdict = Existence::None;
    return out;
  }
  if (out.obstruction) {
    throw InternalError("found an (S1)-(S4) operation on E_" + u.to_string() +
                        " although it has an obstruction atom");
  }
  out.verdict = Existence::Exists;
  if (search.operations) {
    out.survivors = std::move(*search.operations);
    out.witness = out.survivors.front();
    if (u.boolean()) {
      auto meet = meet_boolean(static_cast<int>(u.rank()));
      for (const auto& op : out.survivors) {
        if (op.same_table(meet)) out.witness = op;
      }
    }
  }
  return out;
}

B2Classification classify_b2_survivors(const std::vector<Operation>& survivors) {
  const Index zero = 0, p = 1, q = 2, one = 3;
  B2Classification out;
  for (const auto& op : survivors) {
    if (!op.algebra().is_simplicial() || op.algebra().shape() != Shape({1, 1})) {
      throw InputError("B2 classification expects operations on E_(1,1)");
    }
    for (Index x = 0; x <= one; ++x) {
      if (op(zero, x) != zero || op(one, x) != x) out.row_pattern = false;
    }
    B2Entry entry{op, op(p, p), op(p, q), op(q, p), op(q, q)};
    if ((entry.v == zero) != (entry.s == zero)) {
      out.cross_zero = false;
    } else {
      (entry.v == zero ? out.zero_block : out.nonzero_block) += 1;
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

B2Classification classify_b2(const SearchOptions& options) {
  auto search = enumerate_s1sk(Shape({1, 1}), 3, options);
  if (search.status != SearchStatus::Complete || !search.operations) {
    throw InternalError("B2 (S1)-(S3) search did not complete");
  }
  auto out = classify_b2_survivors(*search.operations);
  if (!out.row_pattern) throw InternalError("B2 survivor breaks the row pattern 0 o x = 0, 1 o x = x");
  if (!out.cross_zero) throw InternalError("B2 survivor breaks A(q) = 0 <=> B(p) = 0");
  if (out.zero_block != 9 || out.nonzero_block != 25) {
    throw InternalError("B2 blocks are " + std::to_string(out.zero_block) + " + " +
                        std::to_string(out.nonzero_block) + ", expected 9 + 25");
  }
  return out;
}

ChainReport chain_report(int n, const SearchOptions& options) {
  if (n < 1) throw InputError("chain length must be >= 1");
  const Shape u({n});
  ChainReport report{n, count_s1s2(u), 0, 0, false, Existence::Undecided, Existence::Undecided, false};
  report.s1s2_enumerated = enumerate_s1s2(u, options.cap).size();

  auto s3 = enumerate_s1sk(u, 3, options);
  if (s3.status == SearchStatus::Complete && s3.operations) {
    report.s1s3_count = s3.operations->size();
    auto sigma = sigma_universal(make_algebra(EffectAlgebra::simplicial(u)));
    report.s1s3_is_sigma = report.s1s3_count == 1 && s3.operations->front().same_table(sigma);
  }
  report.s1s4 = exists_s1s4(u, options).verdict;

  auto s5 = enumerate_s1sk(u, 5, options);
  if (s5.status == SearchStatus::Complete) {
    report.s1s5 = s5.count > 0 ? Existence::Exists : Existence::None;
    if (n == 1 && s5.operations && s5.operations->size() == 1) {
      report.s1s5_is_meet = s5.operations->front().same_table(meet_boolean(1));
    }
  }
  return report;
}

std::vector<Operation> full_bruteforce_ops(const AlgebraPtr& algebra, int k, std::uint64_t cap) {
  if (k < 1 || k > 5) throw InputError("axiom prefix must be between 1 and 5");
  const Index n = algebra->size();
  const std::uint64_t cells = static_cast<std::uint64_t>(n) * n;
  BigInt space = pow(BigInt(n), cells);
  if (space > cap) {
    throw CapExceeded("table space " + to_decimal(space) + " exceeds cap " + std::to_string(cap),
                      to_decimal(space));
  }
  std::vector<Operation> out;
  std::vector<Index> table(cells, 0);
  for (;;) {
    auto op = Operation::from_table(algebra, table);
    if (check_axioms(op, k).all_pass()) out.push_back(std::move(op));
    std::size_t i = cells;
    while (i > 0) {
      --i;
      if (++table[i] < n) break;
      table[i] = 0;
      if (i == 0) return out;
    }
  }
}

}  // namespace effalg
