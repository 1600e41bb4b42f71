// Axiom scans shared by the complete checker and the search pruner.
//
// `at(a, b)` returns a o b, or kUnknown when the row of `a` is not yet
// assigned. An instance is reported only when every value it needs is known,
// so a scan over a partial operation never rejects a completable one.
#ifndef EFFALG_SRC_AXIOM_KERNELS_HPP
#define EFFALG_SRC_AXIOM_KERNELS_HPP

#include <optional>

#include "effalg/algebra.hpp"
#include "effalg/axioms.hpp"

namespace effalg::kernels {

inline constexpr Index kUnknown = -2;

template <class At>
std::optional<Witness> scan_s1(const EffectAlgebra& e, At&& at) {
  const Index n = e.size();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        Index bc = e.oplus(b, c);
        if (bc == kUndefined) continue;
        Index left = at(a, bc), ab = at(a, b), ac = at(a, c);
        if (left == kUnknown || ab == kUnknown || ac == kUnknown) continue;
        if (left != e.oplus(ab, ac)) return Witness{a, b, c};
      }
  return std::nullopt;
}

template <class At>
std::optional<Witness> scan_s2(const EffectAlgebra& e, At&& at) {
  for (Index a = 0; a < e.size(); ++a) {
    Index v = at(e.one(), a);
    if (v != kUnknown && v != a) return Witness{a, {}, {}};
  }
  return std::nullopt;
}

template <class At>
std::optional<Witness> scan_s3(const EffectAlgebra& e, At&& at) {
  const Index n = e.size();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      if (at(a, b) != e.zero()) continue;
      Index ba = at(b, a);
      if (ba != kUnknown && ba != e.zero()) return Witness{a, b, {}};
    }
  return std::nullopt;
}

template <class At>
std::optional<Witness> scan_s4(const EffectAlgebra& e, At&& at) {
  const Index n = e.size();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      Index ab = at(a, b), ba = at(b, a);
      if (ab == kUnknown || ba == kUnknown || ab != ba) continue;
      Index bc = e.complement(b);
      Index x = at(a, bc), y = at(bc, a);
      if (x != kUnknown && y != kUnknown && x != y) return Witness{a, b, {}};
      for (Index c = 0; c < n; ++c) {
        Index b_c = at(b, c);
        if (b_c == kUnknown) continue;
        Index left = at(a, b_c);
        Index right = at(ab, c);
        if (left != kUnknown && right != kUnknown && left != right) return Witness{a, b, c};
      }
    }
  return std::nullopt;
}

template <class At>
std::optional<Witness> scan_s5(const EffectAlgebra& e, At&& at) {
  const Index n = e.size();
  auto commute = [&](Index p, Index q) -> int {  // 1 yes, 0 no, -1 unknown
    Index pq = at(p, q), qp = at(q, p);
    if (pq == kUnknown || qp == kUnknown) return -1;
    return pq == qp ? 1 : 0;
  };
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        if (commute(c, a) != 1 || commute(c, b) != 1) continue;
        Index ab = at(a, b);
        if (ab != kUnknown && commute(c, ab) == 0) return Witness{a, b, c};
        Index sum = e.oplus(a, b);
        if (sum != kUndefined && commute(c, sum) == 0) return Witness{a, b, c};
      }
  return std::nullopt;
}

template <class At>
std::optional<Witness> scan(Axiom axiom, const EffectAlgebra& e, At&& at) {
  switch (axiom) {
    case Axiom::S1: return scan_s1(e, at);
    case Axiom::S2: return scan_s2(e, at);
    case Axiom::S3: return scan_s3(e, at);
    case Axiom::S4: return scan_s4(e, at);
    case Axiom::S5: return scan_s5(e, at);
  }
  return std::nullopt;
}

}  // namespace effalg::kernels

#endif  // EFFALG_SRC_AXIOM_KERNELS_HPP
