#include "effalg/axioms.hpp"

#include "axiom_kernels.hpp"
#include "effalg/errors.hpp"

namespace effalg {

const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::S1: return "s1";
    case Axiom::S2: return "s2";
    case Axiom::S3: return "s3";
    case Axiom::S4: return "s4";
    case Axiom::S5: return "s5";
  }
  return "?";
}

bool AxiomReport::all_pass() const noexcept {
  for (int i = 0; i < upto; ++i) {
    if (failures[i]) return false;
  }
  return true;
}

AxiomReport check_axioms(const Operation& op, int upto) {
  if (upto < 1 || upto > 5) throw InputError("axiom prefix must be between 1 and 5");
  AxiomReport report;
  report.upto = upto;
  auto at = [&op](Index a, Index b) { return op(a, b); };
  for (int k = 1; k <= upto; ++k) {
    report.failures[k - 1] = kernels::scan(static_cast<Axiom>(k), op.algebra(), at);
  }
  return report;
}

bool replay_violation(const Operation& op, Axiom axiom, const Witness& w) {
  const EffectAlgebra& e = op.algebra();
  auto in_range = [&](const std::optional<Index>& x) { return x && *x >= 0 && *x < e.size(); };
  if (w.a < 0 || w.a >= e.size()) return false;
  const Index a = w.a;
  switch (axiom) {
    case Axiom::S1: {
      if (!in_range(w.b) || !in_range(w.c)) return false;
      Index bc = e.oplus(*w.b, *w.c);
      return bc != kUndefined && op(a, bc) != e.oplus(op(a, *w.b), op(a, *w.c));
    }
    case Axiom::S2:
      return op(e.one(), a) != a;
    case Axiom::S3:
      return in_range(w.b) && op(a, *w.b) == e.zero() && op(*w.b, a) != e.zero();
    case Axiom::S4: {
      if (!in_range(w.b)) return false;
      const Index b = *w.b;
      if (!commutes(op, a, b)) return false;
      if (!w.c) return !commutes(op, a, e.complement(b));
      if (!in_range(w.c)) return false;
      return op(a, op(b, *w.c)) != op(op(a, b), *w.c);
    }
    case Axiom::S5: {
      if (!in_range(w.b) || !in_range(w.c)) return false;
      const Index b = *w.b, c = *w.c;
      if (!commutes(op, c, a) || !commutes(op, c, b)) return false;
      if (!commutes(op, c, op(a, b))) return true;
      Index sum = e.oplus(a, b);
      return sum != kUndefined && !commutes(op, c, sum);
    }
  }
  return false;
}

}  // namespace effalg
