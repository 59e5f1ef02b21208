#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "wittlab/algebra.hpp"
#include "wittlab/linear_map_table.hpp"
#include "wittlab/linear_system.hpp"

namespace wittlab {

// A possibly nonlinear self-map of an algebra, evaluated on demand.
using DeltaMap = std::function<Element(const Element&)>;

// The thin-algebra map that is 2-local but not additive:
//   delta(x) = 0                       if the e_1-coefficient of x is 0
//   delta(x) = x - x_1 e_1             otherwise
Element thin_delta(const Element& x);

struct InnerWitness {
  Element a;
};

using Witness = std::variant<InnerWitness, LinearMapTable>;

// Applies an inner witness as [a, x] (a may live in wplus_ext while x lives
// in wplus) or a table witness by linear extension.
Element apply_witness(const Witness& w, const Element& x);

struct WitnessCertificate {
  Element x;
  Element y;
  Witness witness;
  // Thin construction case (1, 2 or 3) when produced by thin_witness.
  std::optional<int> thin_case;
  // Case 2 with x and y exchanged (x carries the nonzero e_1-coefficient).
  bool swapped = false;
};

// Derivation certifying the pair (x, y) for thin_delta:
//   case 1  x_1 = y_1 = 0     zero derivation
//   case 2  exactly one of x_1, y_1 nonzero, say y_1:
//           D(e_1) = sum_{k>=2} (y_k / y_1) e_k, D(e_n) = 0 for n >= 2
//   case 3  x_1, y_1 both nonzero: D(e_1) = 0, D(e_n) = e_n for n >= 2
// The table covers e_1..e_N with N = max(3, supports of x and y,
// min_truncation).
WitnessCertificate thin_witness(const Element& x, const Element& y, Index min_truncation = 0);

struct PairVerdict {
  bool pass = true;
  Element residual_x;  // delta(x) - W(x)
  Element residual_y;  // delta(y) - W(y)
};

// Throws TruncationTooSmall when a table witness does not cover x or y.
PairVerdict verify_pair(const DeltaMap& delta, const WitnessCertificate& cert);

struct AdditivityReport {
  Element delta_x;
  Element delta_y;
  Element delta_sum;  // delta(x + y)
  Element residual;   // delta(x + y) - delta(x) - delta(y)
  [[nodiscard]] bool violated() const { return !residual.is_zero(); }
};

AdditivityReport additivity_violation(const DeltaMap& delta, const Element& x, const Element& y);

// Algebra holding the witnesses for 2-local derivations of `kind`: derivations
// of W+ are ad(a) with a in W+ + <e_0>, all others stay in their own algebra.
AlgebraKind witness_algebra(AlgebraKind kind);

// {a supported in window : [a, t] = 0}, with a and t in witness_algebra(kind).
Subspace centralizer(AlgebraKind kind, const Element& t, IndexWindow window);

// span{[a, x] : a in centralizer(e_probe)}: every value delta(x) can take when
// delta(e_probe) = 0 and a witness serves the pair (e_probe, x). The subspace
// lives over window + supp(x).
Subspace forced_image_space(AlgebraKind kind, Index probe, const Element& x, IndexWindow window);

struct RigidityTrace {
  Element target;
  std::vector<Index> probes;
  std::vector<Subspace> forced;
  Subspace intersection;

  [[nodiscard]] bool rigid() const { return intersection.is_zero(); }
};

// Probes {e_0, e_n} with n = 2 n_x + 1 (Witt) or {e_1, e_m} with m = 2 n + 1,
// n the largest index of x (PositiveWitt). Throws WindowTooSmall when the
// window misses a probe.
RigidityTrace rigidity_check(AlgebraKind kind, const Element& x, IndexWindow window);

// x = e_i with probes {e_0, e_1} (Witt, i not in {0, 1}) or {e_1, e_2}
// (PositiveWitt, i >= 3).
RigidityTrace basis_rigidity_check(AlgebraKind kind, Index i, IndexWindow window);

// Subtracts a baseline derivation that agrees with delta on the probe pair
// ({e_0, e_1} for Witt, {e_1, e_2} for PositiveWitt) and replays rigidity on
// the remainder delta - baseline at x.
struct BaselineRigidity {
  RigidityTrace trace;        // rigidity_check at x
  // basis_rigidity_check at the far probe of `trace`, unless that probe is
  // already one of the pair.
  std::optional<RigidityTrace> probe_trace;
  Element predicted;          // baseline(x)
  Element remainder;          // delta(x) - baseline(x)

  // The remainder vanishes at x, as rigidity forces it to.
  [[nodiscard]] bool consistent() const {
    return trace.rigid() && (!probe_trace || probe_trace->rigid()) && remainder.is_zero();
  }
};

// Throws PreconditionError when the baseline fails Leibniz or disagrees with
// delta on the probe pair.
BaselineRigidity rigidity_with_baseline(AlgebraKind kind, const DeltaMap& delta,
                                        const LinearMapTable& baseline, const Element& x,
                                        IndexWindow window);

}  // namespace wittlab
