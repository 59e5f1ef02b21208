#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wittlab/algebra.hpp"
#include "wittlab/linear_map_table.hpp"
#include "wittlab/linear_system.hpp"

namespace wittlab {

struct LeibnizResult {
  bool pass = true;
  std::optional<std::pair<Index, Index>> pair;
  // D([e_i,e_j]) - [D(e_i),e_j] - [e_i,D(e_j)] at the first failing pair.
  Element residual;
};

// Checks the Leibniz rule on every pair i < j of basis indices with i, j and
// the bracket's index inside D's truncation and |i|, |j| <= depth. Pairs are
// visited in lexicographic order. Throws TruncationTooSmall when depth reaches
// past both ends of the truncation.
LeibnizResult leibniz_check(const LinearMapTable& d, Index depth);

// Why a pair of generator images fails to extend to a derivation.
struct InconsistencyReport {
  Index i;
  Index j;
  // D([e_i,e_j]) - [D(e_i),e_j] - [e_i,D(e_j)] for the extended map.
  Element residual;
};

using ExtensionResult = std::variant<LinearMapTable, InconsistencyReport>;

// Extends D(e_1), D(e_2) to e_3..e_N through e_3 = [e_1,e_2] and
//   PositiveWitt: e_{k+1} = [e_1,e_k] / (k-1)
//   Thin:         e_{k+1} = [e_1,e_k]
// then re-checks every other relation [e_i,e_j] reachable inside 1..N, in
// order of increasing i + j. Requires N >= 3.
ExtensionResult extend_from_generators(AlgebraKind kind, const Element& img_e1,
                                       const Element& img_e2, Index truncation);

// The space of generator-image pairs (D(e_1), D(e_2)) that extend
// consistently through depth M, in coordinates
//   Thin:         (a_1..a_n, b_2..b_n)          images in 1..n
//   PositiveWitt: (a_1..a_n, b_1..b_{n+1})      D(e_1) in 1..n, D(e_2) in 1..n+1
// where a_k, b_k are the e_k-coefficients of D(e_1), D(e_2). The basis is in
// canonical RREF over coordinate indices 0..dim-1.
struct DerivationSpace {
  AlgebraKind kind;
  Index support;
  Index depth;
  std::vector<std::string> coordinates;
  Subspace space;

  // Generator images encoded by a coordinate vector.
  [[nodiscard]] std::pair<Element, Element> generator_images(const SparseVector& coords) const;
};

// Default consistency depth 2n + 3.
Index default_consistency_depth(Index support);

DerivationSpace derivation_space_basis(AlgebraKind kind, Index support,
                                       std::optional<Index> depth = std::nullopt);

// The inner element a of W+ + <e_0> with D = ad(a), read off as
//   a = a_1 e_0 + b_3 e_1 - sum_{i>=3} a_i / (i - 2) e_{i-1}
// from D(e_1) = sum a_i e_i and the e_3-coefficient b_3 of D(e_2), then
// checked against D on its whole truncation.
// Throws TruncationTooSmall unless the truncation covers 1..2s+3, where s
// bounds the supports of D(e_1) and D(e_2); throws NotADerivation when the
// check fails.
Element recover_inner_wplus(const LinearMapTable& d);

// The element a of W with D = ad(a): a_j = -[e_j](D(e_0)) / j for j != 0 and
// a_0 = [e_1](D(e_1)), checked against D on its whole truncation.
Element recover_inner_witt(const LinearMapTable& d);

// Parameters of a thin-algebra derivation: alpha[k] = a_{k+1} (k >= 0) and
// beta[k] = b_{k+2} (k >= 0). The e_1-coefficient of D(e_2) is always zero.
struct ThinDerivationParams {
  std::vector<Rational> alpha;
  std::vector<Rational> beta;

  [[nodiscard]] Rational a(Index i) const;  // a_i, zero past the end
  [[nodiscard]] Rational b(Index i) const;  // b_i for i >= 2, zero past the end
};

// D(e_1) = sum a_i e_i, D(e_2) = sum_{i>=2} b_i e_i and for j >= 3
//   D(e_j) = ((j-2) a_1 + b_2) e_j + sum_{i>=1} b_{i+2} e_{i+j}.
LinearMapTable thin_derivation(const ThinDerivationParams& params, Index truncation);

// Reads the parameters back from D(e_1), D(e_2). Throws NotADerivation when
// D(e_2) has an e_1 component.
ThinDerivationParams thin_params_from(const LinearMapTable& d);

// [a, e_j] for a in W+ + <e_0> and j >= 1, computed from structure constants.
Element inner_image(const Element& a, Index j);

}  // namespace wittlab
