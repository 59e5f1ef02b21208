#include "wittlab/derivations.hpp"

#include <map>
#include <string>

#include "wittlab/errors.hpp"

namespace wittlab {
namespace {

// Element with coefficients of type V: Rational for concrete maps, or a
// SparseVector of unknown coefficients when solving for derivations.
template <class V>
using Graded = std::map<Index, V>;

template <class V>
void add_scaled(Graded<V>& acc, const Rational& c, const Graded<V>& x) {
  if (c.is_zero()) return;
  for (const auto& [k, v] : x) {
    auto [it, inserted] = acc.try_emplace(k, c * v);
    if (!inserted) {
      it->second += c * v;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

template <class V>
void add_term(Graded<V>& acc, Index k, V v) {
  if (v.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) acc.erase(it);
  }
}

// [x, e_j]
template <class V>
Graded<V> bracket_right(AlgebraKind kind, const Graded<V>& x, Index j) {
  Graded<V> out;
  for (const auto& [i, v] : x) {
    if (auto t = basis_bracket(kind, i, j)) add_term(out, t->index, t->value * v);
  }
  return out;
}

// [e_i, x]
template <class V>
Graded<V> bracket_left(AlgebraKind kind, Index i, const Graded<V>& x) {
  Graded<V> out;
  for (const auto& [j, v] : x) {
    if (auto t = basis_bracket(kind, i, j)) add_term(out, t->index, t->value * v);
  }
  return out;
}

// Images of e_1..e_N under the map generated by (D(e_1), D(e_2)).
template <class V>
std::map<Index, Graded<V>> extend_images(AlgebraKind kind, Graded<V> img1, Graded<V> img2,
                                         Index n) {
  std::map<Index, Graded<V>> images;
  images[1] = std::move(img1);
  images[2] = std::move(img2);
  for (Index k = 2; k < n; ++k) {
    Graded<V> next = bracket_right(kind, images[1], k);
    add_scaled(next, Rational(1), bracket_left(kind, 1, images[k]));
    if (kind == AlgebraKind::PositiveWitt) {
      Graded<V> scaled;
      add_scaled(scaled, Rational(1, k - 1), next);
      next = std::move(scaled);
    }
    images[k + 1] = std::move(next);
  }
  return images;
}

// Visits the relations [e_i, e_j], i < j <= n, whose Leibniz residual is
// computable from images of e_1..e_n, in order of increasing i + j.
template <class V, class Visit>
bool for_each_relation(AlgebraKind kind, const std::map<Index, Graded<V>>& images, Index n,
                       Visit&& visit) {
  for (Index s = 3; s <= 2 * n - 1; ++s) {
    for (Index i = 1; 2 * i < s; ++i) {
      const Index j = s - i;
      if (j > n) continue;
      const auto t = basis_bracket(kind, i, j);
      if (t && t->index > n) continue;
      Graded<V> residual;
      if (t) add_scaled(residual, t->value, images.at(t->index));
      add_scaled(residual, Rational(-1), bracket_right(kind, images.at(i), j));
      add_scaled(residual, Rational(-1), bracket_left(kind, i, images.at(j)));
      if (!visit(i, j, residual)) return false;
    }
  }
  return true;
}

Graded<Rational> to_graded(const Element& x) {
  Graded<Rational> out;
  for (const auto& [k, v] : x.coeffs()) out.emplace(k, v);
  return out;
}

Element to_element(AlgebraKind kind, const Graded<Rational>& g) {
  std::vector<Entry> entries;
  for (const auto& [k, v] : g) entries.push_back({k, v});
  return Element(kind, SparseVector::from_unsorted(std::move(entries)));
}

void require_generated_kind(AlgebraKind kind) {
  if (kind != AlgebraKind::PositiveWitt && kind != AlgebraKind::Thin) {
    throw PreconditionError("only wplus and thin are generated by e_1, e_2");
  }
}

// Coordinate layout of DerivationSpace before the thin b_1 column is dropped.
struct Layout {
  Index n;
  Index beta_count;
  [[nodiscard]] Index alpha(Index k) const { return k - 1; }
  [[nodiscard]] Index beta(Index k) const { return n + k - 1; }
  [[nodiscard]] Index size() const { return n + beta_count; }
};

}  // namespace

LeibnizResult leibniz_check(const LinearMapTable& d, Index depth) {
  const IndexWindow& w = d.truncation();
  if (depth > w.hi) {
    throw TruncationTooSmall("Leibniz depth " + std::to_string(depth) +
                             " exceeds the truncation maximum " + std::to_string(w.hi));
  }
  const AlgebraKind kind = d.kind();
  const Index lo = std::max(w.lo, -depth);
  const Index hi = std::min(w.hi, depth);
  for (Index i = lo; i <= hi; ++i) {
    for (Index j = i + 1; j <= hi; ++j) {
      const auto t = basis_bracket(kind, i, j);
      if (t && !d.covers(t->index)) continue;
      Element residual(kind);
      if (t) residual = t->value * d.image(t->index);
      residual -= bracket(d.image(i), Element::basis(kind, j));
      residual -= bracket(Element::basis(kind, i), d.image(j));
      if (!residual.is_zero()) return {false, std::pair{i, j}, std::move(residual)};
    }
  }
  return {true, std::nullopt, Element(kind)};
}

ExtensionResult extend_from_generators(AlgebraKind kind, const Element& img_e1,
                                       const Element& img_e2, Index truncation) {
  require_generated_kind(kind);
  if (truncation < 3) throw PreconditionError("extension needs truncation N >= 3");
  if (img_e1.kind() != kind || img_e2.kind() != kind) {
    throw MixedAlgebras("generator images must live in " + std::string(algebra_name(kind)));
  }
  const auto images = extend_images(kind, to_graded(img_e1), to_graded(img_e2), truncation);
  std::optional<InconsistencyReport> report;
  for_each_relation(kind, images, truncation,
                    [&](Index i, Index j, const Graded<Rational>& residual) {
                      if (residual.empty()) return true;
                      report = InconsistencyReport{i, j, to_element(kind, residual)};
                      return false;
                    });
  if (report) return *report;
  std::map<Index, Element> table;
  for (const auto& [k, g] : images) table.emplace(k, to_element(kind, g));
  return LinearMapTable(kind, {1, truncation}, std::move(table));
}

Index default_consistency_depth(Index support) { return 2 * support + 3; }

std::pair<Element, Element> DerivationSpace::generator_images(const SparseVector& coords) const {
  Element e1(kind);
  Element e2(kind);
  for (const auto& [c, v] : coords) {
    if (c < support) {
      e1 += Element::basis(kind, c + 1, v);
    } else {
      // Thin coordinates start at b_2, PositiveWitt ones at b_1.
      const Index first_beta = kind == AlgebraKind::Thin ? 2 : 1;
      e2 += Element::basis(kind, c - support + first_beta, v);
    }
  }
  return {std::move(e1), std::move(e2)};
}

DerivationSpace derivation_space_basis(AlgebraKind kind, Index support, std::optional<Index> depth) {
  require_generated_kind(kind);
  if (support < 1) throw PreconditionError("support bound must be at least 1");
  const Index m = depth.value_or(default_consistency_depth(support));
  if (m < default_consistency_depth(support)) {
    throw PreconditionError("consistency depth must be at least 2n+3 = " +
                            std::to_string(default_consistency_depth(support)));
  }
  const bool thin = kind == AlgebraKind::Thin;
  const Layout layout{support, thin ? support : support + 1};

  Graded<SparseVector> img1;
  Graded<SparseVector> img2;
  for (Index k = 1; k <= support; ++k) img1.emplace(k, SparseVector::unit(layout.alpha(k)));
  for (Index k = 1; k <= layout.beta_count; ++k) img2.emplace(k, SparseVector::unit(layout.beta(k)));

  const auto images = extend_images(kind, std::move(img1), std::move(img2), m);
  std::vector<SparseVector> rows;
  for_each_relation(kind, images, m, [&](Index, Index, const Graded<SparseVector>& residual) {
    for (const auto& [k, form] : residual) rows.push_back(form);
    return true;
  });
  Subspace kernel = kernel_basis(rows, {0, layout.size() - 1});

  DerivationSpace out{kind, support, m, {}, Subspace{}};
  for (Index k = 1; k <= support; ++k) out.coordinates.push_back("a_" + std::to_string(k));
  for (Index k = thin ? 2 : 1; k <= layout.beta_count; ++k) {
    out.coordinates.push_back("b_" + std::to_string(k));
  }
  if (!thin) {
    out.space = std::move(kernel);
    return out;
  }
  // The [e_2, e_3] relation forces b_1 = 0; drop that column.
  const Index b1 = layout.beta(1);
  std::vector<SparseVector> projected;
  for (const auto& v : kernel.basis()) {
    if (!v.get(b1).is_zero()) throw Error("internal: thin derivation with nonzero b_1");
    std::vector<Entry> entries;
    for (const auto& [c, val] : v) entries.push_back({c > b1 ? c - 1 : c, val});
    projected.push_back(SparseVector::from_unsorted(std::move(entries)));
  }
  out.space = Subspace::span({0, layout.size() - 2}, projected);
  return out;
}

Element recover_inner_wplus(const LinearMapTable& d) {
  if (d.kind() != AlgebraKind::PositiveWitt) {
    throw MixedAlgebras("recover_inner_wplus expects a map on wplus");
  }
  const IndexWindow& w = d.truncation();
  if (!w.contains(1) || !w.contains(2)) {
    throw TruncationTooSmall("recovery needs the images of e_1 and e_2");
  }
  const Element& d1 = d.image(1);
  const Element& d2 = d.image(2);
  const Index s = std::max(d1.support_bound(), d2.support_bound());
  if (!w.contains(IndexWindow{1, 2 * s + 3})) {
    throw TruncationTooSmall("recovery needs the truncation to cover e_1..e_" +
                             std::to_string(2 * s + 3));
  }
  const AlgebraKind ext = AlgebraKind::PositiveWittExtended;
  Element a = Element::basis(ext, 0, d1.coefficient(1)) + Element::basis(ext, 1, d2.coefficient(3));
  for (const auto& [i, alpha] : d1.coeffs()) {
    if (i >= 3) a -= Element::basis(ext, i - 1, alpha / Rational(i - 2));
  }
  const LinearMapTable inner = ad(a, w, AlgebraKind::PositiveWitt);
  for (Index k = w.lo; k <= w.hi; ++k) {
    if (inner.image(k) != d.image(k)) {
      throw NotADerivation("D(e_" + std::to_string(k) + ") = " + to_string(d.image(k)) +
                           " but the candidate inner element " + to_string(a) + " gives " +
                           to_string(inner.image(k)));
    }
  }
  return a;
}

Element recover_inner_witt(const LinearMapTable& d) {
  if (d.kind() != AlgebraKind::Witt) throw MixedAlgebras("recover_inner_witt expects a map on witt");
  const IndexWindow& w = d.truncation();
  if (!w.contains(0) || !w.contains(1)) {
    throw TruncationTooSmall("recovery needs the images of e_0 and e_1");
  }
  const AlgebraKind kind = AlgebraKind::Witt;
  // [a, e_0] = -sum j a_j e_j, so D(e_0) fixes every a_j with j != 0 and the
  // e_0-coefficient comes from D(e_1).
  Element a = Element::basis(kind, 0, d.image(1).coefficient(1));
  for (const auto& [j, c] : d.image(0).coeffs()) {
    if (j == 0) continue;
    a += Element::basis(kind, j, -c / Rational(j));
  }
  const LinearMapTable inner = ad(a, w);
  for (Index k = w.lo; k <= w.hi; ++k) {
    if (inner.image(k) != d.image(k)) {
      throw NotADerivation("D(e_" + std::to_string(k) + ") = " + to_string(d.image(k)) +
                           " but the candidate inner element " + to_string(a) + " gives " +
                           to_string(inner.image(k)));
    }
  }
  return a;
}

Rational ThinDerivationParams::a(Index i) const {
  if (i < 1 || i > static_cast<Index>(alpha.size())) return Rational(0);
  return alpha[static_cast<std::size_t>(i - 1)];
}

Rational ThinDerivationParams::b(Index i) const {
  if (i < 2 || i - 2 >= static_cast<Index>(beta.size())) return Rational(0);
  return beta[static_cast<std::size_t>(i - 2)];
}

LinearMapTable thin_derivation(const ThinDerivationParams& params, Index truncation) {
  if (truncation < 3) throw PreconditionError("thin_derivation needs truncation N >= 3");
  const AlgebraKind kind = AlgebraKind::Thin;
  const Index n_alpha = static_cast<Index>(params.alpha.size());
  const Index n_beta = static_cast<Index>(params.beta.size()) + 1;
  return LinearMapTable::from_function(kind, {1, truncation}, [&](Index j) {
    Element img(kind);
    if (j == 1) {
      for (Index i = 1; i <= n_alpha; ++i) img += Element::basis(kind, i, params.a(i));
    } else if (j == 2) {
      for (Index i = 2; i <= n_beta; ++i) img += Element::basis(kind, i, params.b(i));
    } else {
      img += Element::basis(kind, j, Rational(j - 2) * params.a(1) + params.b(2));
      for (Index i = 1; i + 2 <= n_beta; ++i) img += Element::basis(kind, i + j, params.b(i + 2));
    }
    return img;
  });
}

ThinDerivationParams thin_params_from(const LinearMapTable& d) {
  if (d.kind() != AlgebraKind::Thin) throw MixedAlgebras("thin_params_from expects a map on thin");
  const Element& d1 = d.image(1);
  const Element& d2 = d.image(2);
  if (!d2.coefficient(1).is_zero()) {
    throw NotADerivation("D(e_2) has a nonzero e_1-coefficient");
  }
  ThinDerivationParams p;
  if (!d1.is_zero()) {
    for (Index i = 1; i <= *d1.coeffs().trailing_index(); ++i) p.alpha.push_back(d1.coefficient(i));
  }
  if (!d2.is_zero()) {
    for (Index i = 2; i <= *d2.coeffs().trailing_index(); ++i) p.beta.push_back(d2.coefficient(i));
  }
  return p;
}

Element inner_image(const Element& a, Index j) {
  if (a.kind() != AlgebraKind::PositiveWittExtended) {
    throw MixedAlgebras("inner_image expects an element of wplus_ext");
  }
  if (j < 1) throw PreconditionError("inner_image needs j >= 1");
  return bracket(a, Element::basis(a.kind(), j));
}

}  // namespace wittlab
