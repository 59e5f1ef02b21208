#include "wittlab/algebra.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "wittlab/errors.hpp"

namespace wittlab {

std::string_view algebra_name(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Witt:
      return "witt";
    case AlgebraKind::PositiveWitt:
      return "wplus";
    case AlgebraKind::PositiveWittExtended:
      return "wplus_ext";
    case AlgebraKind::Thin:
      return "thin";
  }
  return "?";
}

AlgebraKind parse_algebra(std::string_view name) {
  for (auto k : {AlgebraKind::Witt, AlgebraKind::PositiveWitt, AlgebraKind::PositiveWittExtended,
                 AlgebraKind::Thin}) {
    if (algebra_name(k) == name) return k;
  }
  throw ParseError("unknown algebra '" + std::string(name) +
                   "' (expected witt, wplus, wplus_ext or thin)");
}

std::optional<Index> domain_min(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Witt:
      return std::nullopt;
    case AlgebraKind::PositiveWittExtended:
      return 0;
    case AlgebraKind::PositiveWitt:
    case AlgebraKind::Thin:
      return 1;
  }
  return std::nullopt;
}

bool in_domain(AlgebraKind kind, Index i) {
  const auto lo = domain_min(kind);
  return !lo || i >= *lo;
}

bool in_domain(AlgebraKind kind, const IndexWindow& w) { return w.empty() || in_domain(kind, w.lo); }

bool is_witt_family(AlgebraKind kind) { return kind != AlgebraKind::Thin; }

std::optional<Entry> basis_bracket(AlgebraKind kind, Index i, Index j) {
  if (is_witt_family(kind)) {
    if (i == j) return std::nullopt;
    return Entry{i + j, Rational(j - i)};
  }
  if (i == 1 && j >= 2) return Entry{j + 1, Rational(1)};
  if (j == 1 && i >= 2) return Entry{i + 1, Rational(-1)};
  return std::nullopt;
}

Element::Element(AlgebraKind kind, SparseVector coeffs) : kind_(kind), coeffs_(std::move(coeffs)) {
  if (const auto lead = coeffs_.leading_index(); lead && !in_domain(kind_, *lead)) {
    throw IndexOutOfDomain("index " + std::to_string(*lead) + " is not a basis index of " +
                           std::string(algebra_name(kind_)));
  }
}

Element Element::basis(AlgebraKind kind, Index i, Rational coeff) {
  return Element(kind, SparseVector::unit(i, std::move(coeff)));
}

Index Element::support_bound() const {
  if (coeffs_.is_zero()) return 0;
  return std::max(std::abs(*coeffs_.leading_index()), std::abs(*coeffs_.trailing_index()));
}

Element Element::as(AlgebraKind kind) const {
  if (kind != kind_ && (!is_witt_family(kind) || !is_witt_family(kind_))) {
    throw MixedAlgebras("cannot view an element of " + std::string(algebra_name(kind_)) +
                        " in " + std::string(algebra_name(kind)));
  }
  return Element(kind, coeffs_);
}

Element& Element::operator+=(const Element& rhs) {
  if (rhs.kind_ != kind_) throw MixedAlgebras("adding elements of different algebras");
  coeffs_ += rhs.coeffs_;
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  if (rhs.kind_ != kind_) throw MixedAlgebras("subtracting elements of different algebras");
  coeffs_ -= rhs.coeffs_;
  return *this;
}

SparseVector bracket(const BasisBracketRule& rule, const SparseVector& x, const SparseVector& y) {
  std::vector<Entry> terms;
  for (const auto& a : x) {
    for (const auto& b : y) {
      if (auto t = rule(a.index, b.index)) terms.push_back({t->index, t->value * a.value * b.value});
    }
  }
  return SparseVector::from_unsorted(std::move(terms));
}

Element bracket(const Element& x, const Element& y) {
  if (x.kind() != y.kind()) {
    throw MixedAlgebras("bracket of elements from " + std::string(algebra_name(x.kind())) +
                        " and " + std::string(algebra_name(y.kind())));
  }
  const AlgebraKind kind = x.kind();
  return Element(kind, bracket([kind](Index i, Index j) { return basis_bracket(kind, i, j); },
                               x.coeffs(), y.coeffs()));
}

JacobiResult jacobi_check(const BasisBracketRule& rule, IndexWindow window) {
  auto e = [](Index i) { return SparseVector::unit(i); };
  for (Index i = window.lo; i <= window.hi; ++i) {
    for (Index j = i; j <= window.hi; ++j) {
      for (Index k = j; k <= window.hi; ++k) {
        SparseVector sum = bracket(rule, e(i), bracket(rule, e(j), e(k)));
        sum += bracket(rule, e(j), bracket(rule, e(k), e(i)));
        sum += bracket(rule, e(k), bracket(rule, e(i), e(j)));
        if (!sum.is_zero()) return {false, std::array<Index, 3>{i, j, k}, std::move(sum)};
      }
    }
  }
  return {};
}

JacobiResult jacobi_check(AlgebraKind kind, IndexWindow window) {
  if (!in_domain(kind, window)) {
    throw IndexOutOfDomain("window starts below the index domain of " +
                           std::string(algebra_name(kind)));
  }
  return jacobi_check([kind](Index i, Index j) { return basis_bracket(kind, i, j); }, window);
}

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << to_string(x); }

}  // namespace wittlab
