#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "wittlab/rational.hpp"
#include "wittlab/sparse_vector.hpp"

namespace wittlab {

// The four structure-constant algebras.
//   Witt                 basis e_i, i in Z,    [e_i, e_j] = (j - i) e_{i+j}
//   PositiveWitt         basis e_i, i >= 1,    same rule
//   PositiveWittExtended basis e_i, i >= 0,    same rule (W+ is an ideal)
//   Thin                 basis e_n, n >= 1,    [e_1, e_n] = e_{n+1} = -[e_n, e_1]
//                                              for n >= 2, all else zero
enum class AlgebraKind { Witt, PositiveWitt, PositiveWittExtended, Thin };

// Stable identifiers used in JSON and on the command line.
std::string_view algebra_name(AlgebraKind kind);
AlgebraKind parse_algebra(std::string_view name);  // throws ParseError

// Lowest admissible basis index; nullopt for Witt (unbounded below).
std::optional<Index> domain_min(AlgebraKind kind);
bool in_domain(AlgebraKind kind, Index i);
bool in_domain(AlgebraKind kind, const IndexWindow& w);
bool is_witt_family(AlgebraKind kind);

// [e_i, e_j] as a single term, or nullopt when the bracket vanishes.
std::optional<Entry> basis_bracket(AlgebraKind kind, Index i, Index j);

// A basis bracket rule not tied to one of the built-in kinds; used to run the
// Jacobi check against modified structure constants.
using BasisBracketRule = std::function<std::optional<Entry>(Index, Index)>;

// A finitely supported element of one of the algebras.
class Element {
 public:
  explicit Element(AlgebraKind kind) : kind_(kind) {}
  // Throws IndexOutOfDomain if the support leaves the algebra's index domain.
  Element(AlgebraKind kind, SparseVector coeffs);

  static Element basis(AlgebraKind kind, Index i, Rational coeff = Rational(1));

  [[nodiscard]] AlgebraKind kind() const { return kind_; }
  [[nodiscard]] const SparseVector& coeffs() const { return coeffs_; }
  [[nodiscard]] Rational coefficient(Index i) const { return coeffs_.get(i); }
  [[nodiscard]] bool is_zero() const { return coeffs_.is_zero(); }
  // Largest |index| carrying a nonzero coefficient; 0 for the zero element.
  [[nodiscard]] Index support_bound() const;
  // The same coefficients viewed in another algebra of the Witt family (or
  // the same kind); throws IndexOutOfDomain / MixedAlgebras.
  [[nodiscard]] Element as(AlgebraKind kind) const;

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) {
    a.coeffs_.scale(Rational(-1));
    return a;
  }
  friend Element operator*(const Rational& c, Element a) {
    a.coeffs_.scale(c);
    return a;
  }
  friend bool operator==(const Element&, const Element&) = default;

 private:
  AlgebraKind kind_;
  SparseVector coeffs_;
};

// Bilinear extension of the basis rule. Throws MixedAlgebras.
Element bracket(const Element& x, const Element& y);

// Bracket of two coefficient vectors under an arbitrary basis rule.
SparseVector bracket(const BasisBracketRule& rule, const SparseVector& x, const SparseVector& y);

struct JacobiResult {
  bool pass = true;
  std::optional<std::array<Index, 3>> triple;
  SparseVector residual;
};

// Exhaustive check of [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0
// over i <= j <= k in the window; reports the first violating triple in
// lexicographic order.
JacobiResult jacobi_check(AlgebraKind kind, IndexWindow window);
JacobiResult jacobi_check(const BasisBracketRule& rule, IndexWindow window);

// Element text grammar: signed sum of terms `c*e_k` (c = p, -p, p/q; the
// coefficient and '*' may be omitted for 1), whitespace-insensitive, `0` is
// the zero element. Terms with equal index are summed.
Element parse_element(AlgebraKind kind, std::string_view text);  // throws ParseError
std::string to_string(const Element& x);
std::string to_string(const SparseVector& v);  // same grammar, no algebra

std::ostream& operator<<(std::ostream& os, const Element& x);

}  // namespace wittlab
