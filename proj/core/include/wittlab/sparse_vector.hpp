#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "wittlab/rational.hpp"

namespace wittlab {

using Index = std::int64_t;

// Closed integer range [lo, hi]. Empty when lo > hi.
struct IndexWindow {
  Index lo = 0;
  Index hi = -1;

  [[nodiscard]] bool empty() const { return lo > hi; }
  [[nodiscard]] std::size_t size() const { return empty() ? 0 : static_cast<std::size_t>(hi - lo + 1); }
  [[nodiscard]] bool contains(Index i) const { return lo <= i && i <= hi; }
  [[nodiscard]] bool contains(const IndexWindow& other) const {
    return other.empty() || (lo <= other.lo && other.hi <= hi);
  }

  friend bool operator==(const IndexWindow&, const IndexWindow&) = default;
};

// Smallest window containing both.
IndexWindow hull(const IndexWindow& a, const IndexWindow& b);

struct Entry {
  Index index;
  Rational value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

// Finitely supported map Index -> Rational. Entries are kept sorted by index
// with no stored zeros, so equality is structural.
class SparseVector {
 public:
  SparseVector() = default;
  SparseVector(std::initializer_list<std::pair<Index, Rational>> entries);

  static SparseVector unit(Index i, Rational value = Rational(1));
  // Accepts entries in any order, with repeats (summed) and zeros (dropped).
  static SparseVector from_unsorted(std::vector<Entry> entries);

  [[nodiscard]] bool is_zero() const { return entries_.empty(); }
  [[nodiscard]] std::size_t nnz() const { return entries_.size(); }
  [[nodiscard]] Rational get(Index i) const;
  [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }

  // Smallest / largest stored index.
  [[nodiscard]] std::optional<Index> leading_index() const;
  [[nodiscard]] std::optional<Index> trailing_index() const;
  // Window spanned by the support; empty window for the zero vector.
  [[nodiscard]] IndexWindow support_window() const;
  [[nodiscard]] bool supported_in(const IndexWindow& w) const;

  void set(Index i, const Rational& value);
  // this += factor * other
  void axpy(const Rational& factor, const SparseVector& other);
  void scale(const Rational& factor);
  // Entries shifted by `offset` (index i becomes i + offset).
  [[nodiscard]] SparseVector shifted(Index offset) const;

  [[nodiscard]] Rational dot(const SparseVector& other) const;

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  SparseVector& operator+=(const SparseVector& rhs);
  SparseVector& operator-=(const SparseVector& rhs);
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const Rational& c, SparseVector v) {
    v.scale(c);
    return v;
  }
  friend SparseVector operator-(SparseVector v) {
    v.scale(Rational(-1));
    return v;
  }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

std::ostream& operator<<(std::ostream& os, const SparseVector& v);

}  // namespace wittlab
