#pragma once

#include <iosfwd>
#include <span>
#include <variant>
#include <vector>

#include "wittlab/rational.hpp"
#include "wittlab/sparse_vector.hpp"

namespace wittlab {

// A linear subspace of Q^window, stored as its canonical basis: reduced row
// echelon form with the leading (smallest) index of each vector as pivot,
// monic pivots, pivots strictly increasing, and every pivot column zero in
// the other basis vectors. Two subspaces are equal iff their bases are.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(IndexWindow window) : window_(window) {}

  // Row-reduces an arbitrary spanning set. Throws PreconditionError if a
  // vector is not supported in the window.
  static Subspace span(IndexWindow window, std::span<const SparseVector> vectors);
  static Subspace full(IndexWindow window);

  [[nodiscard]] const IndexWindow& window() const { return window_; }
  [[nodiscard]] const std::vector<SparseVector>& basis() const { return basis_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] bool is_zero() const { return basis_.empty(); }

  [[nodiscard]] bool contains(const SparseVector& v) const;
  [[nodiscard]] bool is_subspace_of(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  IndexWindow window_;
  std::vector<SparseVector> basis_;
};

std::ostream& operator<<(std::ostream& os, const Subspace& s);

struct UniqueSolution {
  SparseVector value;
};

struct ParametricSolution {
  SparseVector particular;
  Subspace kernel;
};

struct Inconsistent {};

using SolveResult = std::variant<UniqueSolution, ParametricSolution, Inconsistent>;

// Solves <rows[k], v> = rhs[k] for v supported in `window`.
SolveResult solve_linear_system(std::span<const SparseVector> rows, std::span<const Rational> rhs,
                                IndexWindow window);

// {v supported in window : <r, v> = 0 for every row r}.
Subspace kernel_basis(std::span<const SparseVector> rows, IndexWindow window);

std::size_t rank(std::span<const SparseVector> rows);

// Canonical basis of A ∩ B. Both must share a window.
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

}  // namespace wittlab
