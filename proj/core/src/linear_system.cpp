#include "wittlab/linear_system.hpp"

#include <map>
#include <ostream>
#include <string>

#include "wittlab/errors.hpp"

namespace wittlab {
namespace {

// Incremental Gauss-Jordan elimination. Rows are kept in reduced row echelon
// form keyed by pivot, optionally carrying a right-hand side.
class Echelon {
 public:
  struct Row {
    SparseVector coeffs;
    Rational rhs;
  };

  // Returns false when the row reduces to 0 = nonzero.
  bool insert(SparseVector row, Rational rhs = Rational(0)) {
    std::vector<std::pair<Index, Rational>> hits;
    for (const auto& e : row) {
      if (pivots_.contains(e.index)) hits.emplace_back(e.index, e.value);
    }
    // Pivot rows vanish on every other pivot column, so the coefficients
    // collected above stay valid while we subtract.
    for (const auto& [p, c] : hits) {
      const Row& pr = pivots_.at(p);
      row.axpy(-c, pr.coeffs);
      rhs -= c * pr.rhs;
    }
    if (row.is_zero()) return rhs.is_zero();

    const Index q = *row.leading_index();
    const Rational inv = row.get(q).inverse();
    row.scale(inv);
    rhs *= inv;
    for (auto& [p, pr] : pivots_) {
      const Rational c = pr.coeffs.get(q);
      if (c.is_zero()) continue;
      pr.coeffs.axpy(-c, row);
      pr.rhs -= c * rhs;
    }
    pivots_.emplace(q, Row{std::move(row), std::move(rhs)});
    return true;
  }

  [[nodiscard]] const std::map<Index, Row>& pivots() const { return pivots_; }

 private:
  std::map<Index, Row> pivots_;
};

void require_in_window(const SparseVector& v, const IndexWindow& window, const char* what) {
  if (!v.supported_in(window)) {
    throw PreconditionError(std::string(what) + " has support outside window [" +
                            std::to_string(window.lo) + ", " + std::to_string(window.hi) + "]");
  }
}

// Null space of the echelon rows restricted to `window`, one vector per free
// column (not yet canonical).
std::vector<SparseVector> null_vectors(const Echelon& ech, const IndexWindow& window) {
  std::vector<SparseVector> out;
  for (Index f = window.lo; f <= window.hi; ++f) {
    if (ech.pivots().contains(f)) continue;
    std::vector<Entry> raw{{f, Rational(1)}};
    for (const auto& [p, row] : ech.pivots()) {
      Rational c = row.coeffs.get(f);
      if (!c.is_zero()) raw.push_back({p, -c});
    }
    out.push_back(SparseVector::from_unsorted(std::move(raw)));
  }
  return out;
}

}  // namespace

Subspace Subspace::span(IndexWindow window, std::span<const SparseVector> vectors) {
  Echelon ech;
  for (const auto& v : vectors) {
    require_in_window(v, window, "spanning vector");
    ech.insert(v);
  }
  Subspace s(window);
  s.basis_.reserve(ech.pivots().size());
  for (const auto& [p, row] : ech.pivots()) s.basis_.push_back(row.coeffs);
  return s;
}

Subspace Subspace::full(IndexWindow window) {
  Subspace s(window);
  for (Index i = window.lo; i <= window.hi; ++i) s.basis_.push_back(SparseVector::unit(i));
  return s;
}

bool Subspace::contains(const SparseVector& v) const {
  if (!v.supported_in(window_)) return false;
  SparseVector r = v;
  // Basis is in RREF, so one sweep over the pivots reduces completely.
  for (const auto& b : basis_) {
    const Rational c = r.get(*b.leading_index());
    if (!c.is_zero()) r.axpy(-c, b);
  }
  return r.is_zero();
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  for (const auto& b : basis_) {
    if (!other.contains(b)) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Subspace& s) {
  os << "Subspace[" << s.window().lo << ".." << s.window().hi << "](dim=" << s.dim();
  for (const auto& b : s.basis()) os << ", " << b;
  return os << ')';
}

SolveResult solve_linear_system(std::span<const SparseVector> rows, std::span<const Rational> rhs,
                                IndexWindow window) {
  if (rows.size() != rhs.size()) {
    throw PreconditionError("solve_linear_system: rows and rhs differ in length");
  }
  Echelon ech;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    require_in_window(rows[k], window, "constraint row");
    if (!ech.insert(rows[k], rhs[k])) return Inconsistent{};
  }
  std::vector<Entry> particular;
  for (const auto& [p, row] : ech.pivots()) particular.push_back({p, row.rhs});
  SparseVector value = SparseVector::from_unsorted(std::move(particular));
  if (ech.pivots().size() == window.size()) return UniqueSolution{std::move(value)};
  const auto nulls = null_vectors(ech, window);
  return ParametricSolution{std::move(value), Subspace::span(window, nulls)};
}

Subspace kernel_basis(std::span<const SparseVector> rows, IndexWindow window) {
  Echelon ech;
  for (const auto& r : rows) {
    require_in_window(r, window, "constraint row");
    ech.insert(r);
  }
  const auto nulls = null_vectors(ech, window);
  return Subspace::span(window, nulls);
}

std::size_t rank(std::span<const SparseVector> rows) {
  Echelon ech;
  for (const auto& r : rows) ech.insert(r);
  return ech.pivots().size();
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.window() != b.window()) {
    throw PreconditionError("subspace_intersection: subspaces live over different windows");
  }
  // A ∩ B is the common kernel of the annihilators of A and B.
  const Subspace ann_a = kernel_basis(a.basis(), a.window());
  const Subspace ann_b = kernel_basis(b.basis(), b.window());
  std::vector<SparseVector> rows = ann_a.basis();
  rows.insert(rows.end(), ann_b.basis().begin(), ann_b.basis().end());
  return kernel_basis(rows, a.window());
}

}  // namespace wittlab
