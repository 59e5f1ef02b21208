#include "wittlab/linear_system.hpp"

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "wittlab/errors.hpp"

namespace wittlab {
namespace {

using testing::OracleRow;
using testing::Sampler;

OracleRow to_oracle(const SparseVector& v) {
  OracleRow r;
  for (const auto& [i, q] : v) r[i] = q.raw();
  return r;
}

SparseVector random_vector(Sampler& s, IndexWindow w, double density) {
  std::vector<Entry> entries;
  for (Index i = w.lo; i <= w.hi; ++i) {
    if (s.coin(density)) entries.push_back({i, s.rational(5, 4)});
  }
  return SparseVector::from_unsorted(std::move(entries));
}

TEST(SparseVectorTest, CanonicalStorage) {
  const auto v = SparseVector::from_unsorted({{3, Rational(1)}, {-2, Rational(2)}, {3, Rational(-1)}, {5, Rational(0)}});
  ASSERT_EQ(v.nnz(), 1u);
  EXPECT_EQ(v.get(-2), Rational(2));
  EXPECT_EQ(v.get(3), Rational(0));
  EXPECT_EQ(v.leading_index(), -2);
  EXPECT_EQ(v.support_window(), (IndexWindow{-2, -2}));
  EXPECT_TRUE(SparseVector{}.support_window().empty());
}

TEST(SparseVectorTest, ArithmeticDropsCancellations) {
  SparseVector a{{1, Rational(1)}, {2, Rational(3)}};
  const SparseVector b{{2, Rational(3)}, {4, Rational(1, 2)}};
  a -= b;
  EXPECT_EQ(a, (SparseVector{{1, Rational(1)}, {4, Rational(-1, 2)}}));
  EXPECT_EQ(a.shifted(2), (SparseVector{{3, Rational(1)}, {6, Rational(-1, 2)}}));
  EXPECT_EQ(a.dot(b), Rational(-1, 4));
  a.set(1, Rational(0));
  EXPECT_EQ(a.nnz(), 1u);
}

TEST(SubspaceTest, CanonicalBasisIsRref) {
  const IndexWindow w{0, 3};
  const std::vector<SparseVector> vs{
      {{0, Rational(2)}, {1, Rational(4)}},
      {{0, Rational(1)}, {2, Rational(1)}},
      {{1, Rational(2)}, {2, Rational(-1)}},  // dependent on the first two
  };
  const Subspace s = Subspace::span(w, vs);
  ASSERT_EQ(s.dim(), 2u);
  EXPECT_EQ(s.basis()[0], (SparseVector{{0, Rational(1)}, {2, Rational(1)}}));
  EXPECT_EQ(s.basis()[1], (SparseVector{{1, Rational(1)}, {2, Rational(-1, 2)}}));
}

TEST(SubspaceTest, SpanRejectsVectorsOutsideWindow) {
  const std::vector<SparseVector> vs{SparseVector::unit(7)};
  EXPECT_THROW(Subspace::span({0, 3}, vs), PreconditionError);
}

TEST(SubspaceTest, EqualityIgnoresSpanningSet) {
  Sampler s(11);
  for (int trial = 0; trial < 100; ++trial) {
    const IndexWindow w{-3, 4};
    std::vector<SparseVector> vs;
    for (int k = 0; k < 4; ++k) vs.push_back(random_vector(s, w, 0.6));
    // Shuffle in random combinations of the same vectors.
    std::vector<SparseVector> mixed = vs;
    for (auto& v : mixed) {
      for (const auto& u : vs) v.axpy(s.rational(3, 3), u);
    }
    std::vector<SparseVector> both = vs;
    both.insert(both.end(), mixed.begin(), mixed.end());
    const Subspace a = Subspace::span(w, vs);
    const Subspace b = Subspace::span(w, both);
    EXPECT_EQ(a, b);
    EXPECT_TRUE(Subspace::span(w, mixed).is_subspace_of(a));
  }
}

TEST(RankTest, AgreesWithOracle) {
  Sampler s(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = static_cast<int>(s.integer(1, 8));
    std::vector<SparseVector> vs;
    std::vector<OracleRow> os;
    for (int r = 0; r < rows; ++r) {
      vs.push_back(random_vector(s, {0, 6}, 0.4));
      os.push_back(to_oracle(vs.back()));
    }
    EXPECT_EQ(rank(vs), testing::oracle_rank(os));
  }
}

TEST(KernelTest, RankNullityAndOrthogonality) {
  Sampler s(13);
  for (int trial = 0; trial < 200; ++trial) {
    const IndexWindow w{-2, 5};
    std::vector<SparseVector> rows;
    for (int r = 0; r < s.integer(0, 9); ++r) rows.push_back(random_vector(s, w, 0.5));
    const Subspace k = kernel_basis(rows, w);
    EXPECT_EQ(k.dim() + rank(rows), w.size());
    for (const auto& v : k.basis()) {
      EXPECT_TRUE(v.supported_in(w));
      for (const auto& r : rows) EXPECT_TRUE(r.dot(v).is_zero());
    }
  }
}

TEST(KernelTest, RowsOutsideWindowRejected) {
  const std::vector<SparseVector> rows{{{0, Rational(1)}, {9, Rational(1)}}};
  EXPECT_THROW(kernel_basis(rows, {0, 2}), PreconditionError);
  const std::vector<SparseVector> inside{{{0, Rational(1)}, {2, Rational(1)}}};
  const Subspace k = kernel_basis(inside, {0, 2});
  EXPECT_EQ(k.dim(), 2u);
  EXPECT_FALSE(k.contains(SparseVector::unit(0)));
}

TEST(SolveTest, UniqueParametricInconsistent) {
  const IndexWindow w{1, 2};
  const std::vector<SparseVector> rows{{{1, Rational(1)}, {2, Rational(1)}}, {{1, Rational(1)}, {2, Rational(-1)}}};
  const std::vector<Rational> rhs{Rational(3), Rational(1)};
  const auto r = solve_linear_system(rows, rhs, w);
  ASSERT_TRUE(std::holds_alternative<UniqueSolution>(r));
  EXPECT_EQ(std::get<UniqueSolution>(r).value, (SparseVector{{1, Rational(2)}, {2, Rational(1)}}));

  const std::vector<SparseVector> one{rows[0]};
  const std::vector<Rational> rhs1{Rational(3)};
  const auto p = solve_linear_system(one, rhs1, w);
  ASSERT_TRUE(std::holds_alternative<ParametricSolution>(p));
  const auto& sol = std::get<ParametricSolution>(p);
  EXPECT_EQ(one[0].dot(sol.particular), Rational(3));
  EXPECT_EQ(sol.kernel.dim(), 1u);

  const std::vector<SparseVector> clash{rows[0], rows[0]};
  const std::vector<Rational> rhs2{Rational(3), Rational(4)};
  EXPECT_TRUE(std::holds_alternative<Inconsistent>(solve_linear_system(clash, rhs2, w)));
}

TEST(SolveTest, RandomSystemsSatisfyEveryRow) {
  Sampler s(14);
  for (int trial = 0; trial < 200; ++trial) {
    const IndexWindow w{0, 5};
    std::vector<SparseVector> rows;
    const SparseVector truth = random_vector(s, w, 0.7);
    std::vector<Rational> rhs;
    for (int r = 0; r < s.integer(1, 8); ++r) {
      rows.push_back(random_vector(s, w, 0.5));
      rhs.push_back(rows.back().dot(truth));
    }
    const auto result = solve_linear_system(rows, rhs, w);
    ASSERT_FALSE(std::holds_alternative<Inconsistent>(result));
    const SparseVector v = std::holds_alternative<UniqueSolution>(result)
                               ? std::get<UniqueSolution>(result).value
                               : std::get<ParametricSolution>(result).particular;
    for (std::size_t r = 0; r < rows.size(); ++r) EXPECT_EQ(rows[r].dot(v), rhs[r]);
    if (std::holds_alternative<UniqueSolution>(result)) EXPECT_EQ(v, truth);
  }
}

TEST(IntersectionTest, DimensionFormula) {
  Sampler s(15);
  for (int trial = 0; trial < 100; ++trial) {
    const IndexWindow w{0, 6};
    std::vector<SparseVector> va, vb;
    for (int k = 0; k < s.integer(0, 5); ++k) va.push_back(random_vector(s, w, 0.5));
    for (int k = 0; k < s.integer(0, 5); ++k) vb.push_back(random_vector(s, w, 0.5));
    const Subspace a = Subspace::span(w, va);
    const Subspace b = Subspace::span(w, vb);
    std::vector<SparseVector> all = va;
    all.insert(all.end(), vb.begin(), vb.end());
    const Subspace meet = subspace_intersection(a, b);
    EXPECT_EQ(meet.dim() + rank(all), a.dim() + b.dim());
    EXPECT_TRUE(meet.is_subspace_of(a));
    EXPECT_TRUE(meet.is_subspace_of(b));
  }
}

TEST(IntersectionTest, TrivialCases) {
  const IndexWindow w{0, 2};
  const Subspace full = Subspace::full(w);
  const Subspace zero(w);
  const std::vector<SparseVector> one{SparseVector::unit(1)};
  const Subspace line = Subspace::span(w, one);
  EXPECT_EQ(subspace_intersection(full, line), line);
  EXPECT_TRUE(subspace_intersection(zero, line).is_zero());
  EXPECT_THROW(subspace_intersection(line, Subspace::full({0, 3})), PreconditionError);
}

}  // namespace
}  // namespace wittlab
