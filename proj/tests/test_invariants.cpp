#include <gtest/gtest.h>

#include <numeric>

#include "betashift/bowen_franks.hpp"
#include "betashift/catalog.hpp"
#include "betashift/covers.hpp"
#include "betashift/integer_matrix.hpp"
#include "support.hpp"

using namespace betashift;
using betashift::test::G;

namespace {

IntegerMatrix M(std::vector<std::vector<BigInt>> rows) { return IntegerMatrix::from_rows(rows); }

IntegerMatrix random_matrix(std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-9, 9);
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(test::rng());
  }
  return m;
}

// Cofactor expansion, for cross-checking on small matrices.
BigInt laplace(const IntegerMatrix& m) {
  std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntegerMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0, k = 0; j < n; ++j) {
        if (j != c) minor.at(i - 1, k++) = m.at(i, j);
      }
    }
    BigInt term = m.at(0, c) * laplace(minor);
    total += c % 2 == 0 ? term : BigInt(-term);
  }
  return total;
}

}  // namespace

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(IntegerMatrix::identity(1) - M({{2}})), -1);
  IntegerMatrix a = adjacency_matrix(fischer_cover(G("11(10)")).graph);
  EXPECT_EQ(determinant(IntegerMatrix::identity(4) - a), -1);
  IntegerMatrix b = adjacency_matrix(fischer_cover(G("(110)")).graph);
  EXPECT_EQ(determinant(IntegerMatrix::identity(3) - b), -2);
  EXPECT_EQ(determinant(M({{0, 1}, {1, 0}})), -1);
  EXPECT_ERROR_CODE(determinant(IntegerMatrix(2, 3)), ErrorCode::kPrecondition);
}

TEST(Determinant, MatchesCofactorExpansion) {
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    IntegerMatrix m = random_matrix(n, n);
    ASSERT_EQ(determinant(m), laplace(m)) << m.to_string();
  }
}

TEST(Smith, Unit) {
  SmithNormalForm snf = smith_normal_form(M({{-1}}));
  EXPECT_EQ(snf.diagonal, M({{1}}));
  EXPECT_EQ(snf.left, M({{-1}}));
  EXPECT_EQ(snf.right, M({{1}}));
  EXPECT_EQ(snf.divisors, (std::vector<BigInt>{1}));
}

TEST(Smith, NeedsDivisibilityFix) {
  SmithNormalForm snf = smith_normal_form(M({{2, 0}, {0, 3}}));
  EXPECT_EQ(snf.divisors, (std::vector<BigInt>{1, 6}));
  EXPECT_TRUE(verify_certificate(M({{2, 0}, {0, 3}}), snf));
}

TEST(Smith, Rectangular) {
  IntegerMatrix m = M({{2, 4, 4}, {-6, 6, 12}});
  SmithNormalForm snf = smith_normal_form(m);
  EXPECT_EQ(snf.divisors, (std::vector<BigInt>{2, 6}));
  EXPECT_TRUE(verify_certificate(m, snf));
  EXPECT_EQ(smith_normal_form(IntegerMatrix(2, 2)).divisors, (std::vector<BigInt>{0, 0}));
}

TEST(Smith, FischerOfOneOneZero) {
  IntegerMatrix a = adjacency_matrix(fischer_cover(G("(110)")).graph);
  SmithNormalForm snf = smith_normal_form(IntegerMatrix::identity(3) - a);
  EXPECT_EQ(snf.divisors, (std::vector<BigInt>{1, 1, 2}));
}

TEST(Smith, RandomCertificates) {
  std::uniform_int_distribution<int> size(1, 8);
  for (int trial = 0; trial < 300; ++trial) {
    IntegerMatrix m = random_matrix(size(test::rng()), size(test::rng()));
    SmithNormalForm snf = smith_normal_form(m);
    ASSERT_TRUE(verify_certificate(m, snf)) << m.to_string();
    if (m.is_square()) {
      BigInt product = 1;
      for (const BigInt& d : snf.divisors) product *= d;
      ASSERT_EQ(determinant(m) * determinant(snf.left) * determinant(snf.right), product);
    }
  }
}

TEST(Smith, CertificateCatchesTampering) {
  IntegerMatrix m = M({{2, 1}, {1, 3}});
  SmithNormalForm snf = smith_normal_form(m);
  ASSERT_TRUE(verify_certificate(m, snf));
  snf.divisors.back() += 1;
  EXPECT_FALSE(verify_certificate(m, snf));
}

TEST(BowenFranks, Examples) {
  BowenFranks full = bowen_franks(M({{2}}));
  EXPECT_TRUE(full.torsion.empty());
  EXPECT_EQ(full.free_rank, 0u);
  EXPECT_EQ(full.det_sign, -1);
  EXPECT_EQ(full.to_string(), "-(0)");

  BowenFranks b = bowen_franks(adjacency_matrix(fischer_cover(G("(110)")).graph));
  EXPECT_EQ(b, cyclic_plus_free(2, 0, -1));
  EXPECT_EQ(b.group_string(), "Z/2");

  BowenFranks p = bowen_franks(adjacency_matrix(fiber_product_cover(G("1(10)")).graph));
  EXPECT_EQ(p.group_string(), "Z^2");
  EXPECT_EQ(p.det_sign, 0);
  EXPECT_ERROR_CODE(bowen_franks(IntegerMatrix(1, 2)), ErrorCode::kPrecondition);
}

TEST(BowenFranks, GroupStrings) {
  EXPECT_EQ(cyclic_plus_free(2, 2, 0).group_string(), "Z/2 + Z^2");
  EXPECT_EQ(cyclic_plus_free(1, 1, 0).group_string(), "Z");
  EXPECT_EQ(cyclic_plus_free(1, 0, 1).group_string(), "0");
}

TEST(BowenFranks, PermutationInvariant) {
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    std::uniform_int_distribution<int> entry(0, 3);
    IntegerMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a.at(i, j) = entry(test::rng());
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), test::rng());
    IntegerMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) b.at(perm[i], perm[j]) = a.at(i, j);
    }
    ASSERT_EQ(bowen_franks(a), bowen_franks(b));
  }
}

TEST(PeriodSum, Examples) {
  EXPECT_EQ(period_sum(G("11(10)")).S, 1);
  EXPECT_EQ(period_sum(G("11(10)")).N, 2);
  EXPECT_EQ(period_sum(G("(110)")).S, 2);
  EXPECT_EQ(period_sum(G("(1)")).S, 1);
  EXPECT_EQ(period_sum(G("2(01)")).S, 1);
}

TEST(ClosedForms, Examples) {
  ClosedFormReport gm = verify_closed_forms(G("(10)"));
  EXPECT_TRUE(gm.matches);
  EXPECT_EQ(gm.bf_fischer.to_string(), "-(0)");
  EXPECT_EQ(gm.expansion_digit_sum, BigInt(2));
  EXPECT_FALSE(gm.bf_fiber.has_value());

  ClosedFormReport a = verify_closed_forms(G("11(10)"));
  EXPECT_TRUE(a.matches);
  EXPECT_EQ(a.bf_fischer.to_string(), "-(0)");
  ASSERT_TRUE(a.bf_fiber.has_value());
  EXPECT_EQ(a.bf_fiber->group_string(), "Z^2");

  ClosedFormReport b = verify_closed_forms(G("11(110)"));
  EXPECT_TRUE(b.matches);
  EXPECT_EQ(b.bf_fischer.to_string(), "-(Z/2)");
  EXPECT_EQ(b.bf_fiber->group_string(), "Z/2 + Z^2");
}

TEST(ClosedForms, ExhaustiveSmallCatalog) {
  for (const GeneratingSequence& g : enumerate_generating(4, 4, 2)) {
    ClosedFormReport r = verify_closed_forms(g);
    ASSERT_TRUE(r.matches) << g.to_string() << ": "
                           << (r.mismatches.empty() ? "" : r.mismatches.front());
    ASSERT_EQ(r.bf_fischer.det_sign, -1);
  }
}
