#include "lcq/lattice.hpp"
#include "lcq/properties.hpp"
#include "lcq/random.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lcq;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  return {v.begin(), v.end()};
}

oracle::Mat to_oracle(const IntMatrix &m) {
  oracle::Mat o(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      o[r][c] = m(r, c).get_si();
  return o;
}

IntMatrix e_minus_i(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = i == j ? 0 : 1;
  return m;
}

} // namespace

TEST(Snf, DiagonalTwoThree) {
  const SmithForm s = snf(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(s.D, (IntMatrix{{1, 0}, {0, 6}}));
  const IntMatrix a{{2, 0}, {0, 3}};
  EXPECT_EQ(s.U * a * s.V, s.D);
}

TEST(Snf, ZeroAndEmptyMatrices) {
  const IntMatrix z(2, 3);
  const SmithForm s = snf(z);
  EXPECT_TRUE(s.D.is_zero());
  EXPECT_EQ(s.rank(), 0u);

  const SmithForm e = snf(IntMatrix(0, 0));
  EXPECT_EQ(e.D.rows(), 0u);
  EXPECT_EQ(snf(IntMatrix(3, 0)).U, IntMatrix::identity(3));
}

TEST(Snf, EMinusIFiveMatchesOracle) {
  const IntMatrix a = e_minus_i(5);
  const SmithForm s = snf(a);
  // frozen from oracle::determinantal_divisors and the int64 elimination
  EXPECT_EQ(s.invariant_factors(), ints({1, 1, 1, 1, 4}));
  std::vector<Integer> dd;
  for (auto d : oracle::determinantal_divisors(to_oracle(a)))
    dd.emplace_back(static_cast<long>(d));
  EXPECT_EQ(s.invariant_factors(), dd);
}

TEST(Snf, AgreesWithDeterminantalDivisorsOnSmallRandom) {
  random::Engine rng(7);
  for (int t = 0; t < 80; ++t) {
    const auto r = static_cast<std::size_t>(random::uniform(rng, 1, 4));
    const auto c = static_cast<std::size_t>(random::uniform(rng, 1, 4));
    const IntMatrix a = random::matrix(rng, r, c, -6, 6);
    std::vector<Integer> dd;
    for (auto d : oracle::determinantal_divisors(to_oracle(a)))
      dd.emplace_back(static_cast<long>(d));
    EXPECT_EQ(snf(a).invariant_factors(), dd) << a;
  }
}

TEST(Snf, NoOverflowOnLargeEntries) {
  IntMatrix a{{1, 0}, {0, 1}};
  a(0, 0) = Integer("123456789012345678901234567890");
  a(1, 1) = Integer("987654321098765432109876543210");
  a(0, 1) = Integer("-55555555555555555555555555");
  const SmithForm s = snf(a);
  EXPECT_EQ(s.U * a * s.V, s.D);
  EXPECT_EQ(s.D(0, 0) * s.D(1, 1), det_abs(a));
}

TEST(Cokernel, Examples) {
  EXPECT_EQ(cokernel(IntMatrix{{2}}), AbelianGroup::cyclic(2));
  EXPECT_EQ(cokernel(IntMatrix(3, 0)), AbelianGroup::free(3));
  EXPECT_EQ(cokernel(IntMatrix(0, 4)), AbelianGroup::trivial());
  EXPECT_EQ(cokernel(e_minus_i(5)), (AbelianGroup{0, ints({4})}));
  EXPECT_EQ(cokernel(e_minus_i(5)).order(), 4);
  // Z^2 / <(2,0),(0,4),(2,2)>
  EXPECT_EQ(cokernel(IntMatrix{{2, 0, 2}, {0, 4, 2}}),
            (AbelianGroup{0, ints({2, 2})}));
}

TEST(Determinant, Examples) {
  EXPECT_EQ(det_abs(IntMatrix::identity(4)), 1);
  EXPECT_EQ(det_abs(IntMatrix{{2, 0}, {0, 1}}), 2);
  EXPECT_EQ(det(e_minus_i(5)), 4);
  EXPECT_EQ(det(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(det(IntMatrix{{1, 2}, {2, 4}}), 0);
  EXPECT_THROW(det_abs(IntMatrix(2, 3)), DimensionError);
}

TEST(Determinant, MatchesCofactorExpansion) {
  random::Engine rng(11);
  for (int t = 0; t < 60; ++t) {
    const auto n = static_cast<std::size_t>(random::uniform(rng, 0, 6));
    const IntMatrix a = random::matrix(rng, n, n, -5, 5);
    EXPECT_EQ(det(a), Integer(static_cast<long>(oracle::laplace_det(to_oracle(a)))));
  }
}

TEST(Kernel, Examples) {
  const IntMatrix k = kernel_basis(IntMatrix{{1, 1}});
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(abs(k(0, 0)), 1);
  EXPECT_EQ(k(1, 0), -k(0, 0));

  EXPECT_EQ(kernel_basis(IntMatrix::identity(3)).cols(), 0u);

  // Enumerating |x|,|y| <= 6 with 2x + 4y = 0 gives multiples of (2,-1), so
  // the kernel lattice is generated by (2,-1) and not by (4,-2).
  const IntMatrix k24 = kernel_basis(IntMatrix{{2, 4}});
  ASSERT_EQ(k24.cols(), 1u);
  EXPECT_EQ(abs(k24(0, 0)), 2);
  EXPECT_EQ(abs(k24(1, 0)), 1);
  EXPECT_EQ(k24(0, 0) * k24(1, 0), -2);
  for (long x = -6; x <= 6; ++x)
    for (long y = -6; y <= 6; ++y)
      if (2 * x + 4 * y == 0) {
        EXPECT_EQ(x, -2 * y);
      }
}

TEST(Rank, FractionFreeRank) {
  EXPECT_EQ(rank(IntMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rank(IntMatrix(3, 3)), 0u);
  EXPECT_EQ(rank(IntMatrix::identity(5)), 5u);
  random::Engine rng(3);
  for (int t = 0; t < 40; ++t) {
    const IntMatrix a = random::matrix(rng, 5, 7, -3, 3);
    EXPECT_EQ(rank(a), snf(a).rank());
    EXPECT_EQ(rank(a), rank(a.transpose()));
  }
}

TEST(LatticeProperties, RandomSuites) {
  random::Engine rng(2024);
  for (const auto &c : {properties::snf_decomposition(rng, 60, 15),
                        properties::cokernel_basis_invariance(rng, 40, 10),
                        properties::kernel_saturation(rng, 40, 10)})
    EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(LatticeProperties, Rank1DeterminantIdentity) {
  // det(E' - I) = (-1)^n (1 - tr E') for rank-1 E' = u v^T
  random::Engine rng(5);
  for (int t = 0; t < 40; ++t) {
    const auto n = static_cast<std::size_t>(random::uniform(rng, 1, 7));
    const IntMatrix u = random::matrix(rng, n, 1, -3, 3);
    const IntMatrix v = random::matrix(rng, 1, n, -3, 3);
    const IntMatrix e = u * v;
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      tr += e(i, i);
    Integer expect = 1 - tr;
    if (n % 2)
      expect = -expect;
    EXPECT_EQ(det(e - IntMatrix::identity(n)), expect);
  }
}
