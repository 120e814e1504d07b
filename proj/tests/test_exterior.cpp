#include "lcq/exterior.hpp"
#include "lcq/lattice.hpp"
#include "lcq/properties.hpp"

#include <gtest/gtest.h>

using namespace lcq;

TEST(Wedge, Generators) {
  const auto e1 = ExtElement::generator(3, 0), e2 = ExtElement::generator(3, 1),
             e3 = ExtElement::generator(3, 2);
  EXPECT_EQ(wedge(e1, e2), ExtElement::monomial(3, {0, 1}));
  EXPECT_EQ(wedge(e2, e1), ExtElement::monomial(3, {0, 1}, -1));
  EXPECT_TRUE(wedge(wedge(e1, e2), wedge(e1, e3)).is_zero());
  EXPECT_EQ(wedge(e1, e2).coefficient({0, 1}), 1);
}

TEST(Wedge, MonomialSorting) {
  EXPECT_EQ(ExtElement::monomial(4, {2, 0, 1}), ExtElement::monomial(4, {0, 1, 2}));
  EXPECT_EQ(ExtElement::monomial(4, {1, 0, 2}),
            ExtElement::monomial(4, {0, 1, 2}, -1));
  EXPECT_TRUE(ExtElement::monomial(4, {1, 1}).is_zero());
  EXPECT_THROW(ExtElement::monomial(2, {2}), DimensionError);
}

TEST(Wedge, RankMismatchAndOverflowDegree) {
  EXPECT_THROW(wedge(ExtElement::unit(2), ExtElement::unit(3)), DimensionError);
  const auto top = ExtElement::monomial(2, {0, 1});
  const auto w = wedge(top, ExtElement::generator(2, 0));
  EXPECT_TRUE(w.is_zero());
  EXPECT_EQ(w.degree(), 3u);
}

TEST(Theta, Examples) {
  EXPECT_EQ(theta(1), wedge(epsilon(1, 0), delta(1, 0)));
  const auto t5 = theta(5);
  EXPECT_EQ(t5.term_count(), 5u);
  for (const auto &[k, v] : t5.coeffs())
    EXPECT_EQ(v, 1);
  // eps_1 ^ delta_2 in genus 2 is (0, 3)
  EXPECT_EQ(theta(2).coefficient({0, 3}), 0);
  EXPECT_TRUE(theta(0).is_zero());
}

TEST(ThetaDivided, Examples) {
  const auto t53 = theta_divided(5, 3);
  EXPECT_EQ(t53.term_count(), 10u);
  EXPECT_EQ(t53.degree(), 6u);
  for (const auto &[k, v] : t53.coeffs())
    EXPECT_EQ(v, 1);
  EXPECT_EQ(theta_divided(4, 0), ExtElement::unit(8));
  EXPECT_EQ(theta_divided(3, 3), ExtElement::monomial(6, {0, 1, 2, 3, 4, 5}));
  EXPECT_TRUE(theta_divided(2, 3).is_zero());
}

TEST(ThetaDivided, IntegralityUpToGenusSix) {
  const Check c = properties::divided_power_integrality(6);
  EXPECT_TRUE(c.passed) << c.detail;
}

TEST(PdPair, Examples) {
  EXPECT_EQ(pd_pair(wedge(epsilon(2, 0), delta(2, 0)),
                    wedge(epsilon(2, 1), delta(2, 1))),
            1);
  // theta ^ theta = 2 eps0 delta0 eps1 delta1 in genus 2: the two cross
  // terms each contribute +1 and the squares vanish.
  EXPECT_EQ(pd_pair(theta(2), theta(2)), 2);
  const auto t4 = theta_divided(5, 4);
  for (std::size_t i = 0; i < 5; ++i)
    EXPECT_EQ(pd_pair(wedge(epsilon(5, i), delta(5, i)), t4), 1);
  EXPECT_THROW(pd_pair(theta(2), theta_divided(2, 2)), DimensionError);
  EXPECT_THROW(pd_pair(ExtElement::unit(3), ExtElement::unit(3)),
               DimensionError);
}

TEST(PdPair, BruteForceThetaSquare) {
  // Expand theta ^ theta over its 4 terms by hand.
  Integer sum = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      sum += pd_pair(ExtElement::monomial(4, {2 * i, 2 * i + 1}),
                     ExtElement::monomial(4, {2 * j, 2 * j + 1}));
  EXPECT_EQ(sum, 2);
}

TEST(PdPair, PerfectUpToGenusThree) {
  const Check c = properties::pd_perfect_pairing(3);
  EXPECT_TRUE(c.passed) << c.detail;
}

TEST(Alt2Basis, Ordering) {
  const auto b3 = alt2_basis(3);
  ASSERT_EQ(b3.size(), 3u);
  EXPECT_EQ(b3[0], std::make_pair(std::size_t{0}, std::size_t{1}));
  EXPECT_EQ(b3[1], std::make_pair(std::size_t{0}, std::size_t{2}));
  EXPECT_EQ(b3[2], std::make_pair(std::size_t{1}, std::size_t{2}));
  EXPECT_TRUE(alt2_basis(0).empty());
  const auto b10 = alt2_basis(10);
  ASSERT_EQ(b10.size(), 45u);
  EXPECT_EQ(b10.front(), std::make_pair(std::size_t{0}, std::size_t{1}));
  EXPECT_EQ(b10.back(), std::make_pair(std::size_t{8}, std::size_t{9}));
  for (std::size_t k = 0; k < b10.size(); ++k)
    EXPECT_EQ(alt2_index(10, b10[k].first, b10[k].second), k);
  EXPECT_EQ(lex_tuples(10, 2).size(), 45u);
}

TEST(SymplecticLabels, Bijection) {
  const std::size_t g = 4;
  std::vector<bool> seen(2 * g, false);
  for (std::size_t i = 0; i < g; ++i)
    for (auto kind : {SymplecticBasisLabel::Kind::Epsilon,
                      SymplecticBasisLabel::Kind::Delta}) {
      const SymplecticBasisLabel l{g, i, kind};
      const auto idx = l.ambient_index();
      EXPECT_FALSE(seen[idx]);
      seen[idx] = true;
      const auto back = SymplecticBasisLabel::from_ambient(g, idx);
      EXPECT_EQ(back.index, i);
      EXPECT_EQ(back.kind, kind);
    }
  EXPECT_THROW((SymplecticBasisLabel{2, 2, SymplecticBasisLabel::Kind::Delta}
                    .ambient_index()),
               DimensionError);
}

TEST(Wedge2Matrix, InducedActionIsUnimodular) {
  random::Engine rng(17);
  for (int t = 0; t < 20; ++t) {
    const auto m = static_cast<std::size_t>(random::uniform(rng, 0, 6));
    const IntMatrix u = random::unimodular(rng, m);
    EXPECT_EQ(det_abs(wedge2_matrix(u)), 1);
    // agrees with wedging images of basis vectors
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        ExtElement ui(m, 1), uj(m, 1);
        for (std::size_t r = 0; r < m; ++r) {
          ui += ExtElement::monomial(m, {r}, u(r, i));
          uj += ExtElement::monomial(m, {r}, u(r, j));
        }
        const auto coords = to_coordinates(wedge(ui, uj));
        const auto w = wedge2_matrix(u);
        for (std::size_t k = 0; k < coords.size(); ++k)
          EXPECT_EQ(coords[k], w(k, alt2_index(m, i, j)));
      }
  }
}

TEST(WedgeProperties, Random) {
  random::Engine rng(99);
  const Check c = properties::wedge_graded_commutative(rng, 150);
  EXPECT_TRUE(c.passed) << c.detail;
}
