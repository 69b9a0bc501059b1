#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "brsym/characters.hpp"
#include "table_oracle.hpp"

using namespace brsym;

namespace {

// Order by repeated multiplication, independent of the precomputed table.
int slow_order(const DicyclicGroup& G, const DicyclicElement& g) {
  int k = 1;
  for (auto x = g; x != G.identity(); x = G.multiply(x, g)) ++k;
  return k;
}

}  // namespace

TEST(Characters, MatchPrintedTables) {
  for (int n = 2; n <= 6; ++n) {
    const DicyclicGroup G(n);
    const auto table = character_table(G);
    ASSERT_EQ(table.size(), static_cast<std::size_t>(n + 3));
    for (std::size_t pos = 0; pos < table.size(); ++pos) {
      for (const auto& g : G.elements()) {
        EXPECT_EQ(table[pos].value(G, g), oracle::table_value(n, static_cast<int>(pos), g))
            << "n=" << n << " " << table[pos].label() << " at " << to_string(g);
      }
    }
  }
}

TEST(Characters, DegreeTwoMatchesCosine) {
  for (int n = 2; n <= 7; ++n) {
    const DicyclicGroup G(n);
    for (int h = 1; h < n; ++h) {
      const auto chi = degree2_character(G, h);
      for (int k = 0; k < 2 * n; ++k) {
        const double expected = 2 * std::cos(k * h * std::numbers::pi / n);
        EXPECT_NEAR(chi(k).to_complex().real(), expected, 1e-12);
        EXPECT_NEAR(chi(k).to_complex().imag(), 0.0, 1e-12);
      }
    }
  }
}

TEST(Characters, TableTwoHasPsiOneOfSEqualI) {
  const DicyclicGroup G(3);
  EXPECT_EQ(linear_character(G, 1).value(G, G.s()), root_of_unity(4, 1));
}

TEST(Characters, FirstAndSecondOrthogonality) {
  for (int n = 2; n <= 6; ++n) {
    const DicyclicGroup G(n);
    const auto table = character_table(G);
    for (std::size_t i = 0; i < table.size(); ++i) {
      EXPECT_TRUE(table[i].irreducible_ordinary());
      for (std::size_t j = 0; j < table.size(); ++j) {
        Cyclotomic sum(Rational(0), G.order());
        for (int x = 0; x < G.order(); ++x) sum += table[i](x) * table[j](x).conjugate();
        EXPECT_EQ(sum, Cyclotomic(i == j ? G.order() : 0L));
      }
    }
    // Column sums: sum_chi chi(g) conj(chi(g)) = |C_G(g)|.
    for (const auto& cls : G.conjugacy_classes()) {
      const int x = G.index(cls.front());
      Cyclotomic sum(Rational(0), G.order());
      for (const auto& chi : table) sum += chi(x) * chi(x).conjugate();
      EXPECT_EQ(sum, Cyclotomic(static_cast<long>(G.order() / cls.size())));
    }
  }
}

TEST(Characters, DegreesSquaredSumToOrder) {
  for (int n = 1; n <= 6; ++n) {
    const DicyclicGroup G(n);
    int total = 0;
    for (const auto& chi : character_table(G)) total += chi.degree() * chi.degree();
    EXPECT_EQ(total, G.order());
  }
}

TEST(Characters, PRegularElementsByOrder) {
  for (int n = 1; n <= 8; ++n) {
    const DicyclicGroup G(n);
    for (int p : {2, 3, 5, 7}) {
      std::vector<DicyclicElement> expected;
      for (const auto& g : G.elements()) {
        if (std::gcd(slow_order(G, g), p) == 1) expected.push_back(g);
      }
      EXPECT_EQ(p_regular_elements(G, p), expected) << n << " " << p;
    }
  }
}

TEST(Characters, TwoRegularElementsAreOddRotations) {
  const DicyclicGroup G(6);
  for (const auto& g : p_regular_elements(G, 2)) {
    EXPECT_EQ(g.b, 0);
    EXPECT_EQ(slow_order(G, g) % 2, 1);
  }
}

TEST(Characters, SplitOrder) {
  const auto s = split_order(15, 5);
  EXPECT_EQ(s.t, 1);
  EXPECT_EQ(s.p_power, 5);
  EXPECT_EQ(s.l, 12);
  EXPECT_EQ(split_order(3, 3).l, 4);
  EXPECT_EQ(split_order(2, 2).l, 1);
  EXPECT_EQ(split_order(2, 3).l, 8);
  EXPECT_THROW(split_order(3, 4), std::invalid_argument);
}

TEST(Characters, BrauerCountEqualsRegularClassCount) {
  for (int n = 2; n <= 10; ++n) {
    const DicyclicGroup G(n);
    for (int p : {2, 3, 5, 7}) {
      EXPECT_EQ(brauer_characters(G, p).size(), p_regular_classes(G, p).size()) << n << " " << p;
    }
  }
}

TEST(Characters, BrauerListAtThreeThree) {
  // T_12, p = 3: r^0, r^3 and the six r^a s are 3-regular; four classes.
  const DicyclicGroup G(3);
  EXPECT_EQ(p_regular_elements(G, 3).size(), 8u);
  const auto chars = brauer_characters(G, 3);
  ASSERT_EQ(chars.size(), 4u);
  for (const auto& phi : chars) EXPECT_TRUE(phi.linear());
}

TEST(Characters, BrauerRestrictionDomain) {
  const DicyclicGroup G(15);
  const auto phi = brauer_restriction(G, degree2_character(G, 4), 5);
  EXPECT_TRUE(phi.brauer());
  EXPECT_EQ(phi.prime(), 5);
  EXPECT_EQ(phi.domain_size(), static_cast<int>(p_regular_elements(G, 5).size()));
  for (int x = 0; x < G.order(); ++x) {
    if (!phi.in_domain(x)) {
      EXPECT_TRUE(phi(x).is_zero());
    }
  }
  EXPECT_THROW(brauer_restriction(G, phi, 5), std::invalid_argument);
}

TEST(Characters, BrauerCharactersAreDistinctOnRegularClasses) {
  for (int n = 2; n <= 6; ++n) {
    const DicyclicGroup G(n);
    for (int p : {2, 3, 5}) {
      const auto chars = brauer_characters(G, p);
      for (std::size_t i = 0; i < chars.size(); ++i) {
        for (std::size_t j = i + 1; j < chars.size(); ++j) EXPECT_NE(chars[i].values(), chars[j].values());
      }
    }
  }
}

TEST(Characters, DecomposeSumAndProduct) {
  const DicyclicGroup G(4);
  const auto table = character_table(G);
  const auto sum = character_sum(G, {table[1], table[4], table[4]});
  const auto parts = decompose(G, sum);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], std::make_pair(1, 1));
  EXPECT_EQ(parts[1], std::make_pair(4, 2));
  EXPECT_THROW(decompose(G, brauer_restriction(G, table[0], 2)), std::invalid_argument);
}

TEST(Characters, Labels) {
  const DicyclicGroup G(3);
  EXPECT_EQ(linear_character(G, 2).label(), "psi:2");
  EXPECT_EQ(degree2_character(G, 1).label(), "chi:1");
  EXPECT_THROW(linear_character(G, 4), std::invalid_argument);
  EXPECT_THROW(degree2_character(G, 0), std::invalid_argument);
}
