#include <gtest/gtest.h>

#include <random>

#include "hollab/integer.hpp"
#include "hollab/modular.hpp"
#include "hollab/smith.hpp"

using namespace hollab;

TEST(Valuation, Examples) {
  EXPECT_EQ(vp(std::int64_t{12}, std::int64_t{2}), 2u);
  EXPECT_EQ(vp(Int(3 * 3 - 1), 2ul), 3u);
  EXPECT_EQ(vp(Int(243 - 1), 2ul), 1u);
  EXPECT_THROW(vp(std::int64_t{0}, std::int64_t{2}), std::exception);
}

TEST(Valuation, Additive) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    std::int64_t a = static_cast<std::int64_t>(rng() % 100000) + 1, b = static_cast<std::int64_t>(rng() % 100000) + 1;
    for (std::int64_t p : {2, 3, 5, 7}) EXPECT_EQ(vp(a * b, p), vp(a, p) + vp(b, p));
  }
}

TEST(Smith, TrivialCases) {
  EXPECT_EQ(smith_normal_form(IntegerMatrix::identity(3)), (std::vector<Int>{1, 1, 1}));
  EXPECT_EQ(smith_normal_form(IntegerMatrix(2, 2)), (std::vector<Int>{0, 0}));
}

namespace {

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long span) {
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = static_cast<long>(rng() % (2 * span + 1)) - span;
  return m;
}

// products of elementary matrices: unimodular by construction
IntegerMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntegerMatrix u = IntegerMatrix::identity(n);
  for (int t = 0; t < 12 && n > 1; ++t) {
    std::size_t i = rng() % n, j = rng() % n;
    if (i == j) continue;
    u.add_row_multiple(i, j, static_cast<long>(rng() % 5) - 2);
    if (rng() % 3 == 0) u.swap_rows(i, j);
  }
  return u;
}

Int det_bareiss(IntegerMatrix m) {
  const std::size_t n = m.rows();
  Int prev = 1, sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && m.at(s, k) == 0) ++s;
      if (s == n) return 0;
      m.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

}  // namespace

TEST(Smith, DivisibilityAndDeterminant) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 5;
    IntegerMatrix m = random_matrix(rng, n, n, 6);
    auto f = smith_normal_form(m);
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
      if (f[i] != 0 && f[i + 1] != 0) EXPECT_EQ(f[i + 1] % f[i], 0) << m.to_string();
    Int det = det_bareiss(m);
    if (det != 0) {
      Int prod = 1;
      for (const auto& v : f) prod *= v;
      EXPECT_EQ(prod, abs(det)) << m.to_string();
    }
  }
}

TEST(Smith, UnimodularInvariance) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntegerMatrix m = random_matrix(rng, r, c, 9);
    EXPECT_EQ(smith_normal_form(random_unimodular(rng, r) * m * random_unimodular(rng, c)), smith_normal_form(m));
  }
}

TEST(Smith, DecompositionReassembles) {
  std::mt19937_64 rng(17);
  IntegerMatrix m = random_matrix(rng, 4, 6, 20);
  auto s = smith_decompose(m);
  EXPECT_EQ(s.U * m * s.V, s.D);
}

TEST(UnitGenerators, TwoPowers) {
  auto g8 = aut_cyclic_generators(8);
  ASSERT_EQ(g8.size(), 2u);
  EXPECT_EQ(g8[0].unit, 3);
  EXPECT_EQ(g8[0].order, 2);
  EXPECT_EQ(g8[1].unit, 7);
  EXPECT_EQ(g8[1].order, 2);
  auto g16 = aut_cyclic_generators(16);
  EXPECT_EQ(g16[0].unit, 3);
  EXPECT_EQ(g16[0].order, 4);
  EXPECT_EQ(g16[1].unit, 15);
  EXPECT_EQ(pow_mod(3, 4, 16), 1);
}

TEST(UnitGenerators, OddPrimePowerMatchesExhaustiveOrders) {
  for (std::int64_t m : {9, 27, 25, 49}) {
    auto g = aut_cyclic_generators(m);
    ASSERT_EQ(g.size(), 1u);
    // oracle: the smallest unit whose powers hit every unit
    std::int64_t smallest = 0, units = 0;
    for (std::int64_t a = 1; a < m; ++a) units += gcd64(a, m) == 1;
    for (std::int64_t a = 2; a < m && !smallest; ++a) {
      if (gcd64(a, m) != 1) continue;
      std::int64_t x = a, k = 1;
      while (x != 1) x = x * a % m, ++k;
      if (k == units) smallest = a;
    }
    EXPECT_EQ(g[0].unit, smallest);
    EXPECT_EQ(g[0].order, units);
  }
  EXPECT_EQ(aut_cyclic_generators(9)[0].unit, 2);
}

TEST(GLOrder, FormulaAgainstEnumeration) {
  EXPECT_EQ(gl_order(2, 2, 1), 6);
  EXPECT_EQ(gl_order(1, 3, 1), 2);
  EXPECT_EQ(gl_order(2, 2, 2), 96);
  EXPECT_EQ(Int(enumerate_gl(2, 4).size()), gl_order(2, 2, 2));
  EXPECT_EQ(Int(enumerate_gl(2, 3).size()), gl_order(2, 3, 1));
  EXPECT_EQ(Int(enumerate_gl(3, 2).size()), gl_order(3, 2, 1));
}

TEST(Residues, MixedModulusIsAContractViolation) {
  EXPECT_THROW(Residue(1, 4) + Residue(1, 8), contract_violation);
  EXPECT_THROW(Residue(2, 4).inverse(), std::exception);
}
