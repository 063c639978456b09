#include <gtest/gtest.h>

#include <set>

#include "hollab/congruence.hpp"
#include "hollab/lie.hpp"

using namespace hollab;

namespace {

HolElement el(std::vector<std::vector<std::int64_t>> M, std::vector<std::int64_t> v, std::int64_t m) {
  return {ResidueMatrix(M, m), ResidueVector(std::move(v), m)};
}

}  // namespace

TEST(Gamma, OrdersByEnumeration) {
  for (GammaLevel L : {GammaLevel{1, 1, 2}, GammaLevel{1, 1, 3}, GammaLevel{1, 2, 3}, GammaLevel{2, 1, 2},
                       GammaLevel{2, 1, 3}}) {
    auto all = gamma_enumerate(L);
    EXPECT_EQ(Int(all.size()), gamma_order(L));
    for (const auto& g : all) ASSERT_TRUE(in_gamma(g, L));
    // closed under multiplication
    std::set<std::string> seen;
    for (const auto& g : all) seen.insert(g.aut.to_string() + "|" + std::to_string(g.trans.v[0]));
    EXPECT_TRUE(in_gamma(hol_mul(all[all.size() / 3], all.back()), L));
  }
  EXPECT_EQ(gamma_order({2, 2, 3}), Int(531441));  // 3^{2 * 6}
  EXPECT_THROW(gamma_enumerate({3, 2, 3}), std::length_error);
}

TEST(Gamma, PowerMapExample) {
  // (7, 3) mod 9 has order 3; cubing its lift gives (19, 9) mod 27
  auto g = el({{7}}, {3}, 9);
  EXPECT_TRUE(hol_pow(g, 3) == hol_identity(1, 9));
  EXPECT_EQ(p_power_map(g, 3), el({{19}}, {9}, 27));
  EXPECT_THROW(p_power_map(el({{2}}, {0}, 9), 3), std::invalid_argument);
}

TEST(Gamma, Omega1IsTheKernelForOddP) {
  for (GammaLevel L : {GammaLevel{1, 1, 3}, GammaLevel{1, 2, 3}, GammaLevel{2, 1, 3}, GammaLevel{1, 1, 5}}) {
    auto r = omega1_and_kernel_check(L);
    EXPECT_TRUE(r.ok()) << L.n << " " << L.k << " " << L.p;
    EXPECT_EQ(r.omega_size, r.kernel_size);
  }
  EXPECT_TRUE(p_power_bijective({1, 2, 3}));
  EXPECT_TRUE(p_power_bijective({1, 3, 3}));
}

TEST(Gamma, Omega1IsLargerAtTwo) {
  // (-1 mod 8, 0) squares to 1 but is not in the kernel {(1 + 4B, 4y)} at level 2
  EXPECT_TRUE(hol_pow(el({{7}}, {0}, 8), 2) == hol_identity(1, 8));
  auto r = omega1_and_kernel_check({1, 2, 2});
  EXPECT_FALSE(r.omega_is_kernel);
  EXPECT_GT(r.omega_size, r.kernel_size);
}

TEST(Roots, Examples) {
  auto b = mike_lemma_solve(1, 3, 2, RootPart::odd_pth_power);
  EXPECT_EQ(pow_mod(1 + 3 * b, 3, 27), 10);  // 1 + 9 * 1
  auto s = mike_lemma_solve(1, 2, 4, RootPart::square);
  EXPECT_EQ(pow_mod(1 + 4 * s, 2, 32), 9);
  for (unsigned k = 1; k <= 4; ++k) {
    EXPECT_TRUE(mike_lemma_exhaustive(3, k, RootPart::odd_pth_power));
    EXPECT_TRUE(mike_lemma_exhaustive(5, k, RootPart::odd_pth_power));
    EXPECT_TRUE(mike_lemma_exhaustive(2, k + 2, RootPart::square));
    EXPECT_TRUE(mike_lemma_exhaustive(2, k + 3, RootPart::fourth_power));
  }
}

TEST(Embedding, AlmostPowerful) {
  EXPECT_TRUE(almost_powerfully_embedded_check({1, 1, 3}).ok());
  EXPECT_TRUE(almost_powerfully_embedded_check({1, 2, 3}).ok());
  EXPECT_TRUE(almost_powerfully_embedded_check({1, 3, 2}).ok());
}

TEST(Lie, BracketExamplesAndConstants) {
  const std::int64_t p = 3;
  auto e11 = basis_element(1, p, 0), e1 = basis_element(1, p, 1);
  EXPECT_EQ(basis_label(1, 0), "11");
  EXPECT_EQ(basis_label(1, 1), "1");
  EXPECT_EQ(bracket(e11, e1), e1);
  EXPECT_EQ(bracket(e1, e11), lie_scale(e1, -1));
  auto c = structure_constants(1, p);
  EXPECT_EQ(c[1][0][1], p - 1);  // c_{1,11}^1 = -1
  for (std::size_t n : {1u, 2u, 3u})
    for (std::int64_t q : {2, 3, 5}) EXPECT_EQ(structure_constants(n, q), structure_constants_formula(n, q));
  EXPECT_EQ(lie_dimension(3), 12u);
}

TEST(Lie, BracketIsTheCommutator) {
  EXPECT_TRUE(bracket_matches_commutator(1, 3));
  EXPECT_TRUE(bracket_matches_commutator(1, 5));
  EXPECT_TRUE(bracket_matches_commutator(2, 2));
  auto a = basis_element(2, 3, 1), b = basis_element(2, 3, 4);
  EXPECT_EQ(gamma_to_lie(lie_to_gamma(a), 3), a);
  EXPECT_EQ(commutator_bracket(a, b), bracket(a, b));
}

TEST(Lie, JacobiOnBasis) {
  const std::size_t n = 2, d = lie_dimension(n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        EXPECT_TRUE(jacobi_holds(basis_element(n, 3, i), basis_element(n, 3, j), basis_element(n, 3, k)));
}

TEST(Bockstein, Examples) {
  auto A = bockstein_algebra(1, 3);
  auto x1 = GradedElement::generator(A, "x1");
  EXPECT_EQ(bockstein(x1, 1), parse_element(A, "2*x11*x1"));
  for (std::int64_t p : {2, 3, 5, 7}) {
    auto B = bockstein_algebra(2, p);
    const auto c = structure_constants(2, p);
    for (const auto& g : B->generators()) {
      auto e = GradedElement::generator(B, g.name);
      auto b = bockstein(e, 2);
      EXPECT_EQ(b, bockstein_generic(e, 2, c)) << g.name << " p=" << p;
      EXPECT_TRUE(bockstein(b, 2).is_zero()) << g.name << " p=" << p;
    }
  }
  EXPECT_TRUE(bockstein_extended(3));
  EXPECT_FALSE(bockstein_extended(5));
}
