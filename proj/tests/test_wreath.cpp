#include <gtest/gtest.h>

#include "hollab/permutative.hpp"
#include "hollab/wreath.hpp"

using namespace hollab;

namespace {

FiniteAbelianGroup Z(std::int64_t m) { return FiniteAbelianGroup::cyclic(m); }

}  // namespace

TEST(PointHol, LawAndAction) {
  const auto K = Z(5);
  Perm two(5);
  for (std::uint32_t a = 0; a < 5; ++a) two[a] = (2 * a) % 5;
  PointHol f{two, 1}, g{two, 3};
  // action is multiplicative: (fg)(a) = f(g(a))
  for (std::size_t a = 0; a < 5; ++a) EXPECT_EQ(ph_act(K, ph_mul(K, f, g), a), ph_act(K, f, ph_act(K, g, a)));
  EXPECT_EQ(ph_act(K, f, 0), 2u);  // 2 (1 + 0)
  EXPECT_EQ(ph_mul(K, f, ph_inv(K, f)), ph_identity(K));
  EXPECT_EQ(power_group(K, 3).order(), 125u);
}

TEST(Wreath, GroupAxiomsExhaustive) {
  const auto K = Z(3);
  auto W = wreath_elements(K, symmetric_group(2), WreathBase::hol);
  ASSERT_EQ(W.size(), 2u * 36u);
  const auto e = wreath_identity(K, 2);
  for (const auto& a : W) {
    EXPECT_EQ(wreath_mul(K, a, e), a);
    EXPECT_EQ(wreath_mul(K, a, wreath_inv(K, a)), e);
  }
  for (std::size_t i = 0; i < W.size(); i += 5)
    for (std::size_t j = 0; j < W.size(); j += 3)
      for (std::size_t k = 0; k < W.size(); k += 7)
        ASSERT_EQ(wreath_mul(K, wreath_mul(K, W[i], W[j]), W[k]), wreath_mul(K, W[i], wreath_mul(K, W[j], W[k])));
}

TEST(Wreath, LiteralFormulaWitness) {
  EXPECT_FALSE(literal_associativity_failure(Z(2), 2).has_value());
  auto w = literal_associativity_failure(Z(2), 3);
  ASSERT_TRUE(w.has_value());
  const auto K = Z(2);
  const auto& t = *w;
  EXPECT_NE(wreath_mul_literal(K, wreath_mul_literal(K, t[0], t[1]), t[2]),
            wreath_mul_literal(K, t[0], wreath_mul_literal(K, t[1], t[2])));
}

TEST(Wreath, Embeddings) {
  auto i = check_embed_i(Z(3), 2);
  EXPECT_TRUE(i.ok());
  EXPECT_EQ(i.domain, 8u);
  EXPECT_EQ(i.image, 8u);
  auto j = check_embed_j(Z(3), 2);
  EXPECT_TRUE(j.ok());
  EXPECT_EQ(j.domain, 72u);
  EXPECT_TRUE(check_embed_j(Z(4), 2).ok());
  EXPECT_TRUE(check_embed_i(FiniteAbelianGroup::homocyclic(2, 2), 2).ok());
}

TEST(Wreath, Pullbacks) {
  auto a = wreath_pullback_check(symmetric_group(2), 2, Z(2));
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.wreath_order, 8u);
  auto b = wreath_pullback_check(symmetric_group(2), 2, Z(3));
  EXPECT_TRUE(b.ok());
  EXPECT_EQ(b.pullback_order, 18u);
}

TEST(Wreath, BlockPermutationAndSquare) {
  // swap two blocks of size 2, then reverse inside block 0
  Perm s{1, 0};
  auto bp = block_permutation(s, {Perm{1, 0}, Perm{0, 1}});
  EXPECT_EQ(bp, (Perm{3, 2, 0, 1}));
  EXPECT_EQ(double_wreath_square(Z(2), 2, 2, 50), 0u);
  EXPECT_EQ(double_wreath_square(Z(3), 2, 2, 50), 0u);
}

TEST(Permutative, SymmetryMatrix) {
  PermutativeCategory C(PermutativeKind::hol_matrix, Z(2));
  EXPECT_EQ(C.symmetry(1, 1).matrix.to_string(), "[[1,0,0],[0,0,1],[0,1,0]] mod 2");
  EXPECT_THROW(PermutativeCategory(PermutativeKind::hol_matrix, FiniteAbelianGroup::homocyclic(2, 2)),
               std::invalid_argument);
}

TEST(Permutative, Axioms) {
  for (auto kind : {PermutativeKind::aut_powers, PermutativeKind::hol_powers, PermutativeKind::hol_matrix})
    for (std::int64_t m : {2, 3}) {
      PermutativeCategory C(kind, Z(m));
      auto rep = permutative_axioms_check(C, 1, 2, 1);
      EXPECT_TRUE(rep.ok()) << permutative_kind_name(kind) << " Z" << m << ": " << rep.witness;
      EXPECT_GT(rep.checks, 10u);
    }
}
