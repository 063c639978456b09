#include <gtest/gtest.h>

#include <map>

#include "hollab/extension.hpp"
#include "hollab/holomorph.hpp"

using namespace hollab;

namespace {

FiniteAbelianGroup Z(std::int64_t m) { return FiniteAbelianGroup::cyclic(m); }

Perm mult_by(std::int64_t u, std::int64_t m) {
  Perm f(static_cast<std::size_t>(m));
  for (std::int64_t x = 0; x < m; ++x) f[x] = static_cast<std::uint32_t>(x * u % m);
  return f;
}

}  // namespace

TEST(Holomorph, ProductInHolZ3MatchesCayley) {
  Holomorph H(Z(3));
  const std::size_t two = H.aut_index(mult_by(2, 3));
  const std::size_t a = H.encode(two, 1), b = H.encode(two, 2);
  const std::size_t ab = H.mul(a, b);
  EXPECT_EQ(ab, H.encode(0, 1));
  // oracle: composing the permutations of Z3 (apply b first)
  EXPECT_EQ(H.cayley(ab), perm_compose(H.cayley(a), H.cayley(b)));
  EXPECT_EQ(H.mul(H.identity(), a), a);
}

TEST(Holomorph, MatrixFormProductInHolZ3) {
  HolElement a{ResidueMatrix({{2}}, 3), ResidueVector(std::vector<std::int64_t>{1}, 3)}, b{ResidueMatrix({{2}}, 3), ResidueVector(std::vector<std::int64_t>{2}, 3)};
  HolElement ab = hol_mul(a, b);
  EXPECT_EQ(ab.aut.at(0, 0), 1);
  EXPECT_EQ(ab.trans.v[0], 1);
}

TEST(Holomorph, OrdersAndFullSymmetry) {
  EXPECT_EQ(hol_order(Z(3)), 6u);
  EXPECT_EQ(hol_order(FiniteAbelianGroup::homocyclic(2, 2)), 24u);
  EXPECT_TRUE(is_hol_full_symmetric(FiniteAbelianGroup::homocyclic(2, 2)));
  EXPECT_EQ(hol_order(Z(4)), 8u);
  EXPECT_FALSE(is_hol_full_symmetric(Z(4)));
  EXPECT_EQ(hol_order(FiniteAbelianGroup(std::vector<std::int64_t>{})), 1u);
  EXPECT_TRUE(is_hol_full_symmetric(FiniteAbelianGroup(std::vector<std::int64_t>{})));
}

TEST(Holomorph, CayleyImages) {
  EXPECT_EQ(cayley_embed(Z(3)).group.size(), 6u);
  EXPECT_EQ(cayley_embed(Z(2)).group.size(), 2u);
  auto d4 = cayley_embed(Z(4));
  ASSERT_EQ(d4.group.size(), 8u);
  EXPECT_TRUE(d4.translations_normal);
  // dihedral of order 8: one identity, five involutions, two elements of order 4
  EXPECT_EQ(element_order_profile(d4.group), (std::map<std::size_t, std::size_t>{{1, 1}, {2, 5}, {4, 2}}));
  EXPECT_FALSE(perm_group_is_abelian(d4.group));
}

TEST(Extension, TrivialAndNontrivialActions) {
  const Perm swap{1, 0};
  auto trivial = pullback_extension(Z(3), {swap}, 2, {perm_identity(3)});
  EXPECT_EQ(trivial.order(), 6u);
  EXPECT_TRUE(trivial.is_abelian());
  EXPECT_EQ(trivial.element_order_profile(), (std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {3, 2}, {6, 2}}));
  auto s3 = pullback_extension(Z(3), {swap}, 2, {mult_by(2, 3)});
  EXPECT_FALSE(s3.is_abelian());
  EXPECT_EQ(s3.element_order_profile(), (std::map<std::size_t, std::size_t>{{1, 1}, {2, 3}, {3, 2}}));
  EXPECT_THROW(pullback_extension(Z(5), {Perm{1, 2, 0}}, 3, {mult_by(2, 5)}), std::invalid_argument);
}

TEST(Extension, IdentityActionGivesTheHolomorph) {
  const auto K = Z(8);
  Holomorph H(K);
  auto E = pullback_extension(K, H.auts(), K.order(), H.auts());
  EXPECT_EQ(E.order(), H.order());
  EXPECT_TRUE(E.verify_into_hol(H));
}

TEST(Extension, RecoveredPhiRoundTrip) {
  for (auto K : {Z(3), Z(4)})
    for (const auto& f : automorphisms(K)) {
      if (!perm_is_identity(perm_compose(f, f))) continue;
      auto E = pullback_extension(K, {Perm{1, 0}}, 2, {f});
      auto rec = E.recovered_phi();
      ASSERT_EQ(rec.size(), 2u);
      EXPECT_TRUE(perm_is_identity(rec[0]));
      EXPECT_EQ(rec[1], f);
    }
}

TEST(Compatible, ReductionZ9toZ3) {
  Holomorph G(Z(9)), H(Z(3));
  auto r = cyclic_reduction(G, H);
  EXPECT_TRUE(check_compatible(G, H, r.F, r.Fp));
  auto F2 = build_F2(G, H, r.F, r.Fp);
  EXPECT_TRUE(is_group_homomorphism(G, H, F2));
  for (std::size_t g = 0; g < G.order(); ++g) EXPECT_EQ(H.trans_of(F2[g]), G.trans_of(g) % 3);
}

TEST(Compatible, TrivialPairIsCompatible) {
  Holomorph G(Z(4)), H(Z(2));
  std::vector<std::size_t> F(4, 0), Fp(G.aut_count(), 0);
  EXPECT_TRUE(check_compatible(G, H, F, Fp));
}

TEST(Compatible, SignMapOfS3IsNotInduced) {
  Holomorph G(Z(3)), H(Z(2));
  // the sign map Hol(Z3) = S3 -> Z2 = Hol(Z2): translations even, the inversion odd
  std::vector<std::size_t> sign(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) sign[g] = H.encode(0, G.aut_of(g) == 0 ? 0 : 1);
  ASSERT_TRUE(is_group_homomorphism(G, H, sign));
  std::size_t compatible = 0;
  for (const auto& F : homomorphisms(G.kernel(), H.kernel()))
    for (const auto& Fp : aut_homomorphisms(G, H)) {
      if (!check_compatible(G, H, F, Fp)) continue;
      ++compatible;
      EXPECT_NE(build_F2(G, H, F, Fp), sign);
    }
  EXPECT_GT(compatible, 0u);
}

TEST(MatrixForm, RowFormExample) {
  HolElement h{ResidueMatrix::identity(2, 2), ResidueVector(std::vector<std::int64_t>{1, 0}, 2)};
  EXPECT_EQ(hol_to_matrix(h), ResidueMatrix({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, 2));
  EXPECT_TRUE(hol_to_matrix(hol_identity(2, 4)).is_identity());
}

TEST(MatrixForm, ColumnFormIsMultiplicativeToo) {
  auto els = hol_elements(2, 3);
  for (std::size_t i = 0; i < els.size(); i += 37)
    for (std::size_t j = 0; j < els.size(); j += 41)
      EXPECT_EQ(hol_to_matrix_column(hol_mul(els[i], els[j])), hol_to_matrix_column(els[i]) * hol_to_matrix_column(els[j]));
}

TEST(Maximality, SmallCases) {
  auto gens_of = [](std::size_t n, std::int64_t m) {
    std::vector<ResidueMatrix> g;
    for (const auto& h : hol_elements(n, m)) g.push_back(hol_to_matrix(h));
    return g;
  };
  EXPECT_TRUE(is_maximal(gens_of(1, 2), enumerate_gl(2, 2)));
  EXPECT_TRUE(is_maximal(gens_of(2, 2), enumerate_gl(3, 2)));
  auto gl24 = enumerate_gl(2, 4);
  ASSERT_EQ(gl24.size(), 96u);
  EXPECT_FALSE(is_maximal(gens_of(1, 4), gl24));
}

TEST(Sylow, Examples) {
  auto a = sylow_order_check(2, 2);
  EXPECT_TRUE(a.equal);
  EXPECT_EQ(a.hol_p_part, 3u);
  auto b = sylow_order_check(1, 3);
  EXPECT_TRUE(b.equal);
  EXPECT_EQ(b.hol_p_part, 1u);
  auto c = sylow_order_check(2, 3, 2);
  EXPECT_TRUE(c.differ_r);
  EXPECT_NE(c.hol_p_part_r, c.gl_p_part_r);
}

TEST(ModuleAction, Examples) {
  EXPECT_TRUE(module_action_check(Z(3)));
  EXPECT_TRUE(module_action_check(FiniteAbelianGroup(std::vector<std::int64_t>{})));
  EXPECT_TRUE(module_action_check(FiniteAbelianGroup::homocyclic(2, 2), 500, 3));
}
