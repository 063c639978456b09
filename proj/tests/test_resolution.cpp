#include <gtest/gtest.h>

#include <random>
#include <string>

#include "hollab/group_ring.hpp"
#include "hollab/modular.hpp"
#include "hollab/resolution.hpp"

using namespace hollab;

namespace {

// u -> mul * u + add (mod q)
struct Affine {
  std::int64_t mul = 1, add = 0;
};

Affine after(const Affine& f, const Affine& g, std::int64_t q) {  // f o g
  return {mul_mod(f.mul, g.mul, q), mod_reduce(f.mul * g.add + f.add, q)};
}

// The holomorph presentations act on Z_q: z adds 1 and x, y multiply by the
// inverses of t1, t2 (zx = x z^t1 forces that).
Affine letter(char ch, const MetabelianPresentation& P) {
  switch (ch) {
    case 'x': return {inv_mod(P.t1, P.q), 0};
    case 'X': return {P.t1 % P.q, 0};
    case 'y': return {inv_mod(P.t2, P.q), 0};
    case 'Y': return {P.t2 % P.q, 0};
    case 'z': return {1, 1 % P.q};
    default: return {1, P.q - 1};
  }
}

Affine of_word(const std::string& w, const MetabelianPresentation& P) {
  Affine f;
  for (char ch : w) f = after(f, letter(ch, P), P.q);
  return f;
}

// x^a y^b z^c : u -> t1^-a t2^-b (u + c)
Affine of_monomial(const Monomial& m, const MetabelianPresentation& P) {
  const std::int64_t mult =
      mul_mod(pow_mod(inv_mod(P.t1, P.q), m.a, P.q), pow_mod(inv_mod(P.t2, P.q), m.b, P.q), P.q);
  return {mult, mul_mod(mult, m.c, P.q)};
}

}  // namespace

TEST(Normalize, Examples) {
  const auto P = MetabelianPresentation::holomorph_cyclic(2, 3);
  EXPECT_EQ(P.order(), 32u);
  EXPECT_EQ(normalize("zx", P), (Monomial{1, 0, 3}));
  EXPECT_EQ(normalize("", P), (Monomial{0, 0, 0}));
  EXPECT_EQ(normalize("xX", P), (Monomial{0, 0, 0}));
  EXPECT_EQ(normalize("zzzzzzzz", P), (Monomial{0, 0, 0}));
  EXPECT_THROW(normalize("w", P), std::invalid_argument);
}

TEST(Normalize, RandomWordsAgainstAffineMaps) {
  std::mt19937_64 rng(7);
  for (auto P : {MetabelianPresentation::holomorph_cyclic(2, 3), MetabelianPresentation::holomorph_cyclic(2, 4),
                 MetabelianPresentation::holomorph_cyclic(3, 2), MetabelianPresentation::holomorph_cyclic(5, 1)}) {
    const std::string alphabet = P.rank_one() ? "xXzZ" : "xXyYzZ";
    for (int trial = 0; trial < 1000; ++trial) {
      std::string w;
      const auto len = rng() % 25;
      for (std::size_t i = 0; i < len; ++i) w += alphabet[rng() % alphabet.size()];
      const Affine want = of_word(w, P), got = of_monomial(normalize(w, P), P);
      ASSERT_EQ(got.mul, want.mul) << w << " in " << P.to_string();
      ASSERT_EQ(got.add, want.add) << w << " in " << P.to_string();
    }
  }
}

TEST(Normalize, MonomialsAreFaithful) {
  // the affine action of Hol(Z_q) is faithful, so distinct monomials give distinct maps
  const auto P = MetabelianPresentation::holomorph_cyclic(2, 3);
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (std::size_t i = 0; i < P.order(); ++i) {
    auto f = of_monomial(monomial_at(i, P), P);
    EXPECT_TRUE(seen.insert({f.mul, f.add}).second);
    EXPECT_EQ(monomial_index(monomial_at(i, P), P), i);
  }
}

TEST(GroupRing, MultiplicationFollowsMonomials) {
  const auto P = MetabelianPresentation::holomorph_cyclic(3, 1);
  for (std::size_t i = 0; i < P.order(); ++i)
    for (std::size_t j = 0; j < P.order(); ++j) {
      auto a = GroupRingElement::monomial(P, monomial_at(i, P), 2);
      auto b = GroupRingElement::monomial(P, monomial_at(j, P), 3);
      EXPECT_EQ(a * b, GroupRingElement::monomial(P, monomial_mul(monomial_at(i, P), monomial_at(j, P), P), 6));
      EXPECT_EQ(monomial_mul(monomial_at(i, P), monomial_inv(monomial_at(i, P), P), P), (Monomial{0, 0, 0}));
    }
}

TEST(GroupRing, Augmentations) {
  const auto P = MetabelianPresentation::holomorph_cyclic(2, 3);
  EXPECT_EQ(norm_z(P).augmentation(), 8);
  EXPECT_EQ(L_power(P, 3, 1, 2).augmentation(), 9);
  EXPECT_EQ(L_power(P, 3, 0, 5).augmentation(), 1);
  // (z - 1) N_z = 0
  auto zm1 = GroupRingElement::monomial(P, {0, 0, 1}) - GroupRingElement::scalar(P, 1);
  EXPECT_TRUE((zm1 * norm_z(P)).is_zero());
}

TEST(Presentation, Validation) {
  MetabelianPresentation bad;
  bad.q = 8;
  bad.s1 = 2;
  bad.t1 = 5;
  bad.s2 = 1;
  bad.t2 = 1;
  EXPECT_NO_THROW(bad.validate());
  bad.t1 = 3;
  bad.s1 = 3;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  EXPECT_THROW(MetabelianPresentation::holomorph_cyclic(2, 2), std::invalid_argument);
  EXPECT_THROW(MetabelianPresentation::holomorph_cyclic(4, 3), std::invalid_argument);
}

TEST(Resolution, SquaresToZero) {
  for (auto P : {MetabelianPresentation::holomorph_cyclic(2, 3), MetabelianPresentation::holomorph_cyclic(2, 4),
                 MetabelianPresentation::holomorph_cyclic(3, 1), MetabelianPresentation::holomorph_cyclic(3, 2)}) {
    Resolution R(P, 6);
    EXPECT_GT(R.check_d_squared(), 0u) << P.to_string();
  }
}

TEST(Resolution, GeneratorCounts) {
  // rank two: one generator a_{n,rho,i} per i in 0..n
  Resolution R(MetabelianPresentation::holomorph_cyclic(2, 3), 4);
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(R.generators(k).size(), static_cast<std::size_t>((k + 1) * (k + 2) / 2));
  Resolution S(MetabelianPresentation::holomorph_cyclic(3, 1), 4);
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(S.generators(k).size(), static_cast<std::size_t>(k + 1));
  EXPECT_THROW(S.index_of({1, 0, 0}), std::out_of_range);
}

TEST(Resolution, LiteralExponentIsNotIntegral) {
  // s1 = 4, s2 = 2 over Z_16: (3^2 - 1)/16 is not an integer
  const auto P = MetabelianPresentation::holomorph_cyclic(2, 4);
  try {
    Resolution R(P, 4, D2Exponent::literal_s2);
    FAIL() << "expected an integrality failure";
  } catch (const resolution_error& e) {
    EXPECT_NE(std::string(e.what()).find("integrality"), std::string::npos);
  }
  // over Z_8 the two exponents coincide (s1 = s2 = 2)
  Resolution R8(MetabelianPresentation::holomorph_cyclic(2, 3), 5, D2Exponent::literal_s2);
  EXPECT_GT(R8.check_d_squared(), 0u);
}
