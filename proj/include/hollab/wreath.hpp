#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hollab/abelian.hpp"
#include "hollab/perm.hpp"

namespace hollab {

// Hol(K) with the automorphism stored as a permutation of K's element
// indices; needs no enumeration of Aut(K).  Same law as the matrix form:
// (f,x)(g,y) = (fg, g^{-1}(x) + y), acting on K by a -> f(x + a).
struct PointHol {
  Perm aut;
  std::size_t trans = 0;
  bool operator==(const PointHol& o) const = default;
};

PointHol ph_identity(const FiniteAbelianGroup& K);
PointHol ph_mul(const FiniteAbelianGroup& K, const PointHol& a, const PointHol& b);
PointHol ph_inv(const FiniteAbelianGroup& K, const PointHol& a);
std::size_t ph_act(const FiniteAbelianGroup& K, const PointHol& h, std::size_t point);
Perm ph_as_map(const FiniteAbelianGroup& K, const PointHol& h);  // a -> f(x + a) on all points

// K^q, component i occupying "digit" i in base |K|.
FiniteAbelianGroup power_group(const FiniteAbelianGroup& K, std::size_t q);

// Wreath product P wr Hol(K) with P <= S_q; plain P wr K uses pure
// translations as parts and P wr Aut(K) pure automorphisms.
//
// Permutations compose as (st)(i) = s(t(i)).  With that convention the
// product is (s, x)(t, y) = (st, (x_{t(i)} y_i)_i); the textbook formula
// with the permutation inverted, which is what this composition order needs.
struct WreathElement {
  Perm sigma;
  std::vector<PointHol> parts;
  bool operator==(const WreathElement& o) const = default;
};

WreathElement wreath_identity(const FiniteAbelianGroup& K, std::size_t q);
WreathElement wreath_mul(const FiniteAbelianGroup& K, const WreathElement& a, const WreathElement& b);
WreathElement wreath_inv(const FiniteAbelianGroup& K, const WreathElement& a);

// The textbook formula read literally with (st)(i) = s(t(i)):
// (s, x)(t, y) = (st, (x_{t^{-1}(i)} y_i)).  Kept for the witness below.
WreathElement wreath_mul_literal(const FiniteAbelianGroup& K, const WreathElement& a, const WreathElement& b);
// First (a, b, c) in S_q wr K with (ab)c != a(bc) under the literal formula.
std::optional<std::vector<WreathElement>> literal_associativity_failure(const FiniteAbelianGroup& K, std::size_t q);

// Elements of P wr K / P wr Aut(K) / P wr Hol(K) for P given by its elements.
enum class WreathBase { plain, aut, hol };
std::vector<WreathElement> wreath_elements(const FiniteAbelianGroup& K, const std::vector<Perm>& P, WreathBase base,
                                           std::size_t budget = 100'000);
std::vector<Perm> symmetric_group(std::size_t q);

// phi(s)(x)_k = x_{s^{-1}(k)} on K^q
Perm phi_perm(const FiniteAbelianGroup& K, const Perm& sigma);
// i(s, f)(x)_k = f_{s^{-1}(k)}(x_{s^{-1}(k)}), as a permutation of K^q
Perm embed_i(const FiniteAbelianGroup& K, const WreathElement& w);
// j(s, (f_i, x_i)) = (i(s, f), (x_1..x_q)) in Hol(K^q)
PointHol embed_j(const FiniteAbelianGroup& K, const WreathElement& w);

struct EmbeddingCheck {
  std::size_t domain = 0, image = 0;
  bool homomorphism = false, injective = false;
  bool base_is_inclusion = true;  // j on K^q is the identity inclusion
  bool ok() const { return homomorphism && injective && base_is_inclusion; }
};
// Exhaustive over S_q wr Aut(K) (embed_i) or S_q wr Hol(K) (embed_j).
EmbeddingCheck check_embed_i(const FiniteAbelianGroup& K, std::size_t q, std::size_t budget = 100'000);
EmbeddingCheck check_embed_j(const FiniteAbelianGroup& K, std::size_t q, std::size_t budget = 100'000);

// P wr K against the pullback {(h, X) in P x Hol(K^q) : phi(h) = aut(X)}.
struct PullbackCheck {
  std::size_t wreath_order = 0, pullback_order = 0;
  bool bijective = false, homomorphism = false, phi_injective_hom = false;
  bool ok() const { return wreath_order == pullback_order && bijective && homomorphism && phi_injective_hom; }
};
PullbackCheck wreath_pullback_check(const std::vector<Perm>& P, std::size_t q, const FiniteAbelianGroup& K);

// S_q wr S_n -> S_{qn}: (s, t_b)(b, u) = (s(b), t_b(u)) with point b n + u.
Perm block_permutation(const Perm& sigma, const std::vector<Perm>& taus);

// The square S_q wr S_n wr Hol(K) -> Hol(K^{qn}) both ways, on `samples`
// random elements (fixed seed).  Returns the number of disagreements.
std::size_t double_wreath_square(const FiniteAbelianGroup& K, std::size_t q, std::size_t n, std::size_t samples,
                                 std::uint64_t seed = 1);

std::string to_string(const WreathElement& w);

}  // namespace hollab
