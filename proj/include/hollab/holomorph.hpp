#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hollab/abelian.hpp"
#include "hollab/modular.hpp"
#include "hollab/perm.hpp"

namespace hollab {

// ---- matrix form: Hol(+_n Z_m) as pairs (M, x) -------------------------

struct HolElement {
  ResidueMatrix aut;    // n x n, invertible mod m
  ResidueVector trans;  // length n
  bool operator==(const HolElement& o) const = default;
};

struct HolElementHash {
  std::size_t operator()(const HolElement& h) const;
};

HolElement hol_identity(std::size_t n, std::int64_t m);
// (f,x)(g,y) = (fg, g^{-1}(x) + y)
HolElement hol_mul(const HolElement& a, const HolElement& b);
// (f,x)^{-1} = (f^{-1}, f(-x))
HolElement hol_inv(const HolElement& a);

// Every element of Hol(+_n Z_m), GL part enumerated exhaustively.
std::vector<HolElement> hol_elements(std::size_t n, std::int64_t m, std::uint64_t budget = 2'000'000);

// Action on K: (f,x) sends a to f(x + a).  Multiplicative: act(ab) = act(a) o act(b).
ResidueVector hol_act(const HolElement& h, const ResidueVector& a);

// Row form [[1, x^T], [0, (M^{-1})^T]]; fixes e1 as a column vector.
ResidueMatrix hol_to_matrix(const HolElement& h);
// Column form [[1, 0], [-Mx, M]]; fixes e1 as a row vector.
ResidueMatrix hol_to_matrix_column(const HolElement& h);
// Inverse of the row form on the stabilizer of e1; nullopt off it.
std::optional<HolElement> matrix_to_hol(const ResidueMatrix& a);

// ---- permutation form over any finite abelian K -----------------------

// Elements are indices aut * |K| + x, with aut an index into automorphisms(K)
// (index 0 is the identity).  Same multiplication as the matrix form.
class Holomorph {
 public:
  explicit Holomorph(FiniteAbelianGroup K, std::uint64_t budget = 10'000);

  const FiniteAbelianGroup& kernel() const { return K_; }
  const std::vector<Perm>& auts() const { return auts_; }
  std::size_t aut_count() const { return auts_.size(); }
  std::size_t order() const { return auts_.size() * K_.order(); }

  std::size_t encode(std::size_t aut, std::size_t x) const { return aut * K_.order() + x; }
  std::size_t aut_of(std::size_t h) const { return h / K_.order(); }
  std::size_t trans_of(std::size_t h) const { return h % K_.order(); }
  std::size_t aut_index(const Perm& f) const;  // throws if f is not in Aut(K)

  std::size_t aut_mul(std::size_t f, std::size_t g) const;
  std::size_t aut_inv(std::size_t f) const;
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;
  std::size_t identity() const { return 0; }

  Perm cayley(std::size_t h) const;  // permutation of K's element indices

 private:
  FiniteAbelianGroup K_;
  std::vector<Perm> auts_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
};

// |K| * |Aut K|.  Throws std::length_error("too large") past the budget.
std::size_t hol_order(const FiniteAbelianGroup& K, std::uint64_t budget = 10'000);
// Hol(K) = Sym(K), i.e. |K| |Aut K| = |K|!.
bool is_hol_full_symmetric(const FiniteAbelianGroup& K, std::uint64_t budget = 10'000);

struct CayleyEmbedding {
  std::vector<Perm> group;         // the image of Hol(K) in Sym(|K|)
  std::vector<Perm> translations;  // image of K
  std::vector<Perm> automorphisms; // image of Aut(K)
  bool translations_normal = false;
};
CayleyEmbedding cayley_embed(const FiniteAbelianGroup& K, std::uint64_t budget = 10'000);

// ---- compatible maps -----------------------------------------------------

// F : G -> H on element indices; Fp : Aut(G) -> Aut(H) on automorphism indices
// of the respective Holomorph objects.
bool check_compatible(const Holomorph& G, const Holomorph& H, const std::vector<std::size_t>& F,
                      const std::vector<std::size_t>& Fp);

// F''(f, x) = (F'(f), F(x)) as a map of element indices.
std::vector<std::size_t> build_F2(const Holomorph& G, const Holomorph& H, const std::vector<std::size_t>& F,
                                  const std::vector<std::size_t>& Fp);

bool is_group_homomorphism(const Holomorph& G, const Holomorph& H, const std::vector<std::size_t>& map);

// Every homomorphism Aut(G) -> Aut(H), by brute force over maps of generators.
std::vector<std::vector<std::size_t>> aut_homomorphisms(const Holomorph& G, const Holomorph& H);

// Reduction Z_{m} -> Z_{d} (d | m) with the induced map on units.
struct ReductionMaps {
  std::vector<std::size_t> F, Fp;
};
ReductionMaps cyclic_reduction(const Holomorph& G, const Holomorph& H);

// ---- maximality, Sylow, module action ------------------------------------

// True iff <H, g> = G for every g in G \ H.  G is given as its full element
// list, H by generators.
bool is_maximal(const std::vector<ResidueMatrix>& H_gens, const std::vector<ResidueMatrix>& G,
                std::size_t budget = 10'000);

struct SylowCheck {
  unsigned hol_p_part = 0;       // vp(|Hol(+_n Z_p)|)
  unsigned gl_p_part = 0;        // vp(|GL(n+1, Z_p)|)
  bool equal = false;
  unsigned hol_p_part_r = 0;     // vp(|Hol(+_n Z_{p^r})|) for the given r
  unsigned gl_p_part_r = 0;      // vp(|GL(n+1, Z_{p^r})|)
  bool differ_r = true;          // the two differ whenever r >= 2
};
SylowCheck sylow_order_check(unsigned n, unsigned long p, unsigned r = 1);

// Hol(K) acting on Z[K] through (f,x)(m) = f(x m): checks the action
// condition f(x(m)) = f(x)(f(m)) and associativity over triples.  Exhaustive
// when |Hol|^2 |K| is small, else `samples` random triples (fixed seed).
bool module_action_check(const FiniteAbelianGroup& K, std::size_t samples = 500, std::uint64_t seed = 1);

}  // namespace hollab
