#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hollab/abelian.hpp"
#include "hollab/modular.hpp"
#include "hollab/wreath.hpp"

namespace hollab {

// Three permutative categories with objects n >= 0 and Hom(n, n) a group:
//   aut_powers : Aut(G^n), f box g = f x g, c(m,n) = s_{m,n}
//   hol_powers : Hol(G^n), (f,x) box (g,y) = (f x g, (x,y)), c(m,n) = (s_{m,n}, 1)
//   hol_matrix : Hol(R^n) inside GL(n+1, R) in row form, block box, c(m,n)
//                the block permutation matrix [[1,0,0],[0,0,I_n],[0,I_m,0]]
// s_{m,n}(x_1..x_{m+n}) = (x_{m+1}..x_{m+n}, x_1..x_m).  Composition A o B
// applies B first.
enum class PermutativeKind { aut_powers, hol_powers, hol_matrix };
const char* permutative_kind_name(PermutativeKind k);

class PermutativeCategory {
 public:
  // aut/hol powers over G = K; the matrix category over R = Z_m with m = |K|
  // (K must then be cyclic).
  PermutativeCategory(PermutativeKind kind, FiniteAbelianGroup K);

  struct Morphism {
    std::size_t object = 0;
    PointHol point;        // aut/hol powers (trans = 0 for aut_powers)
    ResidueMatrix matrix;  // hol_matrix, (n+1) x (n+1)
    bool operator==(const Morphism& o) const;
  };

  PermutativeKind kind() const { return kind_; }
  Morphism identity(std::size_t n) const;
  Morphism compose(const Morphism& a, const Morphism& b) const;  // a o b
  Morphism inverse(const Morphism& a) const;
  Morphism box(const Morphism& a, const Morphism& b) const;
  Morphism symmetry(std::size_t m, std::size_t n) const;  // c(m, n)
  // Hom(n, n): everything when at most `all_cap` elements, else `samples`
  // fixed-seed random elements.
  std::vector<Morphism> morphisms(std::size_t n, std::size_t all_cap = 200, std::size_t samples = 100,
                                  std::uint64_t seed = 1) const;
  // aut/hol powers: equal as maps on the points of G^n; matrices entrywise
  bool equal(const Morphism& a, const Morphism& b) const;
  std::string describe(const Morphism& a) const;

 private:
  PermutativeKind kind_;
  FiniteAbelianGroup K_;
  FiniteAbelianGroup points(std::size_t n) const { return power_group(K_, n); }
};

struct PermutativeReport {
  bool associative = true, unit = true, symmetry_unit = true, symmetry_inverse = true, hexagon = true,
       natural = true;
  std::size_t checks = 0;
  std::string witness;
  bool ok() const { return associative && unit && symmetry_unit && symmetry_inverse && hexagon && natural; }
};

// Axioms 1-5 and the naturality square for objects m, n, p (sampled
// morphisms as in PermutativeCategory::morphisms).
PermutativeReport permutative_axioms_check(const PermutativeCategory& C, std::size_t m, std::size_t n, std::size_t p,
                                           std::uint64_t seed = 1);

}  // namespace hollab
