#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hollab/perm.hpp"

namespace hollab {

// Z_{m1} + ... + Z_{mn}.  Elements are addressed by a mixed-radix index
// (first factor varies fastest); index 0 is the identity.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<std::int64_t> moduli);
  static FiniteAbelianGroup cyclic(std::int64_t m) { return FiniteAbelianGroup({m}); }
  static FiniteAbelianGroup homocyclic(std::size_t n, std::int64_t m);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::size_t rank() const { return moduli_.size(); }
  std::size_t order() const { return order_; }
  bool is_homocyclic() const;

  std::vector<std::int64_t> decode(std::size_t idx) const;
  std::size_t encode(const std::vector<std::int64_t>& coords) const;
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t neg(std::size_t a) const;
  std::size_t scale(std::size_t a, std::int64_t k) const;
  std::size_t element_order(std::size_t a) const;
  std::size_t generator(std::size_t i) const;  // i-th unit vector
  std::string name() const;

  bool operator==(const FiniteAbelianGroup& o) const { return moduli_ == o.moduli_; }

 private:
  std::vector<std::int64_t> moduli_;
  std::size_t order_ = 1;
};

// Aut(K) as permutations of element indices, found by sending each cyclic
// generator to every element of compatible order and keeping the bijective
// homomorphisms.  Throws std::length_error past `budget` candidate maps.
std::vector<Perm> automorphisms(const FiniteAbelianGroup& K, std::uint64_t budget = 5'000'000);

// True if the map (given on element indices) is a homomorphism G -> H.
bool is_homomorphism(const FiniteAbelianGroup& G, const FiniteAbelianGroup& H,
                     const std::vector<std::size_t>& map);

// All homomorphisms G -> H as index maps.
std::vector<std::vector<std::size_t>> homomorphisms(const FiniteAbelianGroup& G,
                                                    const FiniteAbelianGroup& H);

// One representative per isomorphism class of abelian groups of order <= n,
// written as a sum of cyclic groups of prime-power order.
std::vector<FiniteAbelianGroup> abelian_groups_up_to(std::size_t n);

}  // namespace hollab
