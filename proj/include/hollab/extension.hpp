#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hollab/abelian.hpp"
#include "hollab/holomorph.hpp"
#include "hollab/perm.hpp"

namespace hollab {

// K x| H built as the pullback of Hol(K) -> Aut(K) <- H along phi.
// Elements are h * |K| + x with h an index into `quotient`.
class SplitExtension {
 public:
  SplitExtension(FiniteAbelianGroup K, std::vector<Perm> quotient, std::vector<Perm> phi);

  const FiniteAbelianGroup& kernel() const { return K_; }
  const std::vector<Perm>& quotient() const { return H_; }  // H_[0] is the identity
  const std::vector<Perm>& phi() const { return phi_; }     // phi_[h] acts on K's indices
  std::size_t order() const { return H_.size() * K_.order(); }

  std::size_t encode(std::size_t h, std::size_t x) const { return h * K_.order() + x; }
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;
  std::size_t section(std::size_t h) const { return encode(h, 0); }
  std::size_t inclusion(std::size_t x) const { return encode(0, x); }
  std::size_t projection(std::size_t a) const { return a / K_.order(); }

  bool is_abelian() const;
  std::map<std::size_t, std::size_t> element_order_profile() const;
  std::size_t element_order(std::size_t a) const;

  // phi recovered from the extension: conjugation by the section,
  // s(h) i(x) s(h)^{-1} = i(phi(h)(x)).
  std::vector<Perm> recovered_phi() const;

  // The map (h, x) -> (phi(h), x) into Hol(K) is a homomorphism, and
  // projecting it to Aut(K) agrees with phi after projecting to H.
  bool verify_into_hol(const Holomorph& hol) const;

 private:
  std::size_t quotient_index(const Perm& p) const;

  FiniteAbelianGroup K_;
  std::vector<Perm> H_, phi_;
  std::map<Perm, std::size_t> hindex_;
};

// Builds the extension from phi given on generators of H.  phi is extended
// along the Cayley graph of H; a clash (phi not a homomorphism) is rejected
// with std::invalid_argument.
SplitExtension pullback_extension(const FiniteAbelianGroup& K, const std::vector<Perm>& H_gens,
                                  std::size_t H_degree, const std::vector<Perm>& phi_gens);

}  // namespace hollab
