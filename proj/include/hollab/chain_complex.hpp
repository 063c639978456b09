#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hollab/integer.hpp"
#include "hollab/resolution.hpp"
#include "hollab/smith.hpp"

namespace hollab {

// Z^free + (+ Z/t for t in torsion), torsion as prime powers in increasing order.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  // Splits each invariant factor > 1 into its primary parts.
  static AbelianInvariants from_factors(std::size_t free_rank, const std::vector<Int>& factors);
  static AbelianInvariants from_counts(std::size_t free_rank, unsigned long p,
                                       const std::vector<std::size_t>& n);  // n[i-1] copies of Z/p^i

  std::size_t p_rank(unsigned long p) const;  // number of p-primary cyclic summands
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;  // "Z + Z/2^3 + Z/8" style; "0" when trivial
  bool operator==(const AbelianInvariants&) const = default;
};

// C_0 <- C_1 <- ... <- C_top.  d(k) : C_k -> C_{k-1} is rank(k-1) x rank(k).
class ChainComplex {
 public:
  ChainComplex() = default;
  explicit ChainComplex(std::vector<std::size_t> ranks);

  int top() const { return static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int k) const { return k < 0 || k > top() ? 0 : ranks_[k]; }
  const IntegerMatrix& d(int k) const { return d_.at(k); }
  void set_d(int k, IntegerMatrix m);

  // d_k d_{k+1} = 0 for every k; returns the first failing k or -1.
  int first_nonzero_square() const;

 private:
  std::vector<std::size_t> ranks_;
  std::vector<IntegerMatrix> d_;
};

// H_k = ker d_k / im d_{k+1}.  Needs k < top() so that d_{k+1} is known.
// Rejects complexes with d_k d_{k+1} != 0 (std::invalid_argument).
AbelianInvariants homology(const ChainComplex& C, int k);

// The augmented piece A^m of the resolution tensored with Z: rows rho = 0
// for m = 0, rows rho in {2m-1, 2m} for m >= 1.  Degrees 0..max_degree of
// the resolution.  Fails with resolution_error if z - 1 does not augment to 0.
ChainComplex augmented_complex(const Resolution& R, int m);

}  // namespace hollab
