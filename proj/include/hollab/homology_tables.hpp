#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hollab/chain_complex.hpp"
#include "hollab/group_ring.hpp"

namespace hollab {

// H_q(Hol(Z_{p^r}); Z) from the closed-form multiplicity tables.
// Supported: p = 2 with r >= 3, p odd with r >= 1.  Anything else throws
// std::domain_error("formula not in paper").
AbelianInvariants closed_form_homology(unsigned long p, unsigned r, unsigned q);

// Largest m whose piece A^m can reach degree qmax: A^m starts in degree 2m-1.
int max_piece(unsigned qmax);

// H_q for q = 0..qmax assembled as the sum over m of H_q(A^m), from the
// resolution built to degree qmax + 1.
std::vector<AbelianInvariants> computed_homology(unsigned long p, unsigned r, unsigned qmax);

// H_k(A^m) for k = 0..kmax (used for the per-piece statements).
std::vector<AbelianInvariants> piece_homology(const MetabelianPresentation& P, int m, unsigned kmax);

struct HomologyMismatch {
  unsigned long p;
  unsigned r, q;
  AbelianInvariants computed, closed;
  std::string to_string() const;
};

// First disagreement between computed and closed-form homology, if any.
std::optional<HomologyMismatch> compare_homology(unsigned long p, unsigned r, unsigned qmax);

// rank H^q(Hol(Z_{p^r}); F_p) by the closed formula.  p = 2 needs r >= 3,
// p odd needs r >= 3; otherwise std::domain_error("unsupported").
std::size_t mod_p_cohomology_rank(unsigned long p, unsigned r, unsigned q);

// Universal coefficients: free(H_q) + p-rank(H_q) + p-rank(H_{q-1}).
std::size_t uct_rank(const AbelianInvariants& Hq, const AbelianInvariants* Hq_minus_1, unsigned long p);

// Abelianization read off the presentation: SNF of the relation matrix in
// the exponent sums of x, y, z.
AbelianInvariants presentation_abelianization(const MetabelianPresentation& P);

}  // namespace hollab
