#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hollab/graded.hpp"
#include "hollab/holomorph.hpp"
#include "hollab/modular.hpp"

namespace hollab {

// (A, x) over F_p; the image of (1 + pA, px) in Gamma_{n,1}.
struct LiePair {
  ResidueMatrix A;
  ResidueVector x;
  bool operator==(const LiePair& o) const = default;
  bool is_zero() const;
  std::string to_string() const;
};

LiePair lie_zero(std::size_t n, std::int64_t p);
LiePair lie_add(const LiePair& a, const LiePair& b);
LiePair lie_scale(const LiePair& a, std::int64_t c);

// [(A,x),(B,y)] = (AB - BA, Ay - Bx)
LiePair bracket(const LiePair& a, const LiePair& b);

// (1 + pA, px) mod p^2 and back
HolElement lie_to_gamma(const LiePair& a);
LiePair gamma_to_lie(const HolElement& g, std::int64_t p);

// phi^{-1} of the commutator of the canonical lifts to modulus p^3.
// Throws std::logic_error if the commutator is not of the form (1 + p^2 C, p^2 z).
LiePair commutator_bracket(const LiePair& a, const LiePair& b);

// bracket == commutator_bracket over every pair; budget on (p^{n^2+n})^2.
bool bracket_matches_commutator(std::size_t n, std::int64_t p, std::uint64_t budget = 2'000'000);

// ---- basis and structure constants ------------------------------------

// Basis e_{ij} (index (i-1) n + (j-1)) then e_l (index n^2 + l - 1), 1-based
// labels.  c[a][b][t] = coefficient of basis t in [e_a, e_b], in [0, p).
using StructureConstants = std::vector<std::vector<std::vector<std::int64_t>>>;

std::size_t lie_dimension(std::size_t n);
LiePair basis_element(std::size_t n, std::int64_t p, std::size_t index);
std::string basis_label(std::size_t n, std::size_t index);  // "11", "3"
std::vector<std::int64_t> coordinates(const LiePair& a);

StructureConstants structure_constants(std::size_t n, std::int64_t p);           // from bracket()
StructureConstants structure_constants_formula(std::size_t n, std::int64_t p);   // delta formulas

bool jacobi_holds(const LiePair& a, const LiePair& b, const LiePair& c);

// ---- first Bockstein ----------------------------------------------------

// Lambda(x_ij, x_l) (x) F_p[s_ij, s_l]; names x12, x1, s12, s1 (n <= 9).
AlgebraPtr bockstein_algebra(std::size_t n, std::int64_t p);

// The four closed formulas (three cases for x_tu), extended
// to a derivation.
GradedElement bockstein(const GradedElement& e, std::size_t n);
// Same derivation from beta(x_t) = -sum_{a<b} c_ab^t x_a x_b and
// beta(s_t) = sum_{a,b} c_ab^t s_a x_b with the given constants.
GradedElement bockstein_generic(const GradedElement& e, std::size_t n, const StructureConstants& c);

// The closed formulas are derived for p >= 5 and extended to all p.
inline bool bockstein_extended(std::int64_t p) { return p < 5; }

}  // namespace hollab
