#pragma once

#include <cstddef>
#include <vector>

#include "hollab/graded.hpp"

namespace hollab {

// F_p[v1..vn], |v_i| = 2.
AlgebraPtr v_algebra(unsigned n, unsigned p);

// Coefficient of t in prod over c in F_p^n of (t + sum c_i v_i).  Only the
// c = 0 factor can supply the t, so this is the product of the p^n - 1
// nonzero linear forms.  Throws std::length_error past the budget on p^n.
GradedElement dickson_coefficient(unsigned n, unsigned p, std::size_t budget = 1u << 16);

// Coefficient of v_{s(1)}^{p^n - p^{n-1}} ... v_{s(n)}^{p-1} for the
// permutation s; the claim is that it is (-1)^n.
std::vector<unsigned> dickson_leading_coefficients(const GradedElement& d, unsigned n, unsigned p);

// f(M^T v) == f for every M in GL(n, F_p) when exhaustive, else for the
// elementary and diagonal generators only.  |GL| past the budget throws
// std::length_error in exhaustive mode.  f must live over v1..vn.
bool check_gl_invariance(const GradedElement& f, unsigned n, unsigned p, bool exhaustive = true,
                         std::size_t budget = 20000);
std::size_t gl_order(unsigned n, unsigned p);

enum class D2Mode { p2_r_gt_3, p2_r3, odd };
const char* d2_mode_name(D2Mode m);

// Lambda[u1..un] (x) F_p[v1..vn, z1..zn] (or x1..xn, |x|=1, in mode p2_r3).
AlgebraPtr d2_algebra(unsigned n, unsigned p, D2Mode mode);

// Graded derivation d(v_i) = u_i z_i (u_i x_i^2 in mode p2_r3), zero on the
// other generators.  f is rebased into d2_algebra first; a mode that does
// not fit the characteristic throws std::invalid_argument.
GradedElement apply_d2(const GradedElement& f, D2Mode mode);

}  // namespace hollab
