#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hollab/holomorph.hpp"
#include "hollab/integer.hpp"

namespace hollab {

// Gamma_{n,k}: the kernel of Hol(+_n Z_{p^{k+1}}) -> Hol(+_n Z_p), i.e. pairs
// (1 + pA, px) modulo p^{k+1}.  Elements are HolElements with that modulus.

struct GammaLevel {
  unsigned n = 1, k = 1;
  std::int64_t p = 2;
  std::int64_t modulus() const;  // p^{k+1}
};

// (M, v) reduces to the identity mod p and has modulus p^{k+1}
bool in_gamma(const HolElement& g, const GammaLevel& L);

// p^{k(n^2 + n)}
Int gamma_order(const GammaLevel& L);

// All elements; std::length_error when the order exceeds the budget.
std::vector<HolElement> gamma_enumerate(const GammaLevel& L, std::uint64_t budget = 100'000);

HolElement hol_pow(const HolElement& g, std::uint64_t e);

// Omega_1 = {g : g^p = 1}, Ker(pi_{n,k}) = {(1 + p^k B, p^k y)}.
struct Omega1Report {
  std::size_t omega_size = 0, kernel_size = 0;
  bool omega_is_kernel = false;
  bool central = false;
  bool ok() const { return omega_is_kernel && central; }
};
Omega1Report omega1_and_kernel_check(const GammaLevel& L, std::uint64_t budget = 100'000);

// g in Omega_1(Gamma_{n,k-1}) (modulus p^k) -> its canonical lift to
// modulus p^{k+1}, raised to the p-th power.  std::invalid_argument unless
// g^p = 1.
HolElement p_power_map(const HolElement& g, std::int64_t p);

// p_power_map is a bijection Omega_1(Gamma_{n,k-1}) -> Omega_1(Gamma_{n,k}); k >= 2.
bool p_power_bijective(const GammaLevel& L, std::uint64_t budget = 100'000);

// ---- p-th roots of units ------------------------------------------------

enum class RootPart {
  odd_pth_power,  // (1 + pb)^p = 1 + p^2 a  mod p^{k+1}, p odd
  square,         // (1 + 4b)^2 = 1 + 8a    mod 2^{k+1}
  fourth_power    // (1 + 4b)^4 = 1 + 16a   mod 2^{k+1}
};

// Smallest b in [0, p^{k+1}) solving the congruence; std::runtime_error if
// none exists (that would contradict the root lemma at this size).
std::int64_t mike_lemma_solve(std::int64_t a, std::int64_t p, unsigned k, RootPart part);

// Every admissible a mod p^{k+1} has a root.
bool mike_lemma_exhaustive(std::int64_t p, unsigned k, RootPart part);

// ---- almost powerful embedding ----------------------------------------

struct EmbeddingReport {
  std::size_t g_size = 0, n_size = 0, power_subgroup_size = 0, commutators = 0;
  bool g_n_in_powers = false;   // [G,N] inside N^p (N^2 for p = 2)
  bool n_n_in_fourth = true;    // p = 2 only: [N,N] inside N^4
  bool ok() const { return g_n_in_powers && n_n_in_fourth; }
};

// G = Gamma_{n,k}; N = G for p odd, {(1 + 4A, 4x)} for p = 2.  Exhaustive
// over G x N; std::length_error when |G| |N| exceeds the budget.
EmbeddingReport almost_powerfully_embedded_check(const GammaLevel& L, std::uint64_t budget = 5'000'000);

// Subgroup generated by the given elements (closure under multiplication).
std::vector<HolElement> generated_subgroup(const std::vector<HolElement>& gens, std::size_t n, std::int64_t m,
                                           std::size_t cap = 1'000'000);

}  // namespace hollab
