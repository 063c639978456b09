#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hollab {

using Int = mpz_class;

std::string to_string(const Int& v);

// Exact b^e for small bases; exponents here never exceed a few hundred.
Int ipow(const Int& b, unsigned long e);
std::int64_t ipow64(std::int64_t b, unsigned e);  // throws on overflow

// Largest e with p^e | n.  n = 0 is rejected: the valuation is undefined.
unsigned vp(const Int& n, unsigned long p);
unsigned vp(std::int64_t n, std::int64_t p);

bool is_prime(std::int64_t n);

// (prime, exponent) pairs in increasing prime order, by trial division.
std::vector<std::pair<Int, unsigned>> factor(const Int& n);

// Returns (p, r) when n = p^r with r >= 1, else (0, 0).
std::pair<std::int64_t, unsigned> prime_power(std::int64_t n);

}  // namespace hollab
