#include "hollab/integer.hpp"

#include <stdexcept>

namespace hollab {

std::string to_string(const Int& v) { return v.get_str(); }

Int ipow(const Int& b, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

std::int64_t ipow64(std::int64_t b, unsigned e) {
  std::int64_t out = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(out, b, &out)) throw std::overflow_error("ipow64 overflow");
  }
  return out;
}

unsigned vp(const Int& n, unsigned long p) {
  if (n == 0) throw std::domain_error("valuation undefined");
  if (p < 2) throw std::invalid_argument("vp: p must be prime");
  Int m = abs(n);
  unsigned e = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++e;
  }
  return e;
}

unsigned vp(std::int64_t n, std::int64_t p) {
  if (n == 0) throw std::domain_error("valuation undefined");
  if (p < 2) throw std::invalid_argument("vp: p must be prime");
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<Int, unsigned>> factor(const Int& n) {
  std::vector<std::pair<Int, unsigned>> out;
  Int m = abs(n);
  if (m <= 1) return out;
  for (Int d = 2; d * d <= m; ++d) {
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

std::pair<std::int64_t, unsigned> prime_power(std::int64_t n) {
  if (n < 2) return {0, 0};
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return {n, 1};
  unsigned r = 0;
  while (n % p == 0) {
    n /= p;
    ++r;
  }
  if (n != 1) return {0, 0};
  return {p, r};
}

}  // namespace hollab
