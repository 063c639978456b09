#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hollab/integer.hpp"

namespace hollab {

// Raised when a caller breaks a documented precondition (mixed moduli, shape
// mismatch).  Distinct from domain errors on user-supplied parameters.
struct contract_violation : std::logic_error {
  using std::logic_error::logic_error;
};

std::int64_t mod_reduce(std::int64_t v, std::int64_t m);
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t pow_mod(std::int64_t a, std::uint64_t e, std::int64_t m);
std::int64_t inv_mod(std::int64_t a, std::int64_t m);  // throws if not a unit
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t mult_order(std::int64_t a, std::int64_t m);  // order of a unit mod m

class Residue {
 public:
  Residue(std::int64_t value, std::int64_t modulus);
  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return m_; }
  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;
  bool operator==(const Residue& o) const { return v_ == o.v_ && m_ == o.m_; }
  Residue pow(std::uint64_t e) const;
  bool is_unit() const;
  Residue inverse() const;

 private:
  void same_modulus(const Residue& o) const;
  std::int64_t v_, m_;
};

struct ResidueVector {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> v;

  ResidueVector() = default;
  ResidueVector(std::size_t n, std::int64_t m) : modulus(m), v(n, 0) {}
  ResidueVector(std::vector<std::int64_t> values, std::int64_t m);

  std::size_t size() const { return v.size(); }
  ResidueVector operator+(const ResidueVector& o) const;
  ResidueVector operator-(const ResidueVector& o) const;
  ResidueVector operator-() const;
  ResidueVector scaled(std::int64_t c) const;
  bool is_zero() const;
  bool operator==(const ResidueVector& o) const = default;
};

class ResidueMatrix {
 public:
  ResidueMatrix() = default;
  ResidueMatrix(std::size_t rows, std::size_t cols, std::int64_t modulus);
  ResidueMatrix(const std::vector<std::vector<std::int64_t>>& rows, std::int64_t modulus);
  static ResidueMatrix identity(std::size_t n, std::int64_t modulus);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  std::int64_t modulus() const { return m_; }
  std::int64_t at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v) { a_[i * c_ + j] = mod_reduce(v, m_); }
  const std::vector<std::int64_t>& data() const { return a_; }

  ResidueMatrix operator*(const ResidueMatrix& o) const;
  ResidueVector operator*(const ResidueVector& x) const;
  ResidueMatrix operator+(const ResidueMatrix& o) const;
  ResidueMatrix operator-(const ResidueMatrix& o) const;
  ResidueMatrix scaled(std::int64_t c) const;
  ResidueMatrix transpose() const;
  bool operator==(const ResidueMatrix& o) const = default;

  std::int64_t det() const;  // reduced mod m; works for any modulus
  bool is_invertible() const;
  ResidueMatrix inverse() const;  // throws contract_violation if singular
  bool is_identity() const;

  // Same integer entries read modulo a multiple of m (canonical lift).
  ResidueMatrix lift(std::int64_t new_modulus) const;
  // Entries reduced modulo a divisor of m.
  ResidueMatrix reduce(std::int64_t new_modulus) const;

  std::string to_string() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::int64_t m_ = 1;
  std::vector<std::int64_t> a_;
};

struct ResidueMatrixHash {
  std::size_t operator()(const ResidueMatrix& a) const;
};

// All of GL(n, Z_m); refuses when m^(n*n) exceeds the budget.
std::vector<ResidueMatrix> enumerate_gl(std::size_t n, std::int64_t m,
                                        std::uint64_t budget = 2'000'000);

// prod_{i<n} (p^{rn} - p^{(r-1)n+i})
Int gl_order(unsigned n, unsigned long p, unsigned r);

struct UnitGenerator {
  std::int64_t unit;
  std::int64_t order;
};

// m = 2^r (r >= 3): {3 of order 2^{r-2}, 2^r - 1 of order 2}.
// m = p^r (p odd): smallest unit of order (p-1)p^{r-1}.
std::vector<UnitGenerator> aut_cyclic_generators(std::int64_t m);

}  // namespace hollab
