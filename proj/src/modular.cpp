#include "hollab/modular.hpp"

#include <sstream>
#include <utility>

namespace hollab {

__extension__ using i128 = __int128;

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<i128>(a) * b) % m);
}

std::int64_t pow_mod(std::int64_t a, std::uint64_t e, std::int64_t m) {
  std::int64_t base = mod_reduce(a, m), out = 1 % m;
  while (e) {
    if (e & 1) out = mul_mod(out, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return out;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod_reduce(a, m), r = m, old_s = 1, s = 0;
  while (r) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1 && m != 1) throw contract_violation("inv_mod: not a unit");
  return mod_reduce(old_s, m);
}

std::int64_t mult_order(std::int64_t a, std::int64_t m) {
  if (gcd64(a, m) != 1) throw contract_violation("mult_order: not a unit");
  std::int64_t x = mod_reduce(a, m), k = 1;
  while (x != 1 % m) {
    x = mul_mod(x, a, m);
    ++k;
  }
  return k;
}

// ---------------------------------------------------------------- Residue

Residue::Residue(std::int64_t value, std::int64_t modulus) : v_(0), m_(modulus) {
  if (modulus < 1) throw contract_violation("modulus must be >= 1");
  v_ = mod_reduce(value, modulus);
}

void Residue::same_modulus(const Residue& o) const {
  if (m_ != o.m_) throw contract_violation("mixed moduli");
}

Residue Residue::operator+(const Residue& o) const {
  same_modulus(o);
  return Residue(v_ + o.v_, m_);
}
Residue Residue::operator-(const Residue& o) const {
  same_modulus(o);
  return Residue(v_ - o.v_, m_);
}
Residue Residue::operator*(const Residue& o) const {
  same_modulus(o);
  return Residue(mul_mod(v_, o.v_, m_), m_);
}
Residue Residue::operator-() const { return Residue(-v_, m_); }
Residue Residue::pow(std::uint64_t e) const { return Residue(pow_mod(v_, e, m_), m_); }
bool Residue::is_unit() const { return gcd64(v_, m_) == 1; }
Residue Residue::inverse() const { return Residue(inv_mod(v_, m_), m_); }

// ---------------------------------------------------------------- vectors

ResidueVector::ResidueVector(std::vector<std::int64_t> values, std::int64_t m)
    : modulus(m), v(std::move(values)) {
  for (auto& x : v) x = mod_reduce(x, m);
}

ResidueVector ResidueVector::operator+(const ResidueVector& o) const {
  if (modulus != o.modulus || size() != o.size()) throw contract_violation("vector mismatch");
  ResidueVector out(size(), modulus);
  for (std::size_t i = 0; i < size(); ++i) out.v[i] = mod_reduce(v[i] + o.v[i], modulus);
  return out;
}

ResidueVector ResidueVector::operator-(const ResidueVector& o) const { return *this + (-o); }

ResidueVector ResidueVector::operator-() const {
  ResidueVector out(size(), modulus);
  for (std::size_t i = 0; i < size(); ++i) out.v[i] = mod_reduce(-v[i], modulus);
  return out;
}

ResidueVector ResidueVector::scaled(std::int64_t c) const {
  ResidueVector out(size(), modulus);
  for (std::size_t i = 0; i < size(); ++i) out.v[i] = mul_mod(v[i], mod_reduce(c, modulus), modulus);
  return out;
}

bool ResidueVector::is_zero() const {
  for (auto x : v)
    if (x) return false;
  return true;
}

// ---------------------------------------------------------------- matrices

ResidueMatrix::ResidueMatrix(std::size_t rows, std::size_t cols, std::int64_t modulus)
    : r_(rows), c_(cols), m_(modulus), a_(rows * cols, 0) {
  if (modulus < 1) throw contract_violation("modulus must be >= 1");
}

ResidueMatrix::ResidueMatrix(const std::vector<std::vector<std::int64_t>>& rows, std::int64_t modulus)
    : ResidueMatrix(rows.size(), rows.empty() ? 0 : rows[0].size(), modulus) {
  for (std::size_t i = 0; i < r_; ++i) {
    if (rows[i].size() != c_) throw contract_violation("ragged matrix");
    for (std::size_t j = 0; j < c_; ++j) set(i, j, rows[i][j]);
  }
}

ResidueMatrix ResidueMatrix::identity(std::size_t n, std::int64_t modulus) {
  ResidueMatrix out(n, n, modulus);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, 1);
  return out;
}

ResidueMatrix ResidueMatrix::operator*(const ResidueMatrix& o) const {
  if (m_ != o.m_) throw contract_violation("mixed moduli");
  if (c_ != o.r_) throw contract_violation("shape mismatch");
  ResidueMatrix out(r_, o.c_, m_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < o.c_; ++j) {
      i128 s = 0;
      for (std::size_t k = 0; k < c_; ++k) s += static_cast<i128>(at(i, k)) * o.at(k, j);
      out.a_[i * o.c_ + j] = static_cast<std::int64_t>(s % m_);
    }
  return out;
}

ResidueVector ResidueMatrix::operator*(const ResidueVector& x) const {
  if (m_ != x.modulus) throw contract_violation("mixed moduli");
  if (c_ != x.size()) throw contract_violation("shape mismatch");
  ResidueVector out(r_, m_);
  for (std::size_t i = 0; i < r_; ++i) {
    i128 s = 0;
    for (std::size_t k = 0; k < c_; ++k) s += static_cast<i128>(at(i, k)) * x.v[k];
    out.v[i] = static_cast<std::int64_t>(s % m_);
  }
  return out;
}

ResidueMatrix ResidueMatrix::operator+(const ResidueMatrix& o) const {
  if (m_ != o.m_ || r_ != o.r_ || c_ != o.c_) throw contract_violation("matrix mismatch");
  ResidueMatrix out(r_, c_, m_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = mod_reduce(a_[i] + o.a_[i], m_);
  return out;
}

ResidueMatrix ResidueMatrix::operator-(const ResidueMatrix& o) const { return *this + o.scaled(-1); }

ResidueMatrix ResidueMatrix::scaled(std::int64_t c) const {
  ResidueMatrix out(r_, c_, m_);
  std::int64_t cc = mod_reduce(c, m_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = mul_mod(a_[i], cc, m_);
  return out;
}

ResidueMatrix ResidueMatrix::transpose() const {
  ResidueMatrix out(c_, r_, m_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) out.a_[j * r_ + i] = at(i, j);
  return out;
}

namespace {

// Row-reduce to upper triangular form using only swaps and "row_i -= q row_j"
// steps (Euclid on the column), so it is valid over Z/m for any m.  Applies
// the same operations to `aug` when given.  Returns the sign from swaps.
int euclid_triangularize(std::vector<std::int64_t>& a, std::size_t n, std::int64_t m,
                         std::vector<std::int64_t>* aug, std::size_t aug_cols) {
  int sign = 1;
  auto row_op = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t k = 0; k < n; ++k)
      a[dst * n + k] = mod_reduce(a[dst * n + k] - mul_mod(q, a[src * n + k], m), m);
    if (aug)
      for (std::size_t k = 0; k < aug_cols; ++k)
        (*aug)[dst * aug_cols + k] =
            mod_reduce((*aug)[dst * aug_cols + k] - mul_mod(q, (*aug)[src * aug_cols + k], m), m);
  };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) std::swap(a[i * n + k], a[j * n + k]);
    if (aug)
      for (std::size_t k = 0; k < aug_cols; ++k) std::swap((*aug)[i * aug_cols + k], (*aug)[j * aug_cols + k]);
    sign = -sign;
  };
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = c + 1; i < n; ++i)
      while (a[i * n + c] != 0) {
        row_op(c, i, a[c * n + c] / a[i * n + c]);
        swap_rows(c, i);
      }
  return sign;
}

}  // namespace

std::int64_t ResidueMatrix::det() const {
  if (r_ != c_) throw contract_violation("det of non-square matrix");
  std::vector<std::int64_t> a = a_;
  int sign = euclid_triangularize(a, r_, m_, nullptr, 0);
  std::int64_t d = mod_reduce(sign, m_);
  for (std::size_t i = 0; i < r_; ++i) d = mul_mod(d, a[i * r_ + i], m_);
  return d;
}

bool ResidueMatrix::is_invertible() const { return r_ == c_ && gcd64(det(), m_) == 1; }

ResidueMatrix ResidueMatrix::inverse() const {
  if (r_ != c_) throw contract_violation("inverse of non-square matrix");
  std::size_t n = r_;
  std::vector<std::int64_t> a = a_;
  std::vector<std::int64_t> b = identity(n, m_).a_;
  euclid_triangularize(a, n, m_, &b, n);
  for (std::size_t i = 0; i < n; ++i)
    if (gcd64(a[i * n + i], m_) != 1) throw contract_violation("matrix not invertible");
  // back substitution: make the diagonal 1 and clear above it
  for (std::size_t ii = n; ii-- > 0;) {
    std::int64_t inv = inv_mod(a[ii * n + ii], m_);
    for (std::size_t k = 0; k < n; ++k) {
      a[ii * n + k] = mul_mod(a[ii * n + k], inv, m_);
      b[ii * n + k] = mul_mod(b[ii * n + k], inv, m_);
    }
    for (std::size_t i = 0; i < ii; ++i) {
      std::int64_t q = a[i * n + ii];
      if (!q) continue;
      for (std::size_t k = 0; k < n; ++k) {
        a[i * n + k] = mod_reduce(a[i * n + k] - mul_mod(q, a[ii * n + k], m_), m_);
        b[i * n + k] = mod_reduce(b[i * n + k] - mul_mod(q, b[ii * n + k], m_), m_);
      }
    }
  }
  ResidueMatrix out(n, n, m_);
  out.a_ = std::move(b);
  return out;
}

bool ResidueMatrix::is_identity() const {
  if (r_ != c_) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (at(i, j) != ((i == j) ? 1 % m_ : 0)) return false;
  return true;
}

ResidueMatrix ResidueMatrix::lift(std::int64_t new_modulus) const {
  if (new_modulus % m_) throw contract_violation("lift: new modulus must be a multiple");
  ResidueMatrix out(r_, c_, new_modulus);
  out.a_ = a_;
  return out;
}

ResidueMatrix ResidueMatrix::reduce(std::int64_t new_modulus) const {
  if (m_ % new_modulus) throw contract_violation("reduce: new modulus must divide");
  ResidueMatrix out(r_, c_, new_modulus);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] % new_modulus;
  return out;
}

std::string ResidueMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < r_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < c_; ++j) os << (j ? "," : "") << at(i, j);
    os << ']';
  }
  os << "] mod " << m_;
  return os.str();
}

std::size_t ResidueMatrixHash::operator()(const ResidueMatrix& a) const {
  std::size_t h = std::hash<std::int64_t>()(a.modulus()) ^ (a.rows() * 0x9e3779b97f4a7c15ULL);
  for (auto x : a.data()) h = h * 1000003u ^ static_cast<std::size_t>(x);
  return h;
}

std::vector<ResidueMatrix> enumerate_gl(std::size_t n, std::int64_t m, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    if (total > budget / static_cast<std::uint64_t>(m)) throw std::length_error("enumerate_gl: budget exceeded");
    total *= static_cast<std::uint64_t>(m);
  }
  std::vector<ResidueMatrix> out;
  ResidueMatrix cur(n, n, m);
  std::vector<std::int64_t> digits(n * n, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t t = idx;
    for (std::size_t k = 0; k < n * n; ++k) {
      cur.set(k / n, k % n, static_cast<std::int64_t>(t % m));
      t /= m;
    }
    if (cur.is_invertible()) out.push_back(cur);
  }
  return out;
}

Int gl_order(unsigned n, unsigned long p, unsigned r) {
  if (n < 1 || r < 1) throw std::invalid_argument("gl_order: n, r >= 1");
  Int out = 1;
  for (unsigned i = 0; i < n; ++i) out *= ipow(p, r * n) - ipow(p, (r - 1) * n + i);
  return out;
}

std::vector<UnitGenerator> aut_cyclic_generators(std::int64_t m) {
  auto [p, r] = prime_power(m);
  if (p == 2 && r >= 3) {
    return {{3, mult_order(3, m)}, {m - 1, 2}};
  }
  if (p > 2) {
    std::int64_t target = (p - 1) * (m / p);
    for (std::int64_t s = 2; s < m; ++s)
      if (gcd64(s, m) == 1 && mult_order(s, m) == target) return {{s, target}};
  }
  throw std::invalid_argument("unsupported modulus");
}

}  // namespace hollab
