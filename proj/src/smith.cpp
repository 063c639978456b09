#include "hollab/smith.hpp"

#include <sstream>
#include <stdexcept>

namespace hollab {

IntegerMatrix::IntegerMatrix(const std::vector<std::vector<long>>& rows)
    : IntegerMatrix(rows.size(), rows.empty() ? 0 : rows[0].size()) {
  for (std::size_t i = 0; i < r_; ++i) {
    if (rows[i].size() != c_) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < c_; ++j) at(i, j) = rows[i][j];
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 1;
  return out;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("shape mismatch");
  IntegerMatrix out(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < o.c_; ++j)
        if (o.at(k, j) != 0) out.at(i, j) += aik * o.at(k, j);
    }
  return out;
}

bool IntegerMatrix::operator==(const IntegerMatrix& o) const {
  return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

bool IntegerMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < r_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < c_; ++j) os << (j ? "," : "") << at(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < c_; ++k) swap(at(i, k), at(j, k));
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < r_; ++k) swap(at(k, i), at(k, j));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t k = 0; k < c_; ++k)
    if (at(src, k) != 0) at(dst, k) += q * at(src, k);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t k = 0; k < r_; ++k)
    if (at(k, src) != 0) at(k, dst) += q * at(k, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < c_; ++k) at(i, k) = -at(i, k);
}

namespace {

// Diagonalizes A in place.  Row operations are mirrored on U (U <- E U) and
// column operations on V (V <- V E), so U * A_in * V = A_out throughout.
void diagonalize(IntegerMatrix& A, IntegerMatrix* U, IntegerMatrix* V) {
  const std::size_t r = A.rows(), c = A.cols(), n = std::min(r, c);
  auto row_add = [&](std::size_t dst, std::size_t src, const Int& q) {
    A.add_row_multiple(dst, src, q);
    if (U) U->add_row_multiple(dst, src, q);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Int& q) {
    A.add_col_multiple(dst, src, q);
    if (V) V->add_col_multiple(dst, src, q);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    A.swap_rows(i, j);
    if (U) U->swap_rows(i, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    A.swap_cols(i, j);
    if (V) V->swap_cols(i, j);
  };

  Int q;
  for (std::size_t t = 0; t < n; ++t) {
    // smallest nonzero entry of the trailing block; a unit ends the search
    std::size_t pi = r, pj = c;
    Int best;
    for (std::size_t i = t; i < r && !(best == 1); ++i)
      for (std::size_t j = t; j < c; ++j) {
        const Int& v = A.at(i, j);
        if (v == 0) continue;
        if (pi == r || abs(v) < best) {
          best = abs(v);
          pi = i;
          pj = j;
          if (best == 1) break;
        }
      }
    if (pi == r) break;
    row_swap(t, pi);
    col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (A.at(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), A.at(i, t).get_mpz_t(), A.at(t, t).get_mpz_t());
        row_add(i, t, -q);
        if (A.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (A.at(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), A.at(t, j).get_mpz_t(), A.at(t, t).get_mpz_t());
        col_add(j, t, -q);
        if (A.at(t, j) != 0) clean = false;
      }
      if (!clean) {
        // a remainder is now smaller than the pivot; promote it
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < r; ++i)
          if (A.at(i, t) != 0 && abs(A.at(i, t)) < abs(A.at(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < c; ++j)
          if (A.at(t, j) != 0 && abs(A.at(t, j)) < abs(A.at(bi, bj))) bi = t, bj = j;
        row_swap(t, bi);
        col_swap(t, bj);
        continue;
      }
      bool fixed = false;
      for (std::size_t i = t + 1; i < r && !fixed; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!mpz_divisible_p(A.at(i, j).get_mpz_t(), A.at(t, t).get_mpz_t())) {
            row_add(t, i, Int(1));
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (A.at(t, t) < 0) {
      A.negate_row(t);
      if (U) U->negate_row(t);
    }
  }
}

std::vector<Int> diagonal(const IntegerMatrix& A) {
  std::vector<Int> out(std::min(A.rows(), A.cols()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = A.at(i, i);
  return out;
}

}  // namespace

SmithDecomposition smith_decompose(const IntegerMatrix& m) {
  SmithDecomposition out{IntegerMatrix::identity(m.rows()), m, IntegerMatrix::identity(m.cols()), {}};
  diagonalize(out.D, &out.U, &out.V);
  out.factors = diagonal(out.D);
  return out;
}

std::vector<Int> smith_normal_form(const IntegerMatrix& m) {
  if (m.rows() <= 60 && m.cols() <= 60) {
    SmithDecomposition s = smith_decompose(m);
    if (!(s.U * m * s.V == s.D)) throw std::logic_error("smith_normal_form: U*M*V != D");
    return s.factors;
  }
  IntegerMatrix A = m;
  diagonalize(A, nullptr, nullptr);
  return diagonal(A);
}

std::size_t smith_rank(const std::vector<Int>& factors) {
  std::size_t k = 0;
  for (const auto& f : factors)
    if (f != 0) ++k;
  return k;
}

}  // namespace hollab
