#include "hollab/dickson.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "hollab/modular.hpp"
#include "hollab/parallel.hpp"

namespace hollab {

namespace {

std::size_t checked_power(unsigned p, unsigned n, std::size_t budget) {
  std::size_t v = 1;
  for (unsigned i = 0; i < n; ++i) {
    v *= p;
    if (v > budget) throw std::length_error("p^n exceeds the enumeration budget");
  }
  return v;
}

// the linear form sum c_i v_i for the tuple with mixed-radix index k
GradedElement linear_form(const AlgebraPtr& A, unsigned n, unsigned p, std::size_t k) {
  GradedElement out(A);
  for (unsigned i = 0; i < n; ++i, k /= p) {
    Exponents m(n, 0);
    m[i] = 1;
    out.add_term(m, static_cast<std::int64_t>(k % p));
  }
  return out;
}

unsigned count_vs(const AlgebraPtr& A) {
  unsigned n = 0;
  while (A->has("v" + std::to_string(n + 1))) ++n;
  return n;
}

}  // namespace

AlgebraPtr v_algebra(unsigned n, unsigned p) {
  std::vector<GradedGenerator> g;
  for (unsigned i = 1; i <= n; ++i) g.push_back({"v" + std::to_string(i), 2, false});
  return std::make_shared<GradedAlgebra>(p, g);
}

GradedElement dickson_coefficient(unsigned n, unsigned p, std::size_t budget) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  const std::size_t total = checked_power(p, n, budget);
  auto A = v_algebra(n, p);
  // nonzero tuples 1..total-1 in chunks, multiplied in order afterwards
  const std::size_t chunks = std::min<std::size_t>(thread_count(), total - 1);
  std::vector<GradedElement> part(chunks, GradedElement::one(A));
  parallel_for(chunks, [&](std::size_t c) {
    std::size_t lo = 1 + c * (total - 1) / chunks, hi = 1 + (c + 1) * (total - 1) / chunks;
    GradedElement acc = GradedElement::one(A);
    for (std::size_t k = lo; k < hi; ++k) acc = acc * linear_form(A, n, p, k);
    part[c] = acc;
  });
  GradedElement out = GradedElement::one(A);
  for (const auto& f : part) out = out * f;
  return out;
}

std::vector<unsigned> dickson_leading_coefficients(const GradedElement& d, unsigned n, unsigned p) {
  std::vector<unsigned> perm(n), out;
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    Exponents m(n, 0);
    // s(1) gets p^n - p^{n-1}, ..., s(n) gets p - 1
    for (unsigned k = 0; k < n; ++k) {
      unsigned hi = static_cast<unsigned>(ipow64(p, n - k)), lo = static_cast<unsigned>(ipow64(p, n - k - 1));
      m[perm[k]] = static_cast<std::uint16_t>(hi - lo);
    }
    out.push_back(d.coefficient(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::size_t gl_order(unsigned n, unsigned p) {
  std::size_t pn = ipow64(p, n), v = 1;
  for (unsigned i = 0; i < n; ++i) v *= pn - ipow64(p, i);
  return v;
}

namespace {

// f(v_i -> sum_j M[j][i] v_j)
GradedElement substitute(const GradedElement& f, const std::vector<std::vector<unsigned>>& M) {
  const auto& A = f.algebra();
  const unsigned n = static_cast<unsigned>(M.size());
  std::vector<std::vector<GradedElement>> powers(n);
  for (unsigned i = 0; i < n; ++i) {
    GradedElement L(A);
    for (unsigned j = 0; j < n; ++j) {
      Exponents m(n, 0);
      m[j] = 1;
      L.add_term(m, M[j][i]);
    }
    powers[i].push_back(GradedElement::one(A));
    powers[i].push_back(L);
  }
  GradedElement out(A);
  for (const auto& [m, c] : f.terms()) {
    GradedElement t = GradedElement::one(A).scaled(c);
    for (unsigned i = 0; i < n; ++i) {
      while (powers[i].size() <= m[i]) powers[i].push_back(powers[i].back() * powers[i][1]);
      t = t * powers[i][m[i]];
    }
    out = out + t;
  }
  return out;
}

bool invertible(const std::vector<std::vector<unsigned>>& M, unsigned p) {
  const std::size_t n = M.size();
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = M[i][j];
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a[r][c] % p == 0) ++r;
    if (r == n) return false;
    std::swap(a[r], a[c]);
    std::int64_t inv = inv_mod(a[c][c], p);
    for (std::size_t i = c + 1; i < n; ++i) {
      std::int64_t f = mul_mod(a[i][c], inv, p);
      for (std::size_t j = c; j < n; ++j) a[i][j] = mod_reduce(a[i][j] - f * a[c][j], p);
    }
  }
  return true;
}

}  // namespace

bool check_gl_invariance(const GradedElement& f, unsigned n, unsigned p, bool exhaustive, std::size_t budget) {
  if (count_vs(f.algebra()) != n || f.algebra()->size() != n)
    throw std::invalid_argument("element must live over v1..vn");
  std::vector<std::vector<std::vector<unsigned>>> mats;
  if (exhaustive) {
    if (gl_order(n, p) > budget) throw std::length_error("GL(n, F_p) exceeds the enumeration budget");
    const std::size_t cells = static_cast<std::size_t>(n) * n, total = ipow64(p, cells);
    for (std::size_t k = 0; k < total; ++k) {
      std::vector<std::vector<unsigned>> M(n, std::vector<unsigned>(n));
      std::size_t t = k;
      for (std::size_t c = 0; c < cells; ++c, t /= p) M[c / n][c % n] = static_cast<unsigned>(t % p);
      if (invertible(M, p)) mats.push_back(std::move(M));
    }
  } else {
    auto identity = [&] {
      std::vector<std::vector<unsigned>> M(n, std::vector<unsigned>(n, 0));
      for (unsigned i = 0; i < n; ++i) M[i][i] = 1;
      return M;
    };
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j)
        if (i != j) {
          auto M = identity();
          M[i][j] = 1;
          mats.push_back(M);
        }
    for (unsigned a = 2; a < p; ++a) {
      auto M = identity();
      M[0][0] = a;
      mats.push_back(M);
    }
  }
  std::vector<char> ok(mats.size(), 0);
  parallel_for(mats.size(), [&](std::size_t i) { ok[i] = substitute(f, mats[i]) == f; });
  for (char c : ok)
    if (!c) return false;
  return true;
}

const char* d2_mode_name(D2Mode m) {
  switch (m) {
    case D2Mode::p2_r_gt_3: return "p2-r>3";
    case D2Mode::p2_r3: return "p2-r3";
    default: return "odd";
  }
}

AlgebraPtr d2_algebra(unsigned n, unsigned p, D2Mode mode) {
  if ((p == 2) != (mode != D2Mode::odd)) throw std::invalid_argument("d2 mode does not match the characteristic");
  std::vector<GradedGenerator> g;
  for (unsigned i = 1; i <= n; ++i) g.push_back({"u" + std::to_string(i), 1, true});
  for (unsigned i = 1; i <= n; ++i) g.push_back({"v" + std::to_string(i), 2, false});
  for (unsigned i = 1; i <= n; ++i) {
    if (mode == D2Mode::p2_r3) g.push_back({"x" + std::to_string(i), 1, false});
    else g.push_back({"z" + std::to_string(i), 2, false});
  }
  return std::make_shared<GradedAlgebra>(p, g);
}

GradedElement apply_d2(const GradedElement& f, D2Mode mode) {
  const unsigned n = count_vs(f.algebra());
  if (n == 0) throw std::invalid_argument("no v generators");
  auto A = d2_algebra(n, f.algebra()->p(), mode);
  GradedElement g = rebase(f, A);
  std::vector<GradedElement> dv;
  for (unsigned i = 1; i <= n; ++i) {
    std::string s = std::to_string(i);
    dv.push_back(parse_element(A, mode == D2Mode::p2_r3 ? "u" + s + "*x" + s + "^2" : "u" + s + "*z" + s));
  }
  std::vector<GradedElement> images(A->size());
  for (unsigned i = 0; i < n; ++i) images[n + i] = dv[i];  // v_i sits at index n + i
  return apply_derivation(g, images);
}

}  // namespace hollab
