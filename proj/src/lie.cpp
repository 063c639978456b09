#include "hollab/lie.hpp"

#include <sstream>
#include <stdexcept>

#include "hollab/parallel.hpp"

namespace hollab {

bool LiePair::is_zero() const {
  for (auto v : A.data())
    if (v) return false;
  return x.is_zero();
}

std::string LiePair::to_string() const {
  std::ostringstream os;
  os << "(" << A.to_string() << ", [";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? " " : "") << x.v[i];
  os << "])";
  return os.str();
}

LiePair lie_zero(std::size_t n, std::int64_t p) { return {ResidueMatrix(n, n, p), ResidueVector(n, p)}; }

LiePair lie_add(const LiePair& a, const LiePair& b) { return {a.A + b.A, a.x + b.x}; }

LiePair lie_scale(const LiePair& a, std::int64_t c) { return {a.A.scaled(c), a.x.scaled(c)}; }

LiePair bracket(const LiePair& a, const LiePair& b) {
  if (a.x.size() != b.x.size() || a.x.modulus != b.x.modulus) throw contract_violation("bracket of mismatched pairs");
  return {a.A * b.A - b.A * a.A, a.A * b.x - b.A * a.x};
}

HolElement lie_to_gamma(const LiePair& a) {
  const std::int64_t p = a.x.modulus, m = p * p;
  const std::size_t n = a.x.size();
  HolElement g = hol_identity(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    g.trans.v[i] = p * a.x.v[i];
    for (std::size_t j = 0; j < n; ++j) g.aut.set(i, j, (i == j) + p * a.A.at(i, j));
  }
  return g;
}

namespace {

// (1 + s C, s z) -> (C, z) mod p, checking the shape
LiePair divide_out(const HolElement& g, std::int64_t s, std::int64_t p) {
  const std::size_t n = g.trans.size();
  LiePair out = lie_zero(n, p);
  for (std::size_t i = 0; i < n; ++i) {
    if (g.trans.v[i] % s) throw std::logic_error("translation not divisible by " + std::to_string(s));
    out.x.v[i] = mod_reduce(g.trans.v[i] / s, p);
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t e = g.aut.at(i, j) - (i == j);
      if (e % s) throw std::logic_error("matrix not congruent to 1 mod " + std::to_string(s));
      out.A.set(i, j, e / s);
    }
  }
  return out;
}

}  // namespace

LiePair gamma_to_lie(const HolElement& g, std::int64_t p) { return divide_out(g, p, p); }

LiePair commutator_bracket(const LiePair& a, const LiePair& b) {
  const std::int64_t p = a.x.modulus, m3 = p * p * p;
  auto lift = [&](const LiePair& c) {
    HolElement g = lie_to_gamma(c);
    return HolElement{g.aut.lift(m3), ResidueVector(g.trans.v, m3)};
  };
  HolElement g = lift(a), h = lift(b);
  HolElement com = hol_mul(hol_mul(hol_mul(g, h), hol_inv(g)), hol_inv(h));
  // phi takes (1 + pC, pz) to (1 + p^2 C, p^2 z); undo it
  return divide_out(com, p * p, p);
}

std::size_t lie_dimension(std::size_t n) { return n * n + n; }

LiePair basis_element(std::size_t n, std::int64_t p, std::size_t index) {
  LiePair e = lie_zero(n, p);
  if (index < n * n) e.A.set(index / n, index % n, 1);
  else if (index < lie_dimension(n)) e.x.v[index - n * n] = 1;
  else throw std::out_of_range("basis index");
  return e;
}

std::string basis_label(std::size_t n, std::size_t index) {
  if (index < n * n) return std::to_string(index / n + 1) + std::to_string(index % n + 1);
  return std::to_string(index - n * n + 1);
}

std::vector<std::int64_t> coordinates(const LiePair& a) {
  std::vector<std::int64_t> out(a.A.data());
  out.insert(out.end(), a.x.v.begin(), a.x.v.end());
  return out;
}

bool bracket_matches_commutator(std::size_t n, std::int64_t p, std::uint64_t budget) {
  const std::size_t dim = lie_dimension(n);
  const std::uint64_t count = static_cast<std::uint64_t>(ipow64(p, static_cast<unsigned>(dim)));
  if (static_cast<double>(count) * static_cast<double>(count) > static_cast<double>(budget))
    throw std::length_error("pair count exceeds the budget");
  std::vector<LiePair> all;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    LiePair a = lie_zero(n, p);
    std::uint64_t t = idx;
    for (std::size_t c = 0; c < dim; ++c, t /= static_cast<std::uint64_t>(p)) {
      std::int64_t v = static_cast<std::int64_t>(t % static_cast<std::uint64_t>(p));
      if (c < n * n) a.A.set(c / n, c % n, v);
      else a.x.v[c - n * n] = v;
    }
    all.push_back(a);
  }
  std::vector<char> ok(all.size(), 0);
  parallel_for(all.size(), [&](std::size_t i) {
    for (const auto& b : all)
      if (!(bracket(all[i], b) == commutator_bracket(all[i], b))) return;
    ok[i] = 1;
  });
  for (char c : ok)
    if (!c) return false;
  return true;
}

StructureConstants structure_constants(std::size_t n, std::int64_t p) {
  const std::size_t d = lie_dimension(n);
  StructureConstants c(d, std::vector<std::vector<std::int64_t>>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) c[a][b] = coordinates(bracket(basis_element(n, p, a), basis_element(n, p, b)));
  return c;
}

StructureConstants structure_constants_formula(std::size_t n, std::int64_t p) {
  const std::size_t d = lie_dimension(n), nn = n * n;
  auto delta = [](std::size_t a, std::size_t b) -> std::int64_t { return a == b; };
  StructureConstants c(d, std::vector<std::vector<std::int64_t>>(d, std::vector<std::int64_t>(d, 0)));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t t = 0; t < d; ++t) {
        std::int64_t v = 0;
        const bool ma = a < nn, mb = b < nn, mt = t < nn;
        const std::size_t i = ma ? a / n : a - nn, j = a % n;   // e_ij or e_i
        const std::size_t l = mb ? b / n : b - nn, m = b % n;   // e_lm or e_l
        const std::size_t tt = mt ? t / n : t - nn, u = t % n;  // target tu or t
        if (ma && mb && mt) v = delta(i, tt) * delta(u, m) * delta(j, l) - delta(tt, l) * delta(u, j) * delta(i, m);
        else if (ma && !mb && !mt) v = delta(tt, i) * delta(j, l);
        else if (!ma && mb && !mt) v = -delta(tt, l) * delta(i, m);
        c[a][b][t] = mod_reduce(v, p);
      }
  return c;
}

bool jacobi_holds(const LiePair& a, const LiePair& b, const LiePair& c) {
  LiePair s = lie_add(lie_add(bracket(bracket(a, b), c), bracket(bracket(b, c), a)), bracket(bracket(c, a), b));
  return s.is_zero();
}

// ---- Bockstein -------------------------------------------------------------

AlgebraPtr bockstein_algebra(std::size_t n, std::int64_t p) {
  if (n == 0 || n > 9) throw std::invalid_argument("1 <= n <= 9");
  std::vector<GradedGenerator> g;
  for (const char* kind : {"x", "s"}) {
    const bool ext = kind[0] == 'x';
    const unsigned deg = ext ? 1 : 2;
    for (std::size_t a = 0; a < lie_dimension(n); ++a) g.push_back({kind + basis_label(n, a), deg, ext});
  }
  return std::make_shared<GradedAlgebra>(static_cast<unsigned>(p), g);
}

namespace {

std::string xn(std::size_t i, std::size_t j) { return "x" + std::to_string(i) + std::to_string(j); }
std::string sn(std::size_t i, std::size_t j) { return "s" + std::to_string(i) + std::to_string(j); }

GradedElement product(const AlgebraPtr& A, const std::string& a, const std::string& b, std::int64_t c) {
  return (GradedElement::generator(A, a) * GradedElement::generator(A, b)).scaled(c);
}

std::size_t infer_n(const AlgebraPtr& A) {
  for (std::size_t n = 1; n <= 9; ++n)
    if (A->size() == 2 * lie_dimension(n)) return n;
  throw std::invalid_argument("not a Bockstein algebra");
}

}  // namespace

GradedElement bockstein(const GradedElement& e, std::size_t n) {
  const auto& A = e.algebra();
  if (infer_n(A) != n) throw std::invalid_argument("algebra does not match n");
  std::vector<GradedElement> img(A->size(), GradedElement(A));
  for (std::size_t t = 1; t <= n; ++t) {
    const std::string T = std::to_string(t);
    for (std::size_t u = 1; u <= n; ++u) {
      // three cases for x_tu
      GradedElement b(A);
      const std::size_t lo = t < u ? t : t + 1;
      for (std::size_t i = lo; i <= n; ++i) b = b + product(A, xn(t, i), xn(i, u), -1);
      const std::size_t hi = t > u ? t : t - 1;
      for (std::size_t i = 1; i <= hi; ++i) b = b + product(A, xn(i, u), xn(t, i), 1);
      img[A->index(xn(t, u))] = b;
      GradedElement s(A);
      for (std::size_t i = 1; i <= n; ++i)
        s = s + product(A, sn(t, i), xn(i, u), 1) + product(A, sn(i, u), xn(t, i), -1);
      img[A->index(sn(t, u))] = s;
    }
    GradedElement bx(A), bs(A);
    for (std::size_t i = 1; i <= n; ++i) {
      const std::string I = std::to_string(i);
      bx = bx + product(A, xn(t, i), "x" + I, -1);
      bs = bs + product(A, sn(t, i), "x" + I, 1) + product(A, "s" + I, xn(t, i), -1);
    }
    img[A->index("x" + T)] = bx;
    img[A->index("s" + T)] = bs;
  }
  return apply_derivation(e, img);
}

GradedElement bockstein_generic(const GradedElement& e, std::size_t n, const StructureConstants& c) {
  const auto& A = e.algebra();
  if (infer_n(A) != n) throw std::invalid_argument("algebra does not match n");
  const std::size_t d = lie_dimension(n);
  std::vector<GradedElement> img(A->size(), GradedElement(A));
  for (std::size_t t = 0; t < d; ++t) {
    GradedElement bx(A), bs(A);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        if (!c[a][b][t]) continue;
        const std::string xa = "x" + basis_label(n, a), xb = "x" + basis_label(n, b);
        if (a < b) bx = bx + product(A, xa, xb, -c[a][b][t]);
        bs = bs + product(A, "s" + basis_label(n, a), xb, c[a][b][t]);
      }
    img[t] = bx;
    img[d + t] = bs;
  }
  return apply_derivation(e, img);
}

}  // namespace hollab
