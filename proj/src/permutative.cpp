#include "hollab/permutative.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "hollab/holomorph.hpp"

namespace hollab {

const char* permutative_kind_name(PermutativeKind k) {
  switch (k) {
    case PermutativeKind::aut_powers: return "aut-powers";
    case PermutativeKind::hol_powers: return "hol-powers";
    default: return "hol-matrix";
  }
}

bool PermutativeCategory::Morphism::operator==(const Morphism& o) const {
  return object == o.object && point == o.point && matrix == o.matrix;
}

PermutativeCategory::PermutativeCategory(PermutativeKind kind, FiniteAbelianGroup K) : kind_(kind), K_(std::move(K)) {
  if (kind_ == PermutativeKind::hol_matrix && K_.rank() != 1)
    throw std::invalid_argument("the matrix category needs R = Z_m");
}

namespace {

std::size_t ipow_size(std::size_t b, std::size_t e) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < e; ++i) v *= b;
  return v;
}

}  // namespace

PermutativeCategory::Morphism PermutativeCategory::identity(std::size_t n) const {
  Morphism out;
  out.object = n;
  if (kind_ == PermutativeKind::hol_matrix) out.matrix = ResidueMatrix::identity(n + 1, K_.moduli()[0]);
  else out.point = ph_identity(points(n));
  return out;
}

PermutativeCategory::Morphism PermutativeCategory::compose(const Morphism& a, const Morphism& b) const {
  if (a.object != b.object) throw std::invalid_argument("composing morphisms of different objects");
  Morphism out;
  out.object = a.object;
  if (kind_ == PermutativeKind::hol_matrix) out.matrix = a.matrix * b.matrix;
  else out.point = ph_mul(points(a.object), a.point, b.point);
  return out;
}

PermutativeCategory::Morphism PermutativeCategory::inverse(const Morphism& a) const {
  Morphism out;
  out.object = a.object;
  if (kind_ == PermutativeKind::hol_matrix) out.matrix = a.matrix.inverse();
  else out.point = ph_inv(points(a.object), a.point);
  return out;
}

PermutativeCategory::Morphism PermutativeCategory::box(const Morphism& a, const Morphism& b) const {
  const std::size_t m = a.object, n = b.object;
  Morphism out;
  out.object = m + n;
  if (kind_ == PermutativeKind::hol_matrix) {
    // [[1, x, y], [0, A, 0], [0, 0, B]]
    ResidueMatrix M(m + n + 1, m + n + 1, K_.moduli()[0]);
    M.set(0, 0, 1);
    for (std::size_t j = 0; j < m; ++j) M.set(0, 1 + j, a.matrix.at(0, 1 + j));
    for (std::size_t j = 0; j < n; ++j) M.set(0, 1 + m + j, b.matrix.at(0, 1 + j));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) M.set(1 + i, 1 + j, a.matrix.at(1 + i, 1 + j));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M.set(1 + m + i, 1 + m + j, b.matrix.at(1 + i, 1 + j));
    out.matrix = M;
    return out;
  }
  const std::size_t lo = ipow_size(K_.order(), m), hi = ipow_size(K_.order(), n);
  Perm f(lo * hi);
  for (std::size_t y = 0; y < hi; ++y)
    for (std::size_t x = 0; x < lo; ++x) f[x + lo * y] = static_cast<std::uint32_t>(a.point.aut[x] + lo * b.point.aut[y]);
  out.point = {f, a.point.trans + lo * b.point.trans};
  return out;
}

PermutativeCategory::Morphism PermutativeCategory::symmetry(std::size_t m, std::size_t n) const {
  Morphism out;
  out.object = m + n;
  if (kind_ == PermutativeKind::hol_matrix) {
    ResidueMatrix M(m + n + 1, m + n + 1, K_.moduli()[0]);
    M.set(0, 0, 1);
    for (std::size_t i = 0; i < n; ++i) M.set(1 + i, 1 + m + i, 1);  // block I_n
    for (std::size_t j = 0; j < m; ++j) M.set(1 + n + j, 1 + j, 1);  // block I_m
    out.matrix = M;
    return out;
  }
  // s_{m,n}: the last n coordinates move to the front
  const std::size_t lo = ipow_size(K_.order(), m), hi = ipow_size(K_.order(), n);
  Perm s(lo * hi);
  for (std::size_t y = 0; y < hi; ++y)
    for (std::size_t x = 0; x < lo; ++x) s[x + lo * y] = static_cast<std::uint32_t>(y + hi * x);
  out.point = {s, 0};
  return out;
}

std::vector<PermutativeCategory::Morphism> PermutativeCategory::morphisms(std::size_t n, std::size_t all_cap,
                                                                          std::size_t samples,
                                                                          std::uint64_t seed) const {
  if (n == 0) return {identity(0)};
  std::vector<Morphism> all;
  if (kind_ == PermutativeKind::hol_matrix) {
    const std::int64_t m = K_.moduli()[0];
    const std::size_t vecs = ipow_size(static_cast<std::size_t>(m), n);
    for (const auto& M : enumerate_gl(n, m))
      for (std::size_t v = 0; v < vecs; ++v) {
        ResidueVector x(n, m);
        std::size_t t = v;
        for (std::size_t i = 0; i < n; ++i, t /= static_cast<std::size_t>(m)) x.v[i] = static_cast<std::int64_t>(t % m);
        Morphism a;
        a.object = n;
        a.matrix = hol_to_matrix({M, x});
        all.push_back(std::move(a));
      }
  } else {
    const FiniteAbelianGroup P = points(n);
    const std::size_t trans = kind_ == PermutativeKind::hol_powers ? P.order() : 1;
    for (const auto& f : automorphisms(P))
      for (std::size_t x = 0; x < trans; ++x) {
        Morphism a;
        a.object = n;
        a.point = {f, x};
        all.push_back(std::move(a));
      }
  }
  if (all.size() <= all_cap) return all;
  std::mt19937_64 rng(seed);
  std::vector<Morphism> out;
  for (std::size_t i = 0; i < samples; ++i) out.push_back(all[rng() % all.size()]);
  return out;
}

bool PermutativeCategory::equal(const Morphism& a, const Morphism& b) const {
  if (a.object != b.object) return false;
  if (kind_ == PermutativeKind::hol_matrix) return a.matrix == b.matrix;
  const FiniteAbelianGroup P = points(a.object);
  return ph_as_map(P, a.point) == ph_as_map(P, b.point);
}

std::string PermutativeCategory::describe(const Morphism& a) const {
  std::ostringstream os;
  os << "object " << a.object << ": ";
  if (kind_ == PermutativeKind::hol_matrix) {
    os << a.matrix.to_string();
  } else {
    os << "[";
    for (std::size_t i = 0; i < a.point.aut.size(); ++i) os << (i ? " " : "") << a.point.aut[i];
    os << "] + " << a.point.trans;
  }
  return os.str();
}

PermutativeReport permutative_axioms_check(const PermutativeCategory& C, std::size_t m, std::size_t n, std::size_t p,
                                           std::uint64_t seed) {
  PermutativeReport rep;
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag && rep.witness.empty()) rep.witness = what;
    flag = false;
  };
  auto Lm = C.morphisms(m, 200, 100, seed), Ln = C.morphisms(n, 200, 100, seed + 1),
       Lp = C.morphisms(p, 200, 100, seed + 2);
  const auto id0 = C.identity(0);
  // 1: associativity of box on sampled triples
  const std::size_t triples = std::min<std::size_t>(100, Lm.size() * Ln.size() * Lp.size());
  for (std::size_t t = 0; t < triples; ++t) {
    const auto &A = Lm[t % Lm.size()], &B = Ln[(7 * t + 1) % Ln.size()], &D = Lp[(13 * t + 2) % Lp.size()];
    ++rep.checks;
    if (!C.equal(C.box(C.box(A, B), D), C.box(A, C.box(B, D))))
      fail(rep.associative, "(A box B) box C != A box (B box C) for A = " + C.describe(A));
  }
  // 2: 0 is a two-sided unit
  for (const auto& A : Lm) {
    ++rep.checks;
    if (!C.equal(C.box(A, id0), A) || !C.equal(C.box(id0, A), A)) fail(rep.unit, "unit fails at " + C.describe(A));
  }
  // 3: c(a, 0) = 1 = c(0, a)
  for (std::size_t a : {m, n, p}) {
    ++rep.checks;
    if (!C.equal(C.symmetry(a, 0), C.identity(a)) || !C.equal(C.symmetry(0, a), C.identity(a)))
      fail(rep.symmetry_unit, "c(" + std::to_string(a) + ", 0) is not the identity");
  }
  // 4: c(b, a) = c(a, b)^{-1}
  for (auto [a, b] : {std::pair{m, n}, std::pair{n, p}, std::pair{m, p}}) {
    ++rep.checks;
    if (!C.equal(C.compose(C.symmetry(a, b), C.symmetry(b, a)), C.identity(a + b)) ||
        !C.equal(C.symmetry(b, a), C.inverse(C.symmetry(a, b))))
      fail(rep.symmetry_inverse, "c(" + std::to_string(b) + "," + std::to_string(a) + ") is not the inverse");
  }
  // 5: (c(p, m) box 1_n) o c(m + n, p) = 1_m box c(n, p)
  ++rep.checks;
  {
    auto lhs = C.compose(C.box(C.symmetry(p, m), C.identity(n)), C.symmetry(m + n, p));
    auto rhs = C.box(C.identity(m), C.symmetry(n, p));
    if (!C.equal(lhs, rhs)) fail(rep.hexagon, "axiom 5: " + C.describe(lhs) + " vs " + C.describe(rhs));
  }
  // naturality: c(m, n) o (A box B) = (B box A) o c(m, n)
  const std::size_t pairs = Lm.size() * Ln.size();
  for (std::size_t t = 0; t < std::min<std::size_t>(pairs, 2000); ++t) {
    const auto& A = Lm[pairs <= 2000 ? t / Ln.size() : t % Lm.size()];
    const auto& B = Ln[pairs <= 2000 ? t % Ln.size() : (7 * t + 3) % Ln.size()];
    ++rep.checks;
    if (!C.equal(C.compose(C.symmetry(m, n), C.box(A, B)), C.compose(C.box(B, A), C.symmetry(m, n))))
      fail(rep.natural, "naturality fails for A = " + C.describe(A) + ", B = " + C.describe(B));
  }
  return rep;
}

}  // namespace hollab
