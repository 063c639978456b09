#include "hollab/holomorph.hpp"

#include <random>
#include <stdexcept>
#include <unordered_set>

#include "hollab/integer.hpp"

namespace hollab {

std::size_t HolElementHash::operator()(const HolElement& h) const {
  std::size_t s = ResidueMatrixHash()(h.aut);
  for (auto v : h.trans.v) s = s * 1000003u ^ static_cast<std::size_t>(v);
  return s;
}

HolElement hol_identity(std::size_t n, std::int64_t m) {
  return {ResidueMatrix::identity(n, m), ResidueVector(n, m)};
}

namespace {

void same_group(const HolElement& a, const HolElement& b) {
  if (a.aut.modulus() != b.aut.modulus() || a.aut.rows() != b.aut.rows())
    throw contract_violation("holomorph elements over different groups");
}

}  // namespace

HolElement hol_mul(const HolElement& a, const HolElement& b) {
  same_group(a, b);
  return {a.aut * b.aut, b.aut.inverse() * a.trans + b.trans};
}

HolElement hol_inv(const HolElement& a) { return {a.aut.inverse(), a.aut * (-a.trans)}; }

std::vector<HolElement> hol_elements(std::size_t n, std::int64_t m, std::uint64_t budget) {
  auto gl = enumerate_gl(n, m, budget);
  FiniteAbelianGroup K = FiniteAbelianGroup::homocyclic(n, m);
  std::vector<HolElement> out;
  out.reserve(gl.size() * K.order());
  for (const auto& M : gl)
    for (std::size_t x = 0; x < K.order(); ++x) out.push_back({M, ResidueVector(K.decode(x), m)});
  return out;
}

ResidueVector hol_act(const HolElement& h, const ResidueVector& a) { return h.aut * (h.trans + a); }

ResidueMatrix hol_to_matrix(const HolElement& h) {
  const std::size_t n = h.aut.rows();
  const std::int64_t m = h.aut.modulus();
  ResidueMatrix out(n + 1, n + 1, m);
  ResidueMatrix b = h.aut.inverse().transpose();
  out.set(0, 0, 1);
  for (std::size_t j = 0; j < n; ++j) out.set(0, j + 1, h.trans.v[j]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i + 1, j + 1, b.at(i, j));
  return out;
}

ResidueMatrix hol_to_matrix_column(const HolElement& h) {
  const std::size_t n = h.aut.rows();
  const std::int64_t m = h.aut.modulus();
  ResidueMatrix out(n + 1, n + 1, m);
  ResidueVector mx = h.aut * (-h.trans);
  out.set(0, 0, 1);
  for (std::size_t i = 0; i < n; ++i) {
    out.set(i + 1, 0, mx.v[i]);
    for (std::size_t j = 0; j < n; ++j) out.set(i + 1, j + 1, h.aut.at(i, j));
  }
  return out;
}

std::optional<HolElement> matrix_to_hol(const ResidueMatrix& a) {
  if (a.rows() != a.cols() || a.rows() < 1) return std::nullopt;
  const std::size_t n = a.rows() - 1;
  const std::int64_t m = a.modulus();
  if (a.at(0, 0) != mod_reduce(1, m)) return std::nullopt;
  for (std::size_t i = 1; i <= n; ++i)
    if (a.at(i, 0) != 0) return std::nullopt;
  ResidueMatrix b(n, n, m);
  ResidueVector x(n, m);
  for (std::size_t j = 0; j < n; ++j) x.v[j] = a.at(0, j + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.set(i, j, a.at(i + 1, j + 1));
  if (!b.is_invertible()) return std::nullopt;
  return HolElement{b.transpose().inverse(), x};
}

// ---- permutation form -------------------------------------------------

Holomorph::Holomorph(FiniteAbelianGroup K, std::uint64_t budget) : K_(std::move(K)) {
  if (K_.order() > budget) throw std::length_error("too large");
  auts_ = automorphisms(K_);
  // identity first so that index 0 is the identity of Hol
  for (std::size_t i = 0; i < auts_.size(); ++i)
    if (perm_is_identity(auts_[i])) {
      std::swap(auts_[0], auts_[i]);
      break;
    }
  if (auts_.size() * K_.order() > budget) throw std::length_error("too large");
  for (std::size_t i = 0; i < auts_.size(); ++i) index_.emplace(auts_[i], i);
}

std::size_t Holomorph::aut_index(const Perm& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) throw std::invalid_argument("not an automorphism");
  return it->second;
}

std::size_t Holomorph::aut_mul(std::size_t f, std::size_t g) const {
  return aut_index(perm_compose(auts_[f], auts_[g]));
}

std::size_t Holomorph::aut_inv(std::size_t f) const { return aut_index(perm_inverse(auts_[f])); }

std::size_t Holomorph::mul(std::size_t a, std::size_t b) const {
  std::size_t f = aut_of(a), x = trans_of(a), g = aut_of(b), y = trans_of(b);
  Perm ginv = perm_inverse(auts_[g]);
  return encode(aut_mul(f, g), K_.add(ginv[x], y));
}

std::size_t Holomorph::inv(std::size_t a) const {
  std::size_t f = aut_of(a), x = trans_of(a);
  return encode(aut_inv(f), auts_[f][K_.neg(x)]);
}

Perm Holomorph::cayley(std::size_t h) const {
  const Perm& f = auts_[aut_of(h)];
  std::size_t x = trans_of(h);
  Perm out(K_.order());
  for (std::size_t a = 0; a < K_.order(); ++a) out[a] = f[K_.add(x, a)];
  return out;
}

std::size_t hol_order(const FiniteAbelianGroup& K, std::uint64_t budget) {
  if (K.order() > budget) throw std::length_error("too large");
  return K.order() * automorphisms(K).size();
}

bool is_hol_full_symmetric(const FiniteAbelianGroup& K, std::uint64_t budget) {
  Int fact = 1;
  for (std::size_t i = 2; i <= K.order(); ++i) fact *= static_cast<unsigned long>(i);
  return Int(static_cast<unsigned long>(hol_order(K, budget))) == fact;
}

CayleyEmbedding cayley_embed(const FiniteAbelianGroup& K, std::uint64_t budget) {
  Holomorph H(K, budget);
  CayleyEmbedding out;
  for (std::size_t x = 0; x < K.order(); ++x) out.translations.push_back(H.cayley(H.encode(0, x)));
  for (std::size_t f = 0; f < H.aut_count(); ++f) out.automorphisms.push_back(H.cayley(H.encode(f, 0)));
  std::vector<Perm> gens = out.translations;
  gens.insert(gens.end(), out.automorphisms.begin(), out.automorphisms.end());
  out.group = perm_closure(gens, K.order(), budget);
  std::unordered_set<Perm, PermHash> T(out.translations.begin(), out.translations.end());
  out.translations_normal = true;
  for (const auto& g : out.group) {
    Perm gi = perm_inverse(g);
    for (const auto& t : out.translations)
      if (!T.count(perm_compose(perm_compose(g, t), gi))) {
        out.translations_normal = false;
        return out;
      }
  }
  return out;
}

// ---- compatible maps ----------------------------------------------------

bool check_compatible(const Holomorph& G, const Holomorph& H, const std::vector<std::size_t>& F,
                      const std::vector<std::size_t>& Fp) {
  const auto& KG = G.kernel();
  const auto& KH = H.kernel();
  if (F.size() != KG.order() || Fp.size() != G.aut_count()) return false;
  if (!is_homomorphism(KG, KH, F)) return false;
  for (std::size_t f = 0; f < G.aut_count(); ++f)
    for (std::size_t g = 0; g < G.aut_count(); ++g)
      if (Fp[G.aut_mul(f, g)] != H.aut_mul(Fp[f], Fp[g])) return false;
  for (std::size_t g = 0; g < G.aut_count(); ++g)
    for (std::size_t x = 0; x < KG.order(); ++x)
      if (H.auts()[Fp[g]][F[x]] != F[G.auts()[g][x]]) return false;
  return true;
}

std::vector<std::size_t> build_F2(const Holomorph& G, const Holomorph& H, const std::vector<std::size_t>& F,
                                  const std::vector<std::size_t>& Fp) {
  std::vector<std::size_t> out(G.order());
  for (std::size_t h = 0; h < G.order(); ++h) out[h] = H.encode(Fp[G.aut_of(h)], F[G.trans_of(h)]);
  return out;
}

bool is_group_homomorphism(const Holomorph& G, const Holomorph& H, const std::vector<std::size_t>& map) {
  for (std::size_t a = 0; a < G.order(); ++a)
    for (std::size_t b = 0; b < G.order(); ++b)
      if (map[G.mul(a, b)] != H.mul(map[a], map[b])) return false;
  return true;
}

std::vector<std::vector<std::size_t>> aut_homomorphisms(const Holomorph& G, const Holomorph& H) {
  const std::size_t nG = G.aut_count(), nH = H.aut_count();
  if (nG > 64 || nH > 64) throw std::length_error("too large");
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> map(nG);
  // every set map is tried; the automorphism groups involved are tiny
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < nG; ++i) {
    total *= nH;
    if (total > 1'000'000) throw std::length_error("too large");
  }
  for (std::uint64_t n = 0; n < total; ++n) {
    std::uint64_t t = n;
    for (std::size_t i = 0; i < nG; ++i) {
      map[i] = t % nH;
      t /= nH;
    }
    bool ok = true;
    for (std::size_t f = 0; f < nG && ok; ++f)
      for (std::size_t g = 0; g < nG && ok; ++g)
        if (map[G.aut_mul(f, g)] != H.aut_mul(map[f], map[g])) ok = false;
    if (ok) out.push_back(map);
  }
  return out;
}

ReductionMaps cyclic_reduction(const Holomorph& G, const Holomorph& H) {
  if (G.kernel().rank() != 1 || H.kernel().rank() != 1) throw std::invalid_argument("cyclic groups only");
  const std::int64_t m = G.kernel().moduli()[0], d = H.kernel().moduli()[0];
  if (m % d != 0) throw std::invalid_argument("reduction needs d | m");
  ReductionMaps out;
  for (std::int64_t x = 0; x < m; ++x) out.F.push_back(static_cast<std::size_t>(x % d));
  for (const auto& f : G.auts()) {
    // f is multiplication by u = f(1); reduce u mod d
    std::int64_t u = static_cast<std::int64_t>(f[1 % m]) % d;
    Perm g(d);
    for (std::int64_t x = 0; x < d; ++x) g[x] = static_cast<std::uint32_t>(mul_mod(u, x, d));
    out.Fp.push_back(H.aut_index(g));
  }
  return out;
}

// ---- maximality, Sylow, module action ------------------------------------

bool is_maximal(const std::vector<ResidueMatrix>& H_gens, const std::vector<ResidueMatrix>& G,
                std::size_t budget) {
  if (G.empty()) throw std::invalid_argument("empty ambient group");
  if (G.size() > budget) throw std::length_error("too large");
  const ResidueMatrix I = ResidueMatrix::identity(G[0].rows(), G[0].modulus());
  auto mul = [](const ResidueMatrix& a, const ResidueMatrix& b) { return a * b; };
  auto H = generate_group(H_gens, I, mul, budget, ResidueMatrixHash());
  std::unordered_set<ResidueMatrix, ResidueMatrixHash> inH(H.begin(), H.end());
  if (H.size() == G.size()) return false;  // not proper
  std::unordered_set<ResidueMatrix, ResidueMatrixHash> covered;  // g already known to generate G with H
  for (const auto& g : G) {
    if (inH.count(g) || covered.count(g)) continue;
    auto gens = H_gens;
    gens.push_back(g);
    auto K = generate_group(gens, I, mul, budget, ResidueMatrixHash());
    if (K.size() != G.size()) return false;
    covered.insert(g);
  }
  return true;
}

SylowCheck sylow_order_check(unsigned n, unsigned long p, unsigned r) {
  SylowCheck out;
  auto hol_part = [&](unsigned rr) {
    // |Hol(+_n Z_{p^rr})| = p^{rr n} |GL(n, Z_{p^rr})|
    return rr * n + vp(gl_order(n, p, rr), p);
  };
  out.hol_p_part = hol_part(1);
  out.gl_p_part = vp(gl_order(n + 1, p, 1), p);
  out.equal = out.hol_p_part == out.gl_p_part;
  out.hol_p_part_r = hol_part(r);
  out.gl_p_part_r = vp(gl_order(n + 1, p, r), p);
  // closed form for the holomorph side
  unsigned closed = r * n + r * n * n - n * (n + 1) / 2;
  if (closed != out.hol_p_part_r) throw std::logic_error("sylow_order_check: closed form mismatch");
  out.differ_r = out.hol_p_part_r != out.gl_p_part_r;
  return out;
}

bool module_action_check(const FiniteAbelianGroup& K, std::size_t samples, std::uint64_t seed) {
  Holomorph H(K);
  const std::size_t k = K.order();
  using Elt = std::vector<long>;  // element of Z[K], coefficient per group element
  auto translate = [&](std::size_t x, const Elt& m) {
    Elt out(k, 0);
    for (std::size_t a = 0; a < k; ++a) out[K.add(x, a)] += m[a];
    return out;
  };
  auto apply_aut = [&](std::size_t f, const Elt& m) {
    Elt out(k, 0);
    for (std::size_t a = 0; a < k; ++a) out[H.auts()[f][a]] += m[a];
    return out;
  };
  auto act = [&](std::size_t h, const Elt& m) { return apply_aut(H.aut_of(h), translate(H.trans_of(h), m)); };

  std::mt19937_64 rng(seed);
  auto random_elt = [&]() {
    Elt m(k);
    for (auto& c : m) c = static_cast<long>(rng() % 7) - 3;
    return m;
  };
  auto basis = [&](std::size_t a) {
    Elt m(k, 0);
    m[a] = 1;
    return m;
  };
  auto check = [&](std::size_t a, std::size_t b, const Elt& m) {
    std::size_t f = H.aut_of(a), x = H.trans_of(a);
    // action condition: f(x(m)) = f(x)(f(m))
    if (apply_aut(f, translate(x, m)) != translate(H.auts()[f][x], apply_aut(f, m))) return false;
    return act(H.mul(a, b), m) == act(a, act(b, m));
  };

  const std::size_t n = H.order();
  if (n * n * k <= 1000) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t m = 0; m < k; ++m)
          if (!check(a, b, basis(m))) return false;
    return true;
  }
  for (std::size_t s = 0; s < samples; ++s) {
    std::size_t a = rng() % n, b = rng() % n;
    if (!check(a, b, random_elt())) return false;
  }
  return true;
}

}  // namespace hollab
