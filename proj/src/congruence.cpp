#include "hollab/congruence.hpp"

#include <stdexcept>
#include <unordered_set>

#include "hollab/parallel.hpp"

namespace hollab {

namespace {

using HolSet = std::unordered_set<HolElement, HolElementHash>;

HolElement lift(const HolElement& g, std::int64_t m) {
  ResidueVector v(g.trans.v, m);
  return {g.aut.lift(m), v};
}

// (1 + scale*A, scale*x) over every A, x with entries mod m/scale
std::vector<HolElement> scaled_family(unsigned n, std::int64_t m, std::int64_t scale) {
  const std::int64_t range = m / scale;
  const std::size_t cells = static_cast<std::size_t>(n) * n + n;
  const std::uint64_t total = static_cast<std::uint64_t>(ipow64(range, static_cast<unsigned>(cells)));
  std::vector<HolElement> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    ResidueMatrix M = ResidueMatrix::identity(n, m);
    ResidueVector v(n, m);
    std::uint64_t t = idx;
    for (std::size_t c = 0; c < cells; ++c, t /= static_cast<std::uint64_t>(range)) {
      std::int64_t e = static_cast<std::int64_t>(t % static_cast<std::uint64_t>(range)) * scale;
      if (c < static_cast<std::size_t>(n) * n) M.set(c / n, c % n, M.at(c / n, c % n) + e);
      else v.v[c - static_cast<std::size_t>(n) * n] = e;
    }
    out.push_back({M, v});
  }
  return out;
}

bool divisible(const HolElement& g, std::int64_t d) {
  const std::size_t n = g.trans.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (g.trans.v[i] % d) return false;
    for (std::size_t j = 0; j < n; ++j)
      if ((g.aut.at(i, j) - (i == j)) % d) return false;
  }
  return true;
}

HolElement commutator(const HolElement& a, const HolElement& b) {
  return hol_mul(hol_mul(hol_mul(a, b), hol_inv(a)), hol_inv(b));
}

bool all_of_parallel(std::size_t n, const std::function<bool(std::size_t)>& pred) {
  std::vector<char> ok(n, 0);
  parallel_for(n, [&](std::size_t i) { ok[i] = pred(i); });
  for (char c : ok)
    if (!c) return false;
  return true;
}

}  // namespace

std::int64_t GammaLevel::modulus() const { return ipow64(p, k + 1); }

bool in_gamma(const HolElement& g, const GammaLevel& L) {
  return g.aut.modulus() == L.modulus() && g.trans.modulus == L.modulus() && g.aut.rows() == L.n &&
         g.trans.size() == L.n && divisible(g, L.p);
}

Int gamma_order(const GammaLevel& L) { return ipow(Int(L.p), L.k * (L.n * L.n + L.n)); }

std::vector<HolElement> gamma_enumerate(const GammaLevel& L, std::uint64_t budget) {
  if (gamma_order(L) > Int(static_cast<unsigned long>(budget)))
    throw std::length_error("Gamma order exceeds the enumeration budget");
  return scaled_family(L.n, L.modulus(), L.p);
}

HolElement hol_pow(const HolElement& g, std::uint64_t e) {
  HolElement out = hol_identity(g.trans.size(), g.trans.modulus), base = g;
  for (; e; e >>= 1) {
    if (e & 1) out = hol_mul(out, base);
    base = hol_mul(base, base);
  }
  return out;
}

Omega1Report omega1_and_kernel_check(const GammaLevel& L, std::uint64_t budget) {
  auto G = gamma_enumerate(L, budget);
  const HolElement e = hol_identity(L.n, L.modulus());
  const std::int64_t pk = ipow64(L.p, L.k);
  Omega1Report rep;
  std::vector<char> in_omega(G.size()), in_kernel(G.size());
  parallel_for(G.size(), [&](std::size_t i) {
    in_omega[i] = hol_pow(G[i], static_cast<std::uint64_t>(L.p)) == e;
    in_kernel[i] = divisible(G[i], pk);
  });
  rep.omega_is_kernel = true;
  std::vector<std::size_t> omega;
  for (std::size_t i = 0; i < G.size(); ++i) {
    rep.omega_size += in_omega[i];
    rep.kernel_size += in_kernel[i];
    if (in_omega[i] != in_kernel[i]) rep.omega_is_kernel = false;
    if (in_omega[i]) omega.push_back(i);
  }
  rep.central = all_of_parallel(omega.size(), [&](std::size_t w) {
    const HolElement& z = G[omega[w]];
    for (const auto& g : G)
      if (!(hol_mul(z, g) == hol_mul(g, z))) return false;
    return true;
  });
  return rep;
}

HolElement p_power_map(const HolElement& g, std::int64_t p) {
  const std::int64_t m = g.trans.modulus;
  if (!(hol_pow(g, static_cast<std::uint64_t>(p)) == hol_identity(g.trans.size(), m)))
    throw std::invalid_argument("input not exponent-p");
  return hol_pow(lift(g, m * p), static_cast<std::uint64_t>(p));
}

bool p_power_bijective(const GammaLevel& L, std::uint64_t budget) {
  if (L.k < 2) throw std::invalid_argument("p-power map needs k >= 2");
  GammaLevel below{L.n, L.k - 1, L.p};
  auto omega_of = [&](const GammaLevel& lv) {
    std::vector<HolElement> out;
    const HolElement e = hol_identity(lv.n, lv.modulus());
    for (auto& g : gamma_enumerate(lv, budget))
      if (hol_pow(g, static_cast<std::uint64_t>(lv.p)) == e) out.push_back(std::move(g));
    return out;
  };
  auto src = omega_of(below), dst = omega_of(L);
  if (src.size() != dst.size()) return false;
  HolSet image, target(dst.begin(), dst.end());
  for (const auto& g : src) {
    HolElement h = p_power_map(g, L.p);
    if (!target.count(h) || !image.insert(h).second) return false;
  }
  return true;
}

// ---- roots ----------------------------------------------------------------

namespace {

struct RootShape {
  std::int64_t root_step, target_step;
  unsigned power;
};

RootShape root_shape(std::int64_t p, RootPart part) {
  switch (part) {
    case RootPart::odd_pth_power:
      if (p == 2 || !is_prime(p)) throw std::invalid_argument("part 1 needs an odd prime");
      return {p, p * p, static_cast<unsigned>(p)};
    case RootPart::square:
      if (p != 2) throw std::invalid_argument("part 2 is for p = 2");
      return {4, 8, 2};
    default:
      if (p != 2) throw std::invalid_argument("part 3 is for p = 2");
      return {4, 16, 4};
  }
}

}  // namespace

std::int64_t mike_lemma_solve(std::int64_t a, std::int64_t p, unsigned k, RootPart part) {
  const RootShape s = root_shape(p, part);
  const std::int64_t m = ipow64(p, k + 1);
  const std::int64_t target = mod_reduce(1 + s.target_step * mod_reduce(a, m), m);
  for (std::int64_t b = 0; b < m; ++b)
    if (pow_mod(mod_reduce(1 + s.root_step * b, m), s.power, m) == target) return b;
  throw std::runtime_error("no root found for a = " + std::to_string(a) + " mod " + std::to_string(m));
}

bool mike_lemma_exhaustive(std::int64_t p, unsigned k, RootPart part) {
  const RootShape s = root_shape(p, part);
  const std::int64_t m = ipow64(p, k + 1);
  std::unordered_set<std::int64_t> powers;
  for (std::int64_t b = 0; b < m; ++b) powers.insert(pow_mod(mod_reduce(1 + s.root_step * b, m), s.power, m));
  for (std::int64_t a = 0; a < m; ++a)
    if (!powers.count(mod_reduce(1 + s.target_step * a, m))) return false;
  return true;
}

// ---- almost powerful embedding ----------------------------------------

std::vector<HolElement> generated_subgroup(const std::vector<HolElement>& gens, std::size_t n, std::int64_t m,
                                           std::size_t cap) {
  HolElement e = hol_identity(n, m);
  HolSet seen{e};
  std::vector<HolElement> out{e};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      HolElement h = hol_mul(out[i], g);
      if (seen.insert(h).second) {
        out.push_back(h);
        if (out.size() > cap) throw std::length_error("subgroup closure exceeds the cap");
      }
    }
  return out;
}

EmbeddingReport almost_powerfully_embedded_check(const GammaLevel& L, std::uint64_t budget) {
  const std::int64_t m = L.modulus();
  auto G = gamma_enumerate(L, budget);
  std::vector<HolElement> N;
  if (L.p == 2) {
    if (L.k < 2) throw std::invalid_argument("p = 2 needs k >= 2");
    N = scaled_family(L.n, m, 4);
  } else {
    N = G;
  }
  if (static_cast<double>(G.size()) * static_cast<double>(N.size()) > static_cast<double>(budget))
    throw std::length_error("|G| |N| exceeds the budget");
  EmbeddingReport rep;
  rep.g_size = G.size();
  rep.n_size = N.size();
  auto power_subgroup = [&](std::uint64_t e) {
    HolSet gens;
    for (const auto& x : N) gens.insert(hol_pow(x, e));
    auto sub = generated_subgroup({gens.begin(), gens.end()}, L.n, m);
    return HolSet(sub.begin(), sub.end());
  };
  auto within = [&](const std::vector<HolElement>& A, const std::vector<HolElement>& B, const HolSet& S) {
    return all_of_parallel(A.size(), [&](std::size_t i) {
      for (const auto& b : B)
        if (!S.count(commutator(A[i], b))) return false;
      return true;
    });
  };
  HolSet Np = power_subgroup(static_cast<std::uint64_t>(L.p));
  rep.power_subgroup_size = Np.size();
  rep.commutators = G.size() * N.size();
  rep.g_n_in_powers = within(G, N, Np);
  if (L.p == 2) {
    HolSet N4 = power_subgroup(4);
    rep.n_n_in_fourth = within(N, N, N4);
    rep.commutators += N.size() * N.size();
  }
  return rep;
}

}  // namespace hollab
