#include "hollab/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "hollab/parallel.hpp"

namespace hollab {

PointHol ph_identity(const FiniteAbelianGroup& K) { return {perm_identity(K.order()), 0}; }

PointHol ph_mul(const FiniteAbelianGroup& K, const PointHol& a, const PointHol& b) {
  return {perm_compose(a.aut, b.aut), K.add(perm_inverse(b.aut)[a.trans], b.trans)};
}

PointHol ph_inv(const FiniteAbelianGroup& K, const PointHol& a) { return {perm_inverse(a.aut), a.aut[K.neg(a.trans)]}; }

std::size_t ph_act(const FiniteAbelianGroup& K, const PointHol& h, std::size_t point) {
  return h.aut[K.add(h.trans, point)];
}

Perm ph_as_map(const FiniteAbelianGroup& K, const PointHol& h) {
  Perm out(K.order());
  for (std::size_t a = 0; a < K.order(); ++a) out[a] = static_cast<std::uint32_t>(ph_act(K, h, a));
  return out;
}

FiniteAbelianGroup power_group(const FiniteAbelianGroup& K, std::size_t q) {
  std::vector<std::int64_t> mod;
  for (std::size_t i = 0; i < q; ++i) mod.insert(mod.end(), K.moduli().begin(), K.moduli().end());
  return FiniteAbelianGroup(mod);
}

namespace {

std::vector<std::size_t> split(std::size_t point, std::size_t base, std::size_t q) {
  std::vector<std::size_t> out(q);
  for (std::size_t i = 0; i < q; ++i, point /= base) out[i] = point % base;
  return out;
}

std::size_t join(const std::vector<std::size_t>& parts, std::size_t base) {
  std::size_t v = 0;
  for (std::size_t i = parts.size(); i-- > 0;) v = v * base + parts[i];
  return v;
}

void same_shape(const WreathElement& a, const WreathElement& b) {
  if (a.sigma.size() != b.sigma.size() || a.parts.size() != a.sigma.size() || b.parts.size() != b.sigma.size())
    throw std::invalid_argument("wreath elements of different shape");
}

}  // namespace

WreathElement wreath_identity(const FiniteAbelianGroup& K, std::size_t q) {
  return {perm_identity(q), std::vector<PointHol>(q, ph_identity(K))};
}

WreathElement wreath_mul(const FiniteAbelianGroup& K, const WreathElement& a, const WreathElement& b) {
  same_shape(a, b);
  WreathElement out{perm_compose(a.sigma, b.sigma), {}};
  for (std::size_t i = 0; i < b.parts.size(); ++i) out.parts.push_back(ph_mul(K, a.parts[b.sigma[i]], b.parts[i]));
  return out;
}

WreathElement wreath_inv(const FiniteAbelianGroup& K, const WreathElement& a) {
  Perm s = perm_inverse(a.sigma);
  WreathElement out{s, {}};
  for (std::size_t i = 0; i < a.parts.size(); ++i) out.parts.push_back(ph_inv(K, a.parts[s[i]]));
  return out;
}

WreathElement wreath_mul_literal(const FiniteAbelianGroup& K, const WreathElement& a, const WreathElement& b) {
  same_shape(a, b);
  Perm tinv = perm_inverse(b.sigma);
  WreathElement out{perm_compose(a.sigma, b.sigma), {}};
  for (std::size_t i = 0; i < b.parts.size(); ++i) out.parts.push_back(ph_mul(K, a.parts[tinv[i]], b.parts[i]));
  return out;
}

std::vector<Perm> symmetric_group(std::size_t q) {
  std::vector<Perm> out;
  Perm p = perm_identity(q);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<WreathElement> wreath_elements(const FiniteAbelianGroup& K, const std::vector<Perm>& P, WreathBase base,
                                           std::size_t budget) {
  std::vector<PointHol> local;
  std::vector<Perm> auts = base == WreathBase::plain ? std::vector<Perm>{perm_identity(K.order())} : automorphisms(K);
  for (const auto& f : auts)
    for (std::size_t x = 0; x < (base == WreathBase::aut ? 1 : K.order()); ++x) local.push_back({f, x});
  if (P.empty()) return {};
  const std::size_t q = P.front().size();
  double total = static_cast<double>(P.size());
  for (std::size_t i = 0; i < q; ++i) total *= static_cast<double>(local.size());
  if (total > static_cast<double>(budget)) throw std::length_error("wreath product exceeds the budget");
  std::vector<WreathElement> out;
  const std::size_t per = static_cast<std::size_t>(total) / P.size();
  for (const auto& s : P)
    for (std::size_t idx = 0; idx < per; ++idx) {
      WreathElement w{s, {}};
      for (std::size_t c : split(idx, local.size(), q)) w.parts.push_back(local[c]);
      out.push_back(std::move(w));
    }
  return out;
}

std::optional<std::vector<WreathElement>> literal_associativity_failure(const FiniteAbelianGroup& K, std::size_t q) {
  auto all = wreath_elements(K, symmetric_group(q), WreathBase::plain);
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) {
        auto l = wreath_mul_literal(K, wreath_mul_literal(K, a, b), c);
        auto r = wreath_mul_literal(K, a, wreath_mul_literal(K, b, c));
        if (!(l == r)) return std::vector<WreathElement>{a, b, c};
      }
  return std::nullopt;
}

Perm embed_i(const FiniteAbelianGroup& K, const WreathElement& w) {
  const std::size_t q = w.sigma.size(), base = K.order();
  const Perm sinv = perm_inverse(w.sigma);
  std::size_t total = 1;
  for (std::size_t i = 0; i < q; ++i) total *= base;
  Perm out(total);
  for (std::size_t pt = 0; pt < total; ++pt) {
    auto x = split(pt, base, q);
    std::vector<std::size_t> y(q);
    for (std::size_t k = 0; k < q; ++k) y[k] = w.parts[sinv[k]].aut[x[sinv[k]]];
    out[pt] = static_cast<std::uint32_t>(join(y, base));
  }
  return out;
}

Perm phi_perm(const FiniteAbelianGroup& K, const Perm& sigma) {
  return embed_i(K, {sigma, std::vector<PointHol>(sigma.size(), ph_identity(K))});
}

PointHol embed_j(const FiniteAbelianGroup& K, const WreathElement& w) {
  std::vector<std::size_t> x;
  for (const auto& h : w.parts) x.push_back(h.trans);
  return {embed_i(K, w), join(x, K.order())};
}

namespace {

template <class Image, class Mul, class Eq>
EmbeddingCheck check_map(const std::vector<WreathElement>& dom, const FiniteAbelianGroup& K, Image image, Mul mul,
                         Eq eq) {
  EmbeddingCheck rep;
  rep.domain = dom.size();
  std::vector<decltype(image(dom[0]))> img;
  for (const auto& w : dom) img.push_back(image(w));
  std::vector<char> ok(dom.size(), 0);
  parallel_for(dom.size(), [&](std::size_t a) {
    for (std::size_t b = 0; b < dom.size(); ++b)
      if (!eq(image(wreath_mul(K, dom[a], dom[b])), mul(img[a], img[b]))) return;
    ok[a] = 1;
  });
  rep.homomorphism = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  // kernel: only the identity may map to the identity
  const auto e = image(wreath_identity(K, dom[0].sigma.size()));
  std::size_t kernel = 0;
  for (const auto& v : img) kernel += eq(v, e);
  rep.injective = kernel == 1;
  rep.image = rep.injective && rep.homomorphism ? dom.size() : 0;
  return rep;
}

}  // namespace

EmbeddingCheck check_embed_i(const FiniteAbelianGroup& K, std::size_t q, std::size_t budget) {
  auto dom = wreath_elements(K, symmetric_group(q), WreathBase::aut, budget);
  return check_map(
      dom, K, [&](const WreathElement& w) { return embed_i(K, w); },
      [](const Perm& a, const Perm& b) { return perm_compose(a, b); }, [](const Perm& a, const Perm& b) { return a == b; });
}

EmbeddingCheck check_embed_j(const FiniteAbelianGroup& K, std::size_t q, std::size_t budget) {
  auto dom = wreath_elements(K, symmetric_group(q), WreathBase::hol, budget);
  const FiniteAbelianGroup Kq = power_group(K, q);
  EmbeddingCheck rep = check_map(
      dom, K, [&](const WreathElement& w) { return embed_j(K, w); },
      [&](const PointHol& a, const PointHol& b) { return ph_mul(Kq, a, b); },
      [](const PointHol& a, const PointHol& b) { return a == b; });
  // the base K^q goes to the translations, identically
  for (std::size_t x = 0; x < Kq.order(); ++x) {
    WreathElement w = wreath_identity(K, q);
    auto xs = split(x, K.order(), q);
    for (std::size_t i = 0; i < q; ++i) w.parts[i].trans = xs[i];
    PointHol j = embed_j(K, w);
    if (!(j == PointHol{perm_identity(Kq.order()), x})) rep.base_is_inclusion = false;
  }
  return rep;
}

PullbackCheck wreath_pullback_check(const std::vector<Perm>& P, std::size_t q, const FiniteAbelianGroup& K) {
  PullbackCheck rep;
  const FiniteAbelianGroup Kq = power_group(K, q);
  auto dom = wreath_elements(K, P, WreathBase::plain);
  rep.wreath_order = dom.size();
  // phi must be an injective homomorphism into Aut(K^q)
  rep.phi_injective_hom = true;
  std::unordered_set<Perm, PermHash> phis;
  for (const auto& s : P) {
    Perm f = phi_perm(K, s);
    std::vector<std::size_t> fm(f.begin(), f.end());
    if (!is_homomorphism(Kq, Kq, fm)) rep.phi_injective_hom = false;
    phis.insert(f);
    for (const auto& t : P)
      if (!(phi_perm(K, perm_compose(s, t)) == perm_compose(f, phi_perm(K, t)))) rep.phi_injective_hom = false;
  }
  if (phis.size() != P.size()) rep.phi_injective_hom = false;
  // each h pairs with every X = (phi(h), x)
  rep.pullback_order = P.size() * Kq.order();
  struct Pair {
    Perm h;
    PointHol X;
    bool operator==(const Pair& o) const = default;
  };
  auto to_pair = [&](const WreathElement& w) { return Pair{w.sigma, embed_j(K, w)}; };
  std::vector<Pair> img;
  std::unordered_set<std::string> seen;
  bool in_pullback = true;
  for (const auto& w : dom) {
    Pair p = to_pair(w);
    if (!(p.X.aut == phi_perm(K, p.h))) in_pullback = false;
    std::ostringstream key;
    for (auto v : p.h) key << v << ",";
    key << "|" << p.X.trans;
    seen.insert(key.str());
    img.push_back(std::move(p));
  }
  rep.bijective = in_pullback && seen.size() == dom.size() && dom.size() == rep.pullback_order;
  rep.homomorphism = true;
  for (std::size_t a = 0; a < dom.size(); ++a)
    for (std::size_t b = 0; b < dom.size(); ++b) {
      Pair prod{perm_compose(img[a].h, img[b].h), ph_mul(Kq, img[a].X, img[b].X)};
      if (!(to_pair(wreath_mul(K, dom[a], dom[b])) == prod)) rep.homomorphism = false;
    }
  return rep;
}

Perm block_permutation(const Perm& sigma, const std::vector<Perm>& taus) {
  const std::size_t q = sigma.size(), n = taus.empty() ? 0 : taus[0].size();
  Perm out(q * n);
  for (std::size_t b = 0; b < q; ++b)
    for (std::size_t u = 0; u < n; ++u) out[b * n + u] = static_cast<std::uint32_t>(sigma[b] * n + taus[b][u]);
  return out;
}

std::size_t double_wreath_square(const FiniteAbelianGroup& K, std::size_t q, std::size_t n, std::size_t samples,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto Sq = symmetric_group(q), Sn = symmetric_group(n);
  auto auts = automorphisms(K);
  const FiniteAbelianGroup Kn = power_group(K, n), Kqn = power_group(K, q * n);
  auto pick = [&](std::size_t m) { return static_cast<std::size_t>(rng() % m); };
  std::size_t bad = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    Perm sigma = Sq[pick(Sq.size())];
    std::vector<Perm> taus;
    std::vector<std::vector<PointHol>> h(q);
    for (std::size_t b = 0; b < q; ++b) {
      taus.push_back(Sn[pick(Sn.size())]);
      for (std::size_t u = 0; u < n; ++u) h[b].push_back({auts[pick(auts.size())], pick(K.order())});
    }
    // top then right: S_{qn} wr Hol(K) -> Hol(K^{qn})
    WreathElement flat{block_permutation(sigma, taus), {}};
    for (std::size_t b = 0; b < q; ++b) flat.parts.insert(flat.parts.end(), h[b].begin(), h[b].end());
    PointHol one = embed_j(K, flat);
    // left then bottom: S_q wr Hol(K^n) -> Hol((K^n)^q)
    WreathElement outer{sigma, {}};
    for (std::size_t b = 0; b < q; ++b) outer.parts.push_back(embed_j(K, {taus[b], h[b]}));
    PointHol two = embed_j(Kn, outer);
    if (!(one == two) || !(ph_as_map(Kqn, one) == ph_as_map(Kqn, two))) ++bad;
  }
  return bad;
}

std::string to_string(const WreathElement& w) {
  std::ostringstream os;
  os << "([";
  for (std::size_t i = 0; i < w.sigma.size(); ++i) os << (i ? " " : "") << w.sigma[i] + 1;
  os << "]";
  for (const auto& p : w.parts) {
    os << ", (";
    bool id = perm_is_identity(p.aut);
    if (!id) {
      os << "f[";
      for (std::size_t i = 0; i < p.aut.size(); ++i) os << (i ? " " : "") << p.aut[i];
      os << "] ";
    }
    os << p.trans << ")";
  }
  os << ")";
  return os.str();
}

}  // namespace hollab
