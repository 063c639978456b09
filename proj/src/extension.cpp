#include "hollab/extension.hpp"

#include <stdexcept>

namespace hollab {

SplitExtension::SplitExtension(FiniteAbelianGroup K, std::vector<Perm> quotient, std::vector<Perm> phi)
    : K_(std::move(K)), H_(std::move(quotient)), phi_(std::move(phi)) {
  if (H_.size() != phi_.size()) throw std::invalid_argument("phi must be given on every element of H");
  for (std::size_t i = 0; i < H_.size(); ++i) hindex_.emplace(H_[i], i);
}

std::size_t SplitExtension::quotient_index(const Perm& p) const {
  auto it = hindex_.find(p);
  if (it == hindex_.end()) throw std::logic_error("quotient not closed");
  return it->second;
}

// (h, x)(h', y) = (hh', phi(h')^{-1}(x) + y), the multiplication of Hol(K)
// transported along phi.
std::size_t SplitExtension::mul(std::size_t a, std::size_t b) const {
  std::size_t h = a / K_.order(), x = a % K_.order();
  std::size_t g = b / K_.order(), y = b % K_.order();
  Perm ginv = perm_inverse(phi_[g]);
  return encode(quotient_index(perm_compose(H_[h], H_[g])), K_.add(ginv[x], y));
}

std::size_t SplitExtension::inv(std::size_t a) const {
  std::size_t h = a / K_.order(), x = a % K_.order();
  return encode(quotient_index(perm_inverse(H_[h])), phi_[h][K_.neg(x)]);
}

bool SplitExtension::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::size_t SplitExtension::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t p = a; p != 0; p = mul(p, a)) ++k;
  return k;
}

std::map<std::size_t, std::size_t> SplitExtension::element_order_profile() const {
  std::map<std::size_t, std::size_t> out;
  for (std::size_t a = 0; a < order(); ++a) ++out[element_order(a)];
  return out;
}

std::vector<Perm> SplitExtension::recovered_phi() const {
  std::vector<Perm> out;
  for (std::size_t h = 0; h < H_.size(); ++h) {
    Perm f(K_.order());
    for (std::size_t x = 0; x < K_.order(); ++x) {
      std::size_t c = mul(mul(section(h), inclusion(x)), inv(section(h)));
      if (projection(c) != 0) throw std::logic_error("kernel not normal");
      f[x] = static_cast<std::uint32_t>(c % K_.order());
    }
    out.push_back(std::move(f));
  }
  return out;
}

bool SplitExtension::verify_into_hol(const Holomorph& hol) const {
  auto theta = [&](std::size_t a) {
    return hol.encode(hol.aut_index(phi_[a / K_.order()]), a % K_.order());
  };
  for (std::size_t a = 0; a < order(); ++a) {
    if (hol.aut_of(theta(a)) != hol.aut_index(phi_[projection(a)])) return false;
    for (std::size_t b = 0; b < order(); ++b)
      if (theta(mul(a, b)) != hol.mul(theta(a), theta(b))) return false;
  }
  return true;
}

SplitExtension pullback_extension(const FiniteAbelianGroup& K, const std::vector<Perm>& H_gens,
                                  std::size_t H_degree, const std::vector<Perm>& phi_gens) {
  if (H_gens.size() != phi_gens.size()) throw std::invalid_argument("phi needs one image per generator");
  for (const auto& f : phi_gens)
    if (f.size() != K.order() || !perm_valid(f) || !is_homomorphism(K, K, {f.begin(), f.end()}))
      throw std::invalid_argument("phi image is not an automorphism");

  // breadth-first walk of the Cayley graph of H, carrying phi along
  std::vector<Perm> elems{perm_identity(H_degree)}, images{perm_identity(K.order())};
  std::map<Perm, std::size_t> index{{elems[0], 0}};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (std::size_t g = 0; g < H_gens.size(); ++g) {
      Perm h = perm_compose(elems[head], H_gens[g]);
      Perm f = perm_compose(images[head], phi_gens[g]);
      auto [it, fresh] = index.emplace(h, elems.size());
      if (fresh) {
        if (elems.size() >= 10'000) throw std::length_error("too large");
        elems.push_back(std::move(h));
        images.push_back(std::move(f));
      } else if (images[it->second] != f) {
        throw std::invalid_argument("phi is not a homomorphism");
      }
    }
  return SplitExtension(K, std::move(elems), std::move(images));
}

}  // namespace hollab
