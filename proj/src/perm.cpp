#include "hollab/perm.hpp"

#include <numeric>

namespace hollab {

Perm perm_identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm perm_compose(const Perm& s, const Perm& t) {
  if (s.size() != t.size()) throw std::invalid_argument("perm degree mismatch");
  Perm out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[t[i]];
  return out;
}

Perm perm_inverse(const Perm& s) {
  Perm out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[s[i]] = static_cast<std::uint32_t>(i);
  return out;
}

bool perm_is_identity(const Perm& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != i) return false;
  return true;
}

int perm_sign(const Perm& s) {
  std::vector<bool> seen(s.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = s[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::size_t perm_order(const Perm& s) {
  std::vector<bool> seen(s.size(), false);
  std::size_t ord = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = s[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

bool perm_valid(const Perm& s) {
  std::vector<bool> hit(s.size(), false);
  for (auto v : s) {
    if (v >= s.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = p.size();
  for (auto v : p) h = h * 1000003u ^ v;
  return h;
}

std::vector<Perm> perm_closure(const std::vector<Perm>& gens, std::size_t degree, std::size_t budget) {
  return generate_group(gens, perm_identity(degree), perm_compose, budget, PermHash());
}

std::map<std::size_t, std::size_t> element_order_profile(const std::vector<Perm>& group) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& g : group) ++out[perm_order(g)];
  return out;
}

bool perm_group_is_abelian(const std::vector<Perm>& group) {
  for (const auto& a : group)
    for (const auto& b : group)
      if (perm_compose(a, b) != perm_compose(b, a)) return false;
  return true;
}

}  // namespace hollab
