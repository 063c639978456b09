#include "hollab/abelian.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

#include "hollab/integer.hpp"

namespace hollab {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  for (auto m : moduli_) {
    if (m < 1) throw std::invalid_argument("cyclic factor must be >= 1");
    order_ *= static_cast<std::size_t>(m);
  }
}

FiniteAbelianGroup FiniteAbelianGroup::homocyclic(std::size_t n, std::int64_t m) {
  return FiniteAbelianGroup(std::vector<std::int64_t>(n, m));
}

bool FiniteAbelianGroup::is_homocyclic() const {
  for (auto m : moduli_)
    if (m != moduli_.front()) return false;
  return true;
}

std::vector<std::int64_t> FiniteAbelianGroup::decode(std::size_t idx) const {
  std::vector<std::int64_t> out(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    out[i] = static_cast<std::int64_t>(idx % moduli_[i]);
    idx /= moduli_[i];
  }
  return out;
}

std::size_t FiniteAbelianGroup::encode(const std::vector<std::int64_t>& coords) const {
  if (coords.size() != moduli_.size()) throw std::invalid_argument("coordinate count mismatch");
  std::size_t idx = 0;
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    std::int64_t v = coords[i] % moduli_[i];
    if (v < 0) v += moduli_[i];
    idx = idx * moduli_[i] + static_cast<std::size_t>(v);
  }
  return idx;
}

std::size_t FiniteAbelianGroup::add(std::size_t a, std::size_t b) const {
  std::size_t out = 0, radix = 1;
  for (auto m : moduli_) {
    std::size_t um = static_cast<std::size_t>(m);
    out += ((a % um + b % um) % um) * radix;
    a /= um;
    b /= um;
    radix *= um;
  }
  return out;
}

std::size_t FiniteAbelianGroup::neg(std::size_t a) const { return scale(a, -1); }

std::size_t FiniteAbelianGroup::scale(std::size_t a, std::int64_t k) const {
  auto c = decode(a);
  for (auto& v : c) v *= k;
  return encode(c);
}

std::size_t FiniteAbelianGroup::element_order(std::size_t a) const {
  auto c = decode(a);
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < c.size(); ++i) ord = std::lcm(ord, moduli_[i] / std::gcd(moduli_[i], c[i]));
  return static_cast<std::size_t>(ord);
}

std::size_t FiniteAbelianGroup::generator(std::size_t i) const {
  std::vector<std::int64_t> c(moduli_.size(), 0);
  c.at(i) = 1;
  return encode(c);
}

std::string FiniteAbelianGroup::name() const {
  if (moduli_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < moduli_.size(); ++i) s += (i ? "+Z" : "Z") + std::to_string(moduli_[i]);
  return s;
}

namespace {

// Extends images of the cyclic generators to a map on all of G.
std::vector<std::size_t> extend_from_generators(const FiniteAbelianGroup& G, const FiniteAbelianGroup& H,
                                                const std::vector<std::size_t>& images) {
  std::vector<std::size_t> map(G.order());
  for (std::size_t idx = 0; idx < G.order(); ++idx) {
    auto c = G.decode(idx);
    std::size_t v = 0;
    for (std::size_t i = 0; i < c.size(); ++i) v = H.add(v, H.scale(images[i], c[i]));
    map[idx] = v;
  }
  return map;
}

// Every choice of generator images respecting the orders of the generators.
void for_each_generator_assignment(const FiniteAbelianGroup& G, const FiniteAbelianGroup& H,
                                   std::uint64_t budget,
                                   const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::vector<std::size_t>> candidates(G.rank());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < G.rank(); ++i) {
    for (std::size_t h = 0; h < H.order(); ++h)
      if (G.moduli()[i] % static_cast<std::int64_t>(H.element_order(h)) == 0) candidates[i].push_back(h);
    total *= candidates[i].size();
    if (total > budget) throw std::length_error("too large");
  }
  std::vector<std::size_t> pick(G.rank(), 0), images(G.rank());
  for (std::uint64_t n = 0; n < total; ++n) {
    std::uint64_t t = n;
    for (std::size_t i = 0; i < G.rank(); ++i) {
      images[i] = candidates[i][t % candidates[i].size()];
      t /= candidates[i].size();
    }
    fn(images);
  }
}

}  // namespace

std::vector<Perm> automorphisms(const FiniteAbelianGroup& K, std::uint64_t budget) {
  std::vector<Perm> out;
  for_each_generator_assignment(K, K, budget, [&](const std::vector<std::size_t>& images) {
    auto map = extend_from_generators(K, K, images);
    Perm p(map.begin(), map.end());
    if (perm_valid(p)) out.push_back(std::move(p));
  });
  return out;
}

bool is_homomorphism(const FiniteAbelianGroup& G, const FiniteAbelianGroup& H,
                     const std::vector<std::size_t>& map) {
  if (map.size() != G.order()) return false;
  for (std::size_t a = 0; a < G.order(); ++a)
    for (std::size_t b = 0; b < G.order(); ++b)
      if (map[G.add(a, b)] != H.add(map[a], map[b])) return false;
  return true;
}

std::vector<std::vector<std::size_t>> homomorphisms(const FiniteAbelianGroup& G, const FiniteAbelianGroup& H) {
  std::vector<std::vector<std::size_t>> out;
  for_each_generator_assignment(G, H, 5'000'000, [&](const std::vector<std::size_t>& images) {
    out.push_back(extend_from_generators(G, H, images));
  });
  return out;
}

namespace {

void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FiniteAbelianGroup> abelian_groups_up_to(std::size_t n) {
  std::vector<FiniteAbelianGroup> out;
  for (std::size_t order = 1; order <= n; ++order) {
    // one partition per prime; the Cartesian product over primes gives the classes
    std::vector<std::vector<std::vector<std::int64_t>>> per_prime;
    for (auto& [p, e] : factor(Int(static_cast<unsigned long>(order)))) {
      std::vector<std::vector<unsigned>> parts;
      std::vector<unsigned> cur;
      partitions(e, e, cur, parts);
      std::vector<std::vector<std::int64_t>> options;
      for (auto& part : parts) {
        std::vector<std::int64_t> mods;
        for (auto k : part) mods.push_back(ipow64(p.get_si(), k));
        options.push_back(mods);
      }
      per_prime.push_back(options);
    }
    std::vector<std::vector<std::int64_t>> acc{{}};
    for (auto& options : per_prime) {
      std::vector<std::vector<std::int64_t>> next;
      for (auto& a : acc)
        for (auto& o : options) {
          auto v = a;
          v.insert(v.end(), o.begin(), o.end());
          next.push_back(v);
        }
      acc = std::move(next);
    }
    for (auto& mods : acc) out.emplace_back(mods);
  }
  return out;
}

}  // namespace hollab
