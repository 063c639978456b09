#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace hollab {

// Permutation of {0..n-1}, stored as the image list.  Composition follows
// (s*t)(i) = s(t(i)): apply t first.
using Perm = std::vector<std::uint32_t>;

Perm perm_identity(std::size_t n);
Perm perm_compose(const Perm& s, const Perm& t);  // s after t
Perm perm_inverse(const Perm& s);
bool perm_is_identity(const Perm& s);
int perm_sign(const Perm& s);
std::size_t perm_order(const Perm& s);
bool perm_valid(const Perm& s);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

// Breadth-first closure of a generating set under `mul`.  Throws
// std::length_error when more than `budget` elements appear.
template <class T, class Mul, class Hash = std::hash<T>, class Eq = std::equal_to<T>>
std::vector<T> generate_group(const std::vector<T>& gens, const T& identity, Mul mul,
                              std::size_t budget = 10000, Hash hash = Hash(), Eq eq = Eq()) {
  std::unordered_set<T, Hash, Eq> seen(64, hash, eq);
  std::vector<T> out{identity};
  seen.insert(identity);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const T& g : gens) {
      T h = mul(out[head], g);
      if (seen.insert(h).second) {
        if (out.size() >= budget) throw std::length_error("group closure: budget exceeded");
        out.push_back(std::move(h));
      }
    }
  }
  return out;
}

std::vector<Perm> perm_closure(const std::vector<Perm>& gens, std::size_t degree,
                               std::size_t budget = 10000);

// Multiset of element orders, as order -> count.
std::map<std::size_t, std::size_t> element_order_profile(const std::vector<Perm>& group);

bool perm_group_is_abelian(const std::vector<Perm>& group);

}  // namespace hollab
