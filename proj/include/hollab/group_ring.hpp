#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hollab/integer.hpp"

namespace hollab {

// G(q,s1,s2,t1,t2) = <x,y,z | x^s1 = y^s2 = z^q = 1, xy = yx, zx = x z^t1, zy = y z^t2>
struct MetabelianPresentation {
  std::int64_t q = 1, s1 = 1, s2 = 1, t1 = 1, t2 = 1;

  void validate() const;  // throws std::invalid_argument
  std::size_t order() const { return static_cast<std::size_t>(q * s1 * s2); }
  bool rank_one() const { return s2 == 1; }
  std::string to_string() const;

  // Hol(Z_{p^r}): for p = 2 (r >= 3) x = mult by 3, y = mult by -1; for p
  // odd x = mult by the smallest generator of the unit group and y trivial.
  static MetabelianPresentation holomorph_cyclic(std::int64_t p, unsigned r);
};

// x^a y^b z^c with 0 <= a < s1, 0 <= b < s2, 0 <= c < q.
struct Monomial {
  std::int64_t a = 0, b = 0, c = 0;
  bool operator==(const Monomial&) const = default;
};

// Index (a*s2 + b)*q + c, the storage order of group ring elements.
std::size_t monomial_index(const Monomial& m, const MetabelianPresentation& P);
Monomial monomial_at(std::size_t idx, const MetabelianPresentation& P);

// (x^a y^b z^c)(x^a' y^b' z^c') = x^{a+a'} y^{b+b'} z^{c t1^a' t2^b' + c'}
Monomial monomial_mul(const Monomial& u, const Monomial& v, const MetabelianPresentation& P);
Monomial monomial_inv(const Monomial& u, const MetabelianPresentation& P);

// Word over x,y,z (lower case) and their inverses X,Y,Z.
Monomial normalize(const std::string& word, const MetabelianPresentation& P);

// Z[G] element: sorted (monomial index, nonzero coefficient) pairs.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(const MetabelianPresentation& P) : P_(P) {}
  static GroupRingElement scalar(const MetabelianPresentation& P, const Int& c);
  static GroupRingElement monomial(const MetabelianPresentation& P, const Monomial& m, const Int& c = 1);
  // From a dense coefficient vector of length |G|.
  static GroupRingElement from_dense(const MetabelianPresentation& P, const std::vector<Int>& dense);

  const MetabelianPresentation& presentation() const { return P_; }
  const std::vector<std::pair<std::size_t, Int>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coefficient(const Monomial& m) const;
  Int augmentation() const;  // x, y, z -> 1
  std::vector<Int> dense() const;

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator-() const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  bool operator==(const GroupRingElement& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  MetabelianPresentation P_;
  std::vector<std::pair<std::size_t, Int>> terms_;
};

// N_z = sum_{i<q} z^i
GroupRingElement norm_z(const MetabelianPresentation& P);
// (L_{t,j})^m with L_{t,j} = sum_{i < t^j} z^i, reduced mod z^q = 1.
GroupRingElement L_power(const MetabelianPresentation& P, std::int64_t t, std::int64_t j, std::int64_t m);

}  // namespace hollab
