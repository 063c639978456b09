#include "hollab/group_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hollab/modular.hpp"

namespace hollab {

void MetabelianPresentation::validate() const {
  if (q < 1 || s1 < 1 || s2 < 1) throw std::invalid_argument("presentation orders must be positive");
  if (gcd64(t1, q) != 1 || gcd64(t2, q) != 1) throw std::invalid_argument("t1, t2 must be units mod q");
  if (pow_mod(t1, static_cast<std::uint64_t>(s1), q) != 1 % q) throw std::invalid_argument("t1^s1 != 1 mod q");
  if (pow_mod(t2, static_cast<std::uint64_t>(s2), q) != 1 % q) throw std::invalid_argument("t2^s2 != 1 mod q");
}

std::string MetabelianPresentation::to_string() const {
  std::ostringstream os;
  os << "(q=" << q << ",s1=" << s1 << ",s2=" << s2 << ",t1=" << t1 << ",t2=" << t2 << ")";
  return os.str();
}

MetabelianPresentation MetabelianPresentation::holomorph_cyclic(std::int64_t p, unsigned r) {
  if (!is_prime(p) || r < 1) throw std::invalid_argument("need a prime p and r >= 1");
  MetabelianPresentation P;
  P.q = ipow64(p, r);
  if (p == 2) {
    if (r < 3) throw std::invalid_argument("p = 2 needs r >= 3");
    P.s1 = P.q / 4;
    P.s2 = 2;
    P.t1 = 3;
    P.t2 = P.q - 1;
  } else {
    P.s1 = (p - 1) * ipow64(p, r - 1);
    P.t1 = aut_cyclic_generators(P.q).front().unit;
    P.s2 = 1;
    P.t2 = 1;
  }
  P.validate();
  return P;
}

std::size_t monomial_index(const Monomial& m, const MetabelianPresentation& P) {
  return static_cast<std::size_t>((m.a * P.s2 + m.b) * P.q + m.c);
}

Monomial monomial_at(std::size_t idx, const MetabelianPresentation& P) {
  Monomial m;
  auto i = static_cast<std::int64_t>(idx);
  m.c = i % P.q;
  i /= P.q;
  m.b = i % P.s2;
  m.a = i / P.s2;
  return m;
}

Monomial monomial_mul(const Monomial& u, const Monomial& v, const MetabelianPresentation& P) {
  // z^c x^a' = x^a' z^{c t1^a'}: push z's right past v's x, y part
  std::int64_t tw = mul_mod(pow_mod(P.t1, v.a, P.q), pow_mod(P.t2, v.b, P.q), P.q);
  return {(u.a + v.a) % P.s1, (u.b + v.b) % P.s2, (mul_mod(u.c, tw, P.q) + v.c) % P.q};
}

Monomial monomial_inv(const Monomial& u, const MetabelianPresentation& P) {
  // (x^a y^b z^c)^{-1} = z^{-c} x^{-a} y^{-b}
  Monomial xy{mod_reduce(-u.a, P.s1), mod_reduce(-u.b, P.s2), 0};
  return monomial_mul({0, 0, mod_reduce(-u.c, P.q)}, xy, P);
}

Monomial normalize(const std::string& word, const MetabelianPresentation& P) {
  const Monomial x{1 % P.s1, 0, 0}, y{0, 1 % P.s2, 0}, z{0, 0, 1 % P.q};
  Monomial out;
  for (char ch : word) {
    switch (ch) {
      case 'x': out = monomial_mul(out, x, P); break;
      case 'y': out = monomial_mul(out, y, P); break;
      case 'z': out = monomial_mul(out, z, P); break;
      case 'X': out = monomial_mul(out, monomial_inv(x, P), P); break;
      case 'Y': out = monomial_mul(out, monomial_inv(y, P), P); break;
      case 'Z': out = monomial_mul(out, monomial_inv(z, P), P); break;
      default: throw std::invalid_argument(std::string("unknown letter '") + ch + "'");
    }
  }
  return out;
}

// ---- group ring ------------------------------------------------------

GroupRingElement GroupRingElement::scalar(const MetabelianPresentation& P, const Int& c) {
  return monomial(P, Monomial{}, c);
}

GroupRingElement GroupRingElement::monomial(const MetabelianPresentation& P, const Monomial& m, const Int& c) {
  GroupRingElement out(P);
  if (c != 0) out.terms_.emplace_back(monomial_index(m, P), c);
  return out;
}

GroupRingElement GroupRingElement::from_dense(const MetabelianPresentation& P, const std::vector<Int>& dense) {
  if (dense.size() != P.order()) throw std::invalid_argument("dense vector has wrong length");
  GroupRingElement out(P);
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.terms_.emplace_back(i, dense[i]);
  return out;
}

Int GroupRingElement::coefficient(const Monomial& m) const {
  std::size_t idx = monomial_index(m, P_);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), idx,
                             [](const auto& t, std::size_t k) { return t.first < k; });
  return it != terms_.end() && it->first == idx ? it->second : Int(0);
}

Int GroupRingElement::augmentation() const {
  Int s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

std::vector<Int> GroupRingElement::dense() const {
  std::vector<Int> out(P_.order());
  for (const auto& t : terms_) out[t.first] = t.second;
  return out;
}

namespace {

void same_ring(const MetabelianPresentation& a, const MetabelianPresentation& b) {
  if (a.q != b.q || a.s1 != b.s1 || a.s2 != b.s2 || a.t1 != b.t1 || a.t2 != b.t2)
    throw contract_violation("group ring elements over different groups");
}

}  // namespace

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  same_ring(P_, o.P_);
  GroupRingElement out(P_);
  auto i = terms_.begin(), j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.terms_.push_back(*i++);
    } else if (i == terms_.end() || j->first < i->first) {
      out.terms_.push_back(*j++);
    } else {
      Int s = i->second + j->second;
      if (s != 0) out.terms_.emplace_back(i->first, s);
      ++i;
      ++j;
    }
  }
  return out;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const { return *this + (-o); }

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  same_ring(P_, o.P_);
  const auto& P = P_;
  // twist[a*s2+b] = t1^a t2^b mod q
  std::vector<std::int64_t> twist(static_cast<std::size_t>(P.s1 * P.s2));
  for (std::int64_t a = 0; a < P.s1; ++a)
    for (std::int64_t b = 0; b < P.s2; ++b)
      twist[a * P.s2 + b] = mul_mod(pow_mod(P.t1, a, P.q), pow_mod(P.t2, b, P.q), P.q);
  std::vector<Int> acc(P.order());
  std::vector<bool> hit(P.order(), false);
  for (const auto& [iu, cu] : terms_) {
    Monomial u = monomial_at(iu, P);
    for (const auto& [iv, cv] : o.terms_) {
      Monomial v = monomial_at(iv, P);
      std::int64_t tw = twist[v.a * P.s2 + v.b];
      Monomial w{(u.a + v.a) % P.s1, (u.b + v.b) % P.s2, (mul_mod(u.c, tw, P.q) + v.c) % P.q};
      std::size_t k = monomial_index(w, P);
      mpz_addmul(acc[k].get_mpz_t(), cu.get_mpz_t(), cv.get_mpz_t());
      hit[k] = true;
    }
  }
  GroupRingElement out(P);
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (hit[k] && acc[k] != 0) out.terms_.emplace_back(k, std::move(acc[k]));
  return out;
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    Monomial m = monomial_at(idx, P_);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Int ac = abs(c);
    bool unit_mon = m.a == 0 && m.b == 0 && m.c == 0;
    if (ac != 1 || unit_mon) os << ac.get_str();
    if (m.a) os << "x" << (m.a > 1 ? "^" + std::to_string(m.a) : "");
    if (m.b) os << "y" << (m.b > 1 ? "^" + std::to_string(m.b) : "");
    if (m.c) os << "z" << (m.c > 1 ? "^" + std::to_string(m.c) : "");
  }
  return os.str();
}

GroupRingElement norm_z(const MetabelianPresentation& P) {
  std::vector<Int> d(P.order());
  for (std::int64_t c = 0; c < P.q; ++c) d[c] = 1;
  return GroupRingElement::from_dense(P, d);
}

GroupRingElement L_power(const MetabelianPresentation& P, std::int64_t t, std::int64_t j, std::int64_t m) {
  const std::int64_t q = P.q;
  // L_{t,j} as counts of i < t^j in each residue class mod q
  Int N = ipow(Int(static_cast<long>(t)), static_cast<unsigned long>(j));
  std::vector<Int> L(q);
  for (std::int64_t k = 0; k < q; ++k) {
    if (N <= k) continue;
    Int num = N - 1 - k;
    mpz_fdiv_q_ui(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(q));
    L[k] = num + 1;
  }
  std::vector<Int> acc(q);
  acc[0] = 1;
  for (std::int64_t e = 0; e < m; ++e) {
    std::vector<Int> next(q);
    for (std::int64_t a = 0; a < q; ++a) {
      if (acc[a] == 0) continue;
      for (std::int64_t b = 0; b < q; ++b)
        if (L[b] != 0) mpz_addmul(next[(a + b) % q].get_mpz_t(), acc[a].get_mpz_t(), L[b].get_mpz_t());
    }
    acc = std::move(next);
  }
  std::vector<Int> d(P.order());
  for (std::int64_t c = 0; c < q; ++c) d[c] = acc[c];
  return GroupRingElement::from_dense(P, d);
}

}  // namespace hollab
