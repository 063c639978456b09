#include "hollab/graded.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hollab/modular.hpp"

namespace hollab {

// ---- algebra ------------------------------------------------------------

GradedAlgebra::GradedAlgebra(unsigned p, std::vector<GradedGenerator> gens) : p_(p), gens_(std::move(gens)) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].degree == 0) throw std::invalid_argument("generator degree must be positive");
    if (p != 2 && gens_[i].degree % 2 == 1 && !gens_[i].exterior)
      throw std::invalid_argument("odd-degree generator " + gens_[i].name + " must be exterior for p odd");
    for (std::size_t j = 0; j < i; ++j)
      if (gens_[j].name == gens_[i].name) throw std::invalid_argument("duplicate generator " + gens_[i].name);
  }
}

std::size_t GradedAlgebra::index(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  throw std::out_of_range("unknown generator " + name);
}

bool GradedAlgebra::has(const std::string& name) const {
  for (const auto& g : gens_)
    if (g.name == name) return true;
  return false;
}

unsigned GradedAlgebra::degree(const Exponents& m) const {
  unsigned d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * gens_[i].degree;
  return d;
}

int GradedAlgebra::multiply(const Exponents& a, const Exponents& b, Exponents& out) const {
  out.assign(gens_.size(), 0);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    out[i] = static_cast<std::uint16_t>(a[i] + b[i]);
    if (gens_[i].exterior && out[i] > 1) return 0;
  }
  // moving b's odd generators left past a's odd generators of higher index
  unsigned swaps = 0;
  std::uint64_t odd_a_above = 0;
  for (std::size_t i = gens_.size(); i-- > 0;) {
    if (gens_[i].degree % 2 == 0) continue;
    swaps += static_cast<unsigned>((odd_a_above * b[i]) & 1u);
    odd_a_above += a[i];
  }
  return swaps % 2 ? -1 : 1;
}

std::vector<Exponents> GradedAlgebra::monomials(unsigned degree) const {
  std::vector<Exponents> out;
  Exponents cur(gens_.size(), 0);
  auto rec = [&](auto&& self, std::size_t k, unsigned rem) -> void {
    if (k == gens_.size()) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    unsigned mx = rem / gens_[k].degree;
    if (gens_[k].exterior) mx = std::min(mx, 1u);
    for (unsigned e = 0; e <= mx; ++e) {
      cur[k] = static_cast<std::uint16_t>(e);
      self(self, k + 1, rem - e * gens_[k].degree);
    }
    cur[k] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

std::string GradedAlgebra::monomial_string(const Exponents& m) const {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += "*";
    s += gens_[i].name;
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

bool GradedAlgebra::less(const Exponents& a, const Exponents& b) const {
  unsigned da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return a < b;  // lexicographic: a larger exponent on an earlier generator wins
}

// ---- elements -------------------------------------------------------------

GradedElement GradedElement::one(const AlgebraPtr& alg) { return monomial(alg, Exponents(alg->size(), 0)); }

GradedElement GradedElement::generator(const AlgebraPtr& alg, const std::string& name) {
  Exponents m(alg->size(), 0);
  m[alg->index(name)] = 1;
  return monomial(alg, m);
}

GradedElement GradedElement::monomial(const AlgebraPtr& alg, const Exponents& m, std::int64_t coef) {
  GradedElement out(alg);
  out.add_term(m, coef);
  return out;
}

unsigned GradedElement::coefficient(const Exponents& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

bool GradedElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = alg_->degree(terms_.begin()->first);
  for (const auto& t : terms_)
    if (alg_->degree(t.first) != d) return false;
  return true;
}

unsigned GradedElement::degree() const { return terms_.empty() ? 0 : alg_->degree(terms_.begin()->first); }

void GradedElement::add_term(const Exponents& m, std::int64_t coef) {
  const auto p = static_cast<std::int64_t>(alg_->p());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (alg_->generators()[i].exterior && m[i] > 1) return;  // exterior square vanishes
  std::int64_t c = mod_reduce(coef, p);
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, static_cast<unsigned>(c));
  if (!fresh) {
    it->second = static_cast<unsigned>((it->second + c) % p);
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

void same_algebra(const GradedElement& a, const GradedElement& b) {
  if (a.algebra() != b.algebra()) throw contract_violation("graded elements from different algebras");
}

}  // namespace

GradedElement GradedElement::operator+(const GradedElement& o) const {
  same_algebra(*this, o);
  GradedElement out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

GradedElement GradedElement::operator-(const GradedElement& o) const { return *this + o.scaled(-1); }

GradedElement GradedElement::scaled(std::int64_t c) const {
  GradedElement out(alg_);
  for (const auto& [m, v] : terms_) out.add_term(m, c * static_cast<std::int64_t>(v));
  return out;
}

GradedElement GradedElement::operator*(const GradedElement& o) const {
  same_algebra(*this, o);
  GradedElement out(alg_);
  Exponents prod;
  const std::int64_t p = alg_->p();
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      int s = alg_->multiply(a, b, prod);
      if (s) out.add_term(prod, s * static_cast<std::int64_t>(mul_mod(ca, cb, p)));
    }
  return out;
}

GradedElement GradedElement::pow(unsigned e) const {
  GradedElement out = one(alg_);
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

std::string GradedElement::to_string() const {
  if (terms_.empty()) return "0";
  // largest monomial first
  std::vector<std::pair<Exponents, unsigned>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [&](const auto& x, const auto& y) { return alg_->less(y.first, x.first); });
  std::string s;
  for (const auto& [m, c] : v) {
    if (!s.empty()) s += " + ";
    std::string mono = alg_->monomial_string(m);
    if (c != 1) s += std::to_string(c) + (mono == "1" ? "" : "*" + mono);
    else s += mono;
  }
  return s;
}

GradedElement parse_element(const AlgebraPtr& alg, const std::string& text) {
  GradedElement out(alg);
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw std::invalid_argument("empty expression");
  std::size_t pos = 0;
  while (pos < t.size()) {
    int sign = 1;
    while (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
      if (t[pos] == '-') sign = -sign;
      ++pos;
    }
    std::size_t end = pos;
    while (end < t.size() && t[end] != '+' && t[end] != '-') ++end;
    std::string term = t.substr(pos, end - pos);
    if (term.empty()) throw std::invalid_argument("malformed expression: " + text);
    pos = end;
    std::int64_t coef = sign;
    Exponents m(alg->size(), 0);
    std::stringstream ss(term);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
      if (factor.empty()) throw std::invalid_argument("malformed term: " + term);
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        coef *= std::stoll(factor);
        continue;
      }
      std::string name = factor;
      unsigned e = 1;
      if (auto caret = factor.find('^'); caret != std::string::npos) {
        name = factor.substr(0, caret);
        e = static_cast<unsigned>(std::stoul(factor.substr(caret + 1)));
      }
      m[alg->index(name)] = static_cast<std::uint16_t>(m[alg->index(name)] + e);
    }
    out.add_term(m, coef);
  }
  return out;
}

GradedElement rebase(const GradedElement& f, const AlgebraPtr& target) {
  if (f.algebra()->p() != target->p()) throw std::invalid_argument("characteristic mismatch");
  GradedElement out(target);
  for (const auto& [m, c] : f.terms()) {
    Exponents n(target->size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) n[target->index(f.algebra()->generators()[i].name)] = m[i];
    out.add_term(n, c);
  }
  return out;
}

GradedElement apply_derivation(const GradedElement& f, const std::vector<GradedElement>& images) {
  const auto& A = f.algebra();
  if (images.size() != A->size()) throw std::invalid_argument("one image per generator");
  GradedElement out(A);
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!images[i].algebra() || images[i].is_zero()) continue;
      same_algebra(f, images[i]);
      for (unsigned j = 0; j < m[i]; ++j) {
        // m = prefix * g_i * suffix, g_i being factor j of its power
        Exponents pre(m.size(), 0), suf(m.size(), 0);
        for (std::size_t k = 0; k < m.size(); ++k) (k < i ? pre : suf)[k] = m[k];
        pre[i] = static_cast<std::uint16_t>(j);
        suf[i] = static_cast<std::uint16_t>(m[i] - 1 - j);
        std::int64_t sign = A->degree(pre) % 2 ? -1 : 1;
        out = out + (GradedElement::monomial(A, pre) * images[i] * GradedElement::monomial(A, suf)).scaled(sign * c);
      }
    }
  }
  return out;
}

// ---- presentations ------------------------------------------------------

void GradedPresentation::add_relation(const std::string& lhs, const std::string& rhs) {
  GradedElement l = parse_element(alg_, lhs);
  GradedElement r = parse_element(alg_, rhs);
  if (l.terms().size() != 1 || l.terms().begin()->second != 1)
    throw std::invalid_argument("relation lhs must be a single monic monomial: " + lhs);
  const Exponents& m = l.terms().begin()->first;
  for (const auto& [n, c] : r.terms()) {
    if (alg_->degree(n) != alg_->degree(m)) throw std::invalid_argument("inhomogeneous relation: " + lhs);
    if (!alg_->less(n, m))
      throw std::invalid_argument("relation not oriented (lhs is not the leading monomial): " + lhs + " = " + rhs);
  }
  rules_.push_back({m, r, lhs + " = " + rhs});
}

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents quotient(const Exponents& b, const Exponents& a) {
  Exponents out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = static_cast<std::uint16_t>(b[i] - a[i]);
  return out;
}

// lhs * cof = sign * m
int cofactor_sign(const GradedAlgebra& A, const Exponents& lhs, const Exponents& cof) {
  Exponents prod;
  return A.multiply(lhs, cof, prod);
}

}  // namespace

GradedElement normal_form(const GradedPresentation& P, const GradedElement& f, std::size_t step_cap) {
  const auto& A = *P.algebra();
  GradedElement done(P.algebra()), work = f;
  std::size_t steps = 0;
  while (!work.is_zero()) {
    // reduce the largest term first
    auto top = work.terms().begin();
    for (auto it = work.terms().begin(); it != work.terms().end(); ++it)
      if (A.less(top->first, it->first)) top = it;
    const Exponents m = top->first;
    const std::int64_t c = top->second;
    const RewriteRule* rule = nullptr;
    for (const auto& r : P.rules())
      if (divides(r.lhs, m)) {
        rule = &r;
        break;
      }
    work.add_term(m, -c);
    if (!rule) {
      done.add_term(m, c);
      continue;
    }
    if (++steps > step_cap) throw std::runtime_error("non-terminating rewrite");
    Exponents cof = quotient(m, rule->lhs);
    int s = cofactor_sign(A, rule->lhs, cof);
    work = work + (rule->rhs * GradedElement::monomial(P.algebra(), cof)).scaled(s * c);
  }
  return done;
}

ConfluenceReport check_confluence(const GradedPresentation& P, unsigned D) {
  const auto& A = *P.algebra();
  const auto& R = P.rules();
  ConfluenceReport rep;
  auto fail = [&](const std::string& w) {
    rep.confluent = false;
    rep.witness = w;
  };
  for (std::size_t i = 0; i < R.size() && rep.confluent; ++i) {
    // exterior g dividing the leading monomial: g * lhs = 0 forces g * rhs = 0
    for (std::size_t g = 0; g < A.size() && rep.confluent; ++g) {
      if (!A.generators()[g].exterior || !R[i].lhs[g]) continue;
      if (A.degree(R[i].lhs) + A.generators()[g].degree > D) continue;
      ++rep.checked;
      GradedElement v = normal_form(P, GradedElement::generator(P.algebra(), A.generators()[g].name) * R[i].rhs);
      if (!v.is_zero())
        fail(A.generators()[g].name + " * (" + R[i].text + "): " + A.generators()[g].name +
             " times the right side reduces to " + v.to_string() + " instead of 0");
    }
    for (std::size_t j = i + 1; j < R.size() && rep.confluent; ++j) {
      Exponents L(A.size());
      for (std::size_t k = 0; k < A.size(); ++k) L[k] = std::max(R[i].lhs[k], R[j].lhs[k]);
      if (A.degree(L) > D) continue;
      ++rep.checked;
      Exponents ci = quotient(L, R[i].lhs), cj = quotient(L, R[j].lhs);
      int si = cofactor_sign(A, R[i].lhs, ci), sj = cofactor_sign(A, R[j].lhs, cj);
      GradedElement via_i = normal_form(P, (R[i].rhs * GradedElement::monomial(P.algebra(), ci)).scaled(si));
      GradedElement via_j = normal_form(P, (R[j].rhs * GradedElement::monomial(P.algebra(), cj)).scaled(sj));
      if (!(via_i == via_j))
        fail("overlap " + A.monomial_string(L) + " of [" + R[i].text + "] and [" + R[j].text + "]: reduces to " +
             via_i.to_string() + " one way and " + via_j.to_string() + " the other");
    }
  }
  return rep;
}

std::vector<std::size_t> normal_form_counts(const GradedPresentation& P, unsigned D) {
  std::vector<std::size_t> out;
  for (unsigned d = 0; d <= D; ++d) {
    std::size_t n = 0;
    for (const auto& m : P.algebra()->monomials(d)) {
      bool reducible = false;
      for (const auto& r : P.rules())
        if (divides(r.lhs, m)) {
          reducible = true;
          break;
        }
      n += !reducible;
    }
    out.push_back(n);
  }
  return out;
}

std::vector<std::size_t> quotient_dimensions(const GradedPresentation& P, unsigned D) {
  const auto& A = *P.algebra();
  const std::int64_t p = A.p();
  std::vector<std::size_t> out;
  for (unsigned d = 0; d <= D; ++d) {
    auto basis = A.monomials(d);
    std::map<Exponents, std::size_t> col;
    for (std::size_t i = 0; i < basis.size(); ++i) col.emplace(basis[i], i);
    std::map<std::size_t, std::vector<std::int64_t>> pivots;  // pivot column -> row with leading 1
    for (const auto& r : P.rules()) {
      unsigned dr = A.degree(r.lhs);
      if (dr > d) continue;
      GradedElement rel = GradedElement::monomial(P.algebra(), r.lhs) - r.rhs;
      for (const auto& c : A.monomials(d - dr)) {
        GradedElement e = rel * GradedElement::monomial(P.algebra(), c);
        std::vector<std::int64_t> row(basis.size(), 0);
        for (const auto& [m, v] : e.terms()) row[col.at(m)] = v;
        for (std::size_t k = 0; k < row.size(); ++k) {
          if (!row[k]) continue;
          auto it = pivots.find(k);
          if (it == pivots.end()) {
            std::int64_t inv = inv_mod(row[k], p);
            for (auto& x : row) x = mul_mod(x, inv, p);
            pivots.emplace(k, std::move(row));
            break;
          }
          std::int64_t f = row[k];
          for (std::size_t t = k; t < row.size(); ++t) row[t] = mod_reduce(row[t] - f * it->second[t], p);
        }
      }
    }
    out.push_back(basis.size() - pivots.size());
  }
  return out;
}

std::vector<std::size_t> hilbert_series(const GradedPresentation& P, unsigned D) {
  ConfluenceReport rep = check_confluence(P, D);
  if (!rep.confluent) throw non_confluent("presentation is not confluent: " + rep.witness);
  return normal_form_counts(P, D);
}

std::vector<long long> series_coefficients(const std::vector<long long>& num, const std::vector<long long>& den,
                                           unsigned D) {
  if (den.empty() || den[0] != 1) throw std::invalid_argument("denominator must start with 1");
  std::vector<long long> c(D + 1, 0);
  for (unsigned k = 0; k <= D; ++k) {
    long long v = k < num.size() ? num[k] : 0;
    for (unsigned i = 1; i <= k && i < den.size(); ++i) v -= den[i] * c[k - i];
    c[k] = v;
  }
  return c;
}

GradedPresentation coh_ring_p2(bool r_greater_than_3) {
  // b first so that b^2 leads its relation in the degree-lex order
  if (r_greater_than_3) {
    auto A = std::make_shared<GradedAlgebra>(
        2, std::vector<GradedGenerator>{{"b", 3, false}, {"a", 1, false}, {"c", 4, false},
                                        {"x", 1, true},  {"y", 1, false}, {"z", 2, false}});
    GradedPresentation P(A);
    P.add_relation("a^2", "a*x + a*y");
    P.add_relation("a*z", "0");
    P.add_relation("a*b", "b*y");
    P.add_relation("b^2", "a*c*x + b*x*z + a*c*y");
    return P;
  }
  auto A = std::make_shared<GradedAlgebra>(
      2, std::vector<GradedGenerator>{{"b", 3, false}, {"a", 1, false}, {"c", 4, false}, {"x", 1, false},
                                      {"y", 1, false}});
  GradedPresentation P(A);
  P.add_relation("a^2", "a*x + a*y");
  P.add_relation("a*x^2", "0");
  P.add_relation("a*b", "b*y");
  P.add_relation("b^2", "a*c*x + b*x^3 + a*c*y + c*x^2");
  return P;
}

GradedPresentation coh_ring_podd(unsigned p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  std::vector<GradedGenerator> g;
  for (unsigned i = 0; i + 2 <= p; ++i) g.push_back({"d_" + std::to_string(i), 2 * (p - 1) * (i + 1) - 1, true});
  g.push_back({"e", 2 * p * (p - 1) - 1, true});
  g.push_back({"x", 1, true});
  g.push_back({"f", 2 * p * (p - 1), false});
  g.push_back({"z", 2, false});
  GradedPresentation P(std::make_shared<GradedAlgebra>(p, g));
  for (unsigned i = 0; i + 2 <= p; ++i) {
    std::string di = "d_" + std::to_string(i);
    for (unsigned j = i + 1; j + 2 <= p; ++j) P.add_relation(di + "*d_" + std::to_string(j), "0");
    P.add_relation(di + "*e", "0");
    P.add_relation(di + "*z", "0");
  }
  return P;
}

GradedPresentation continuous_ring(unsigned p) {
  if (p == 2) {
    GradedPresentation P(std::make_shared<GradedAlgebra>(
        2, std::vector<GradedGenerator>{{"u", 1, false}, {"x", 1, true}, {"y", 1, false}}));
    P.add_relation("u^2", "u*x + u*y");
    return P;
  }
  return GradedPresentation(std::make_shared<GradedAlgebra>(p, std::vector<GradedGenerator>{{"x", 1, true}}));
}

}  // namespace hollab
