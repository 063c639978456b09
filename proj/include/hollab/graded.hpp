#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hollab {

struct GradedGenerator {
  std::string name;
  unsigned degree = 1;
  bool exterior = false;
};

using Exponents = std::vector<std::uint16_t>;

// Lambda[exterior generators] (x) F_p[polynomial generators], graded
// commutative: odd-degree generators anticommute, monomials are stored in
// declaration order.  For p odd every odd-degree generator must be exterior.
class GradedAlgebra {
 public:
  GradedAlgebra(unsigned p, std::vector<GradedGenerator> gens);

  unsigned p() const { return p_; }
  std::size_t size() const { return gens_.size(); }
  const std::vector<GradedGenerator>& generators() const { return gens_; }
  std::size_t index(const std::string& name) const;  // throws std::out_of_range
  bool has(const std::string& name) const;

  unsigned degree(const Exponents& m) const;
  // a * b = sign * out; returns 0 when the product vanishes (exterior square).
  int multiply(const Exponents& a, const Exponents& b, Exponents& out) const;
  std::vector<Exponents> monomials(unsigned degree) const;
  std::string monomial_string(const Exponents& m) const;

  // degree first, then lexicographic in declaration order
  bool less(const Exponents& a, const Exponents& b) const;

 private:
  unsigned p_;
  std::vector<GradedGenerator> gens_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

class GradedElement {
 public:
  GradedElement() = default;
  explicit GradedElement(AlgebraPtr alg) : alg_(std::move(alg)) {}
  static GradedElement one(const AlgebraPtr& alg);
  static GradedElement generator(const AlgebraPtr& alg, const std::string& name);
  static GradedElement monomial(const AlgebraPtr& alg, const Exponents& m, std::int64_t coef = 1);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::map<Exponents, unsigned>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned coefficient(const Exponents& m) const;
  bool is_homogeneous() const;
  unsigned degree() const;  // of the first term; 0 for zero

  void add_term(const Exponents& m, std::int64_t coef);
  GradedElement operator+(const GradedElement& o) const;
  GradedElement operator-(const GradedElement& o) const;
  GradedElement operator*(const GradedElement& o) const;
  GradedElement scaled(std::int64_t c) const;
  GradedElement pow(unsigned e) const;
  bool operator==(const GradedElement& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  AlgebraPtr alg_;
  std::map<Exponents, unsigned> terms_;
};

// "a*x^2 + 2*b*y" over the named generators; "0" is the zero element.
GradedElement parse_element(const AlgebraPtr& alg, const std::string& text);

// Degree-raising derivation with d(g_i) = images[i] (an empty element
// means 0): d(ab) = d(a) b + (-1)^{|a|} a d(b), expanded factor by factor.
GradedElement apply_derivation(const GradedElement& f, const std::vector<GradedElement>& images);

// Same element written over another algebra whose generator names cover it.
GradedElement rebase(const GradedElement& f, const AlgebraPtr& target);

// ---- presentations --------------------------------------------------------

struct RewriteRule {
  Exponents lhs;
  GradedElement rhs;
  std::string text;
};

struct non_confluent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class GradedPresentation {
 public:
  explicit GradedPresentation(AlgebraPtr alg) : alg_(std::move(alg)) {}
  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  // lhs must be a single monomial strictly above every rhs term in the
  // degree-lex order, and the relation homogeneous; otherwise rejected.
  void add_relation(const std::string& lhs, const std::string& rhs);

 private:
  AlgebraPtr alg_;
  std::vector<RewriteRule> rules_;
};

// Fully reduces f.  Throws std::runtime_error("non-terminating rewrite")
// past step_cap rewrites.
GradedElement normal_form(const GradedPresentation& P, const GradedElement& f, std::size_t step_cap = 1'000'000);

struct ConfluenceReport {
  bool confluent = true;
  std::size_t checked = 0;
  std::string witness;  // first failing overlap, human readable
};

// All overlaps up to degree D: pairs of rules via the lcm of their leading
// monomials, and g * rule for every exterior g dividing a leading monomial.
ConfluenceReport check_confluence(const GradedPresentation& P, unsigned D);

// Monomials of each degree <= D not divisible by any leading monomial.
std::vector<std::size_t> normal_form_counts(const GradedPresentation& P, unsigned D);

// dim_F_p of (algebra / ideal) in each degree <= D by linear algebra,
// independent of any rewriting order.
std::vector<std::size_t> quotient_dimensions(const GradedPresentation& P, unsigned D);

// Ranks of the presented ring in degrees 0..D.  Requires confluence up to D
// (otherwise non_confluent carrying the witness).
std::vector<std::size_t> hilbert_series(const GradedPresentation& P, unsigned D);

// Power series coefficients of num(t)/den(t), den(0) = 1, integer arithmetic.
std::vector<long long> series_coefficients(const std::vector<long long>& num, const std::vector<long long>& den,
                                           unsigned D);

// The presented rings checked in the suites.
GradedPresentation coh_ring_p2(bool r_greater_than_3);
GradedPresentation coh_ring_podd(unsigned p);
GradedPresentation continuous_ring(unsigned p);

}  // namespace hollab
