#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "hollab/group_ring.hpp"

namespace hollab {

struct resolution_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exponent used in the x-plane term of d2.  t1^{m s2} is the other reading;
// only t1^{m s1} is integral and squares to zero in general (see README).
enum class D2Exponent { s1, literal_s2 };

// a_{n,rho,i}: n counts the H-direction degree (i in x, n-i in y), rho the
// z-direction degree.  Total degree n + rho.
struct ResolutionGenerator {
  int n = 0, rho = 0, i = 0;
  int j() const { return n - i; }
  bool operator==(const ResolutionGenerator&) const = default;
};

enum class TermKind : std::uint8_t { d0, d1x, d1y, d2x, d2y };
const char* term_kind_name(TermKind k);

struct ResolutionTerm {
  std::size_t target;  // index among generators of degree k-1
  std::size_t coef;    // index into the coefficient pool (sign included)
  TermKind kind;
};

class Resolution {
 public:
  // Generators in every total degree <= max_degree.  For rank-one
  // presentations (s2 = 1) only the j = 0 slice is kept.
  Resolution(const MetabelianPresentation& P, int max_degree, D2Exponent exponent = D2Exponent::s1);

  const MetabelianPresentation& presentation() const { return P_; }
  int max_degree() const { return D_; }
  D2Exponent exponent() const { return exponent_; }

  const std::vector<ResolutionGenerator>& generators(int k) const { return gens_.at(k); }
  std::size_t index_of(const ResolutionGenerator& g) const;  // throws std::out_of_range
  const std::vector<ResolutionTerm>& boundary(int k, std::size_t g) const { return bd_.at(k).at(g); }

  std::size_t coefficient_count() const { return pool_.size(); }
  const GroupRingElement& coefficient(std::size_t id) const { return pool_.at(id); }
  const Int& augmented(std::size_t id) const { return aug_.at(id); }

  // Sum of all terms of d(a) landing on `target`.
  GroupRingElement entry(int k, std::size_t g, std::size_t target) const;

  // Expands d(d(a)) in Z[G] for every generator of degree 2..limit (default:
  // max_degree) and throws resolution_error naming the first bidegree (n, rho)
  // where it fails, together with the identity involved (e.g. d0d2x+d1xd1x+d2xd0).
  // Returns the number of generators checked.
  std::size_t check_d_squared(int limit = -1) const;

 private:
  std::size_t coef(const std::tuple<int, int, int, int>& key, const std::function<GroupRingElement()>& make);
  void build();

  MetabelianPresentation P_;
  int D_;
  D2Exponent exponent_;
  std::vector<std::vector<ResolutionGenerator>> gens_;
  std::vector<std::vector<std::vector<ResolutionTerm>>> bd_;
  std::vector<std::map<std::tuple<int, int, int>, std::size_t>> index_;
  std::vector<GroupRingElement> pool_;
  std::vector<Int> aug_;
  std::map<std::tuple<int, int, int, int>, std::size_t> pool_index_;
};

}  // namespace hollab
