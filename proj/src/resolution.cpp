#include "hollab/resolution.hpp"

#include <set>
#include <sstream>

#include "hollab/modular.hpp"
#include "hollab/parallel.hpp"

namespace hollab {

const char* term_kind_name(TermKind k) {
  switch (k) {
    case TermKind::d0: return "d0";
    case TermKind::d1x: return "d1x";
    case TermKind::d1y: return "d1y";
    case TermKind::d2x: return "d2x";
    case TermKind::d2y: return "d2y";
  }
  return "?";
}

namespace {

// pool keys: (kind, m, parity, sign)
enum : int { kZminus1, kNormZ, kX, kY, kD2y, kD2x };

}  // namespace

Resolution::Resolution(const MetabelianPresentation& P, int max_degree, D2Exponent exponent)
    : P_(P), D_(max_degree), exponent_(exponent) {
  P_.validate();
  if (D_ < 0) throw std::invalid_argument("max degree must be >= 0");
  build();
}

std::size_t Resolution::coef(const std::tuple<int, int, int, int>& key,
                             const std::function<GroupRingElement()>& make) {
  auto it = pool_index_.find(key);
  if (it != pool_index_.end()) return it->second;
  GroupRingElement e = make();
  if (std::get<3>(key) < 0) e = -e;
  pool_.push_back(e);
  aug_.push_back(e.augmentation());
  pool_index_.emplace(key, pool_.size() - 1);
  return pool_.size() - 1;
}

std::size_t Resolution::index_of(const ResolutionGenerator& g) const {
  int k = g.n + g.rho;
  if (k < 0 || k > D_) throw std::out_of_range("generator outside the built range");
  auto it = index_[k].find({g.n, g.rho, g.i});
  if (it == index_[k].end()) throw std::out_of_range("no such generator");
  return it->second;
}

void Resolution::build() {
  const bool rank1 = P_.rank_one();
  gens_.assign(D_ + 1, {});
  index_.assign(D_ + 1, {});
  bd_.assign(D_ + 1, {});
  for (int k = 0; k <= D_; ++k)
    for (int rho = 0; rho <= k; ++rho) {
      int n = k - rho;
      for (int i = 0; i <= n; ++i) {
        if (rank1 && i != n) continue;
        index_[k].emplace(std::make_tuple(n, rho, i), gens_[k].size());
        gens_[k].push_back({n, rho, i});
      }
    }

  const auto& P = P_;
  // X(i,m): x L^m_{t1,1} - 1 for i odd, sum_{j<s1} x^j L^m_{t1,j} for i even; Y likewise
  auto axis = [&](bool is_x, int parity, int m) {
    const std::int64_t t = is_x ? P.t1 : P.t2, s = is_x ? P.s1 : P.s2;
    auto gen = [&](std::int64_t e) { return is_x ? Monomial{e % P.s1, 0, 0} : Monomial{0, e % P.s2, 0}; };
    if (parity == 1)
      return GroupRingElement::monomial(P, gen(1)) * L_power(P, t, 1, m) - GroupRingElement::scalar(P, 1);
    GroupRingElement sum(P);
    for (std::int64_t j = 0; j < s; ++j) sum = sum + GroupRingElement::monomial(P, gen(j)) * L_power(P, t, j, m);
    return sum;
  };
  auto d2scalar = [&](std::int64_t t, std::int64_t s, int m, const ResolutionGenerator& g) {
    Int v = ipow(Int(static_cast<long>(t)), static_cast<unsigned long>(m * s)) - 1;
    if (!mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(P.q))) {
      std::ostringstream os;
      os << "integrality failure: (t^" << m * s << " - 1)/q not an integer for t=" << t << ", q=" << P.q
         << " at bidegree (" << g.n << "," << g.rho << ")";
      throw resolution_error(os.str());
    }
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(P.q));
    return GroupRingElement::scalar(P, v);
  };

  for (int k = 1; k <= D_; ++k) {
    bd_[k].resize(gens_[k].size());
    for (std::size_t g = 0; g < gens_[k].size(); ++g) {
      const ResolutionGenerator a = gens_[k][g];
      const int n = a.n, rho = a.rho, i = a.i, j = a.j();
      const int m = (rho + 1) / 2;
      const int sr = rho % 2 == 0 ? 1 : -1;
      auto& out = bd_[k][g];
      auto push = [&](const ResolutionGenerator& t, std::size_t c, TermKind kind) {
        out.push_back({index_of(t), c, kind});
      };

      if (rho % 2 == 1) {
        push({n, rho - 1, i}, coef({kZminus1, 0, 0, 1}, [&] {
               return GroupRingElement::monomial(P, {0, 0, 1 % P.q}) - GroupRingElement::scalar(P, 1);
             }), TermKind::d0);
      } else if (rho >= 2) {
        push({n, rho - 1, i}, coef({kNormZ, 0, 0, 1}, [&] { return norm_z(P); }), TermKind::d0);
      }
      if (i >= 1)
        push({n - 1, rho, i - 1}, coef({kX, m, i % 2, sr}, [&] { return axis(true, i % 2, m); }), TermKind::d1x);
      if (j >= 1) {
        int sign = sr * (i % 2 == 0 ? 1 : -1);
        push({n - 1, rho, i}, coef({kY, m, j % 2, sign}, [&] { return axis(false, j % 2, m); }), TermKind::d1y);
      }
      if (rho % 2 == 1 && n >= 2 && k - 1 >= 0) {
        if (j >= 2)
          push({n - 2, rho + 1, i}, coef({kD2y, m, 0, -1}, [&] { return d2scalar(P.t2, P.s2, m, a); }),
               TermKind::d2y);
        if (i >= 2) {
          std::int64_t s = exponent_ == D2Exponent::s1 ? P.s1 : P.s2;
          push({n - 2, rho + 1, i - 2}, coef({kD2x, m, 0, -1}, [&] { return d2scalar(P.t1, s, m, a); }),
               TermKind::d2x);
        }
      }
    }
  }
}

GroupRingElement Resolution::entry(int k, std::size_t g, std::size_t target) const {
  GroupRingElement sum(P_);
  for (const auto& t : boundary(k, g))
    if (t.target == target) sum = sum + pool_[t.coef];
  return sum;
}

std::size_t Resolution::check_d_squared(int limit) const {
  if (limit < 0 || limit > D_) limit = D_;
  // every composite coefficient is a product of two pool elements
  std::set<std::pair<std::size_t, std::size_t>> needed;
  for (int k = 2; k <= limit; ++k)
    for (std::size_t g = 0; g < gens_[k].size(); ++g)
      for (const auto& outer : bd_[k][g])
        for (const auto& inner : bd_[k - 1][outer.target]) needed.insert({outer.coef, inner.coef});
  std::vector<std::pair<std::size_t, std::size_t>> pairs(needed.begin(), needed.end());
  std::vector<GroupRingElement> products(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t idx) {
    products[idx] = pool_[pairs[idx].first] * pool_[pairs[idx].second];
  });
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> product_index;
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) product_index.emplace(pairs[idx], idx);

  std::size_t checked = 0;
  for (int k = 2; k <= limit; ++k)
    for (std::size_t g = 0; g < gens_[k].size(); ++g) {
      std::map<std::size_t, GroupRingElement> acc;
      std::map<std::size_t, std::set<std::string>> kinds;
      for (const auto& outer : bd_[k][g])
        for (const auto& inner : bd_[k - 1][outer.target]) {
          const auto& prod = products[product_index.at({outer.coef, inner.coef})];
          auto [it, fresh] = acc.try_emplace(inner.target, P_);
          it->second = it->second + prod;
          kinds[inner.target].insert(std::string(term_kind_name(outer.kind)) + term_kind_name(inner.kind));
        }
      for (const auto& [target, value] : acc) {
        if (value.is_zero()) continue;
        const auto& a = gens_[k][g];
        const auto& b = gens_[k - 2][target];
        std::ostringstream os;
        os << "d o d != 0 at bidegree (" << a.n << "," << a.rho << "), generator i=" << a.i << ", component a_{"
           << b.n << "," << b.rho << "," << b.i << "}, identity ";
        bool first = true;
        for (const auto& s : kinds[target]) {
          os << (first ? "" : "+") << s;
          first = false;
        }
        os << " = " << value.to_string().substr(0, 200);
        throw resolution_error(os.str());
      }
      ++checked;
    }
  return checked;
}

}  // namespace hollab
