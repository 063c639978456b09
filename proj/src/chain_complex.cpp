#include "hollab/chain_complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hollab {

AbelianInvariants AbelianInvariants::from_factors(std::size_t free_rank, const std::vector<Int>& factors) {
  AbelianInvariants out;
  out.free_rank = free_rank;
  for (const auto& f : factors) {
    Int a = abs(f);
    if (a <= 1) continue;
    for (const auto& [p, e] : factor(a)) out.torsion.push_back(ipow(p, e));
  }
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

AbelianInvariants AbelianInvariants::from_counts(std::size_t free_rank, unsigned long p,
                                                 const std::vector<std::size_t>& n) {
  AbelianInvariants out;
  out.free_rank = free_rank;
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t c = 0; c < n[i]; ++c) out.torsion.push_back(ipow(Int(p), i + 1));
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

std::size_t AbelianInvariants::p_rank(unsigned long p) const {
  std::size_t k = 0;
  for (const auto& t : torsion)
    if (mpz_divisible_ui_p(t.get_mpz_t(), p)) ++k;
  return k;
}

std::string AbelianInvariants::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (free_rank) {
    sep();
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
  }
  for (std::size_t i = 0; i < torsion.size();) {
    std::size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    sep();
    os << "Z/" << torsion[i].get_str();
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

ChainComplex::ChainComplex(std::vector<std::size_t> ranks) : ranks_(std::move(ranks)) {
  d_.resize(ranks_.size());
  for (int k = 0; k <= top(); ++k) d_[k] = IntegerMatrix(rank(k - 1), rank(k));
}

void ChainComplex::set_d(int k, IntegerMatrix m) {
  if (k < 0 || k > top()) throw std::out_of_range("degree outside the complex");
  if (m.rows() != rank(k - 1) || m.cols() != rank(k)) throw std::invalid_argument("differential has wrong shape");
  d_[k] = std::move(m);
}

int ChainComplex::first_nonzero_square() const {
  for (int k = 1; k < top(); ++k)
    if (rank(k - 1) && rank(k + 1) && !(d_[k] * d_[k + 1]).is_zero()) return k;
  return -1;
}

AbelianInvariants homology(const ChainComplex& C, int k) {
  if (k < 0 || k >= C.top()) throw std::out_of_range("homology degree needs d_{k+1}");
  if (k >= 1 && C.rank(k - 1) && C.rank(k + 1) && !(C.d(k) * C.d(k + 1)).is_zero())
    throw std::invalid_argument("d o d != 0 at degree " + std::to_string(k));
  std::size_t rank_out = C.rank(k - 1) && C.rank(k) ? smith_rank(smith_normal_form(C.d(k))) : 0;
  std::vector<Int> in_factors;
  if (C.rank(k) && C.rank(k + 1)) in_factors = smith_normal_form(C.d(k + 1));
  std::size_t rank_in = smith_rank(in_factors);
  return AbelianInvariants::from_factors(C.rank(k) - rank_out - rank_in, in_factors);
}

ChainComplex augmented_complex(const Resolution& R, int m) {
  auto in_piece = [&](int rho) { return m == 0 ? rho == 0 : (rho == 2 * m - 1 || rho == 2 * m); };
  const int D = R.max_degree();
  std::vector<std::vector<std::size_t>> local(D + 1);  // resolution index -> local index (or npos)
  std::vector<std::size_t> ranks(D + 1, 0);
  for (int k = 0; k <= D; ++k) {
    local[k].assign(R.generators(k).size(), static_cast<std::size_t>(-1));
    for (std::size_t g = 0; g < R.generators(k).size(); ++g)
      if (in_piece(R.generators(k)[g].rho)) local[k][g] = ranks[k]++;
  }
  ChainComplex C(ranks);
  for (int k = 1; k <= D; ++k) {
    IntegerMatrix M(ranks[k - 1], ranks[k]);
    for (std::size_t g = 0; g < R.generators(k).size(); ++g) {
      if (local[k][g] == static_cast<std::size_t>(-1)) continue;
      for (const auto& t : R.boundary(k, g)) {
        const Int& v = R.augmented(t.coef);
        if (local[k - 1][t.target] == static_cast<std::size_t>(-1)) {
          // leaving the piece is only allowed through z - 1, which augments to 0
          if (v != 0) throw resolution_error("augmented differential leaves A^" + std::to_string(m));
          continue;
        }
        M.at(local[k - 1][t.target], local[k][g]) += v;
      }
    }
    C.set_d(k, std::move(M));
  }
  return C;
}

}  // namespace hollab
