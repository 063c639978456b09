#include "hollab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "hollab/congruence.hpp"
#include "hollab/dickson.hpp"
#include "hollab/extension.hpp"
#include "hollab/holomorph.hpp"
#include "hollab/homology_tables.hpp"
#include "hollab/integer.hpp"
#include "hollab/lie.hpp"
#include "hollab/parallel.hpp"
#include "hollab/permutative.hpp"
#include "hollab/resolution.hpp"
#include "hollab/wreath.hpp"

namespace hollab {

bool SuiteReport::ok() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

namespace {

using Witness = std::optional<std::string>;  // nullopt means pass

struct Check {
  std::string id, anchor;
  std::function<Witness(std::uint64_t)> run;
};

template <class A, class B>
Witness expect_eq(const std::string& what, const A& got, const B& want) {
  if (got == want) return std::nullopt;
  std::ostringstream os;
  os << what << ": got " << got << ", expected " << want;
  return os.str();
}

Witness all_of(std::initializer_list<Witness> ws) {
  for (const auto& w : ws)
    if (w) return w;
  return std::nullopt;
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// ---- holomorph-basics ------------------------------------------------------

bool hol_nonabelian(const Holomorph& H) {
  for (std::size_t a = 0; a < H.order(); ++a)
    for (std::size_t b = 0; b < H.order(); ++b)
      if (H.mul(a, b) != H.mul(b, a)) return true;
  return false;
}

Witness hol_axioms(const FiniteAbelianGroup& K) {
  Holomorph H(K);
  const std::size_t n = H.order();
  for (std::size_t a = 0; a < n; ++a) {
    if (H.mul(a, H.identity()) != a || H.mul(H.identity(), a) != a) return "identity fails at " + std::to_string(a);
    if (H.mul(a, H.inv(a)) != H.identity()) return "inverse fails at " + std::to_string(a);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (H.mul(H.mul(a, b), c) != H.mul(a, H.mul(b, c)))
          return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  }
  return std::nullopt;
}

std::vector<Check> holomorph_basics() {
  std::vector<Check> c;
  auto order = [&](std::string id, FiniteAbelianGroup K, std::size_t want, bool nonabelian) {
    c.push_back({"order." + id, "holomorph order |K| |Aut K|", [K, want, nonabelian](std::uint64_t) {
                   Holomorph H(K);
                   return all_of({expect_eq("|Hol(" + K.name() + ")|", hol_order(K), want),
                                  nonabelian ? expect_eq("nonabelian", hol_nonabelian(H), true) : std::nullopt});
                 }});
  };
  order("Z3", FiniteAbelianGroup::cyclic(3), 6, true);
  order("Z4", FiniteAbelianGroup::cyclic(4), 8, true);
  order("Z2xZ2", FiniteAbelianGroup::homocyclic(2, 2), 24, true);
  c.push_back({"full-symmetric.up-to-9", "Hol(K) = Sym(K) exactly for K in {1, Z2, Z3, Z2^2}", [](std::uint64_t) -> Witness {
                 for (const auto& K : abelian_groups_up_to(9)) {
                   const bool klein = K.rank() == 2 && K.order() == 4;
                   const bool expected = K.order() <= 3 || klein;
                   const bool oracle = K.order() * automorphisms(K).size() == factorial(K.order());
                   if (is_hol_full_symmetric(K) != expected || oracle != expected)
                     return "K = " + K.name() + ": is_hol_full_symmetric " + std::to_string(is_hol_full_symmetric(K)) +
                            ", order count " + std::to_string(oracle) + ", expected " + std::to_string(expected);
                 }
                 return std::nullopt;
               }});
  for (auto K : {FiniteAbelianGroup::cyclic(8), FiniteAbelianGroup::homocyclic(2, 2), FiniteAbelianGroup::cyclic(9),
                 FiniteAbelianGroup({2, 4})})
    c.push_back({"group-axioms." + K.name(), "the holomorph product is a group law", [K](std::uint64_t) { return hol_axioms(K); }});
  c.push_back({"cayley.normal-conjugation", "K is normal in Hol(K) and (f,0)(0,y)(f,0)^-1 = (0,f(y))", [](std::uint64_t) -> Witness {
                 for (const auto& K : abelian_groups_up_to(8)) {
                   if (!cayley_embed(K).translations_normal) return "translations not normal in Hol(" + K.name() + ")";
                   Holomorph H(K);
                   for (std::size_t f = 0; f < H.aut_count(); ++f)
                     for (std::size_t y = 0; y < K.order(); ++y) {
                       std::size_t g = H.mul(H.mul(H.encode(f, 0), H.encode(0, y)), H.inv(H.encode(f, 0)));
                       if (g != H.encode(0, H.auts()[f][y]))
                         return "conjugation in Hol(" + K.name() + ") at f=" + std::to_string(f) + ", y=" + std::to_string(y);
                     }
                 }
                 return std::nullopt;
               }});
  for (auto [n, m] : {std::pair<std::size_t, std::int64_t>{1, 4}, {2, 2}, {2, 3}})
    c.push_back({"matrix.bijection.n" + std::to_string(n) + "m" + std::to_string(m),
                 "the row form is a bijection onto the stabilizer of e1 in GL(n+1)", [n, m](std::uint64_t) -> Witness {
                   auto els = hol_elements(n, m);
                   std::unordered_set<ResidueMatrix, ResidueMatrixHash> img;
                   for (const auto& h : els) {
                     auto M = hol_to_matrix(h);
                     for (std::size_t i = 0; i < n + 1; ++i)
                       if (M.at(i, 0) != (i == 0)) return "image does not fix e1: " + M.to_string();
                     auto back = matrix_to_hol(M);
                     if (!back || !(*back == h)) return "matrix_to_hol does not invert at " + M.to_string();
                     img.insert(M);
                   }
                   std::size_t stab = 0;
                   for (const auto& M : enumerate_gl(n + 1, m)) {
                     bool fixes = true;
                     for (std::size_t i = 0; i < n + 1; ++i) fixes = fixes && M.at(i, 0) == (i == 0);
                     stab += fixes;
                   }
                   return all_of({expect_eq("distinct images", img.size(), els.size()),
                                  expect_eq("stabilizer order", stab, els.size())});
                 }});
  for (auto [n, m] : {std::pair<std::size_t, std::int64_t>{2, 2}, {2, 4}, {2, 3}})
    c.push_back({"matrix.multiplicative.n" + std::to_string(n) + "m" + std::to_string(m),
                 "the matrix form is multiplicative", [n, m](std::uint64_t seed) -> Witness {
                   auto els = hol_elements(n, m);
                   std::mt19937_64 rng(seed);
                   for (int t = 0; t < 200; ++t) {
                     const auto& a = els[rng() % els.size()];
                     const auto& b = els[rng() % els.size()];
                     if (!(hol_to_matrix(hol_mul(a, b)) == hol_to_matrix(a) * hol_to_matrix(b)))
                       return "pair " + hol_to_matrix(a).to_string() + ", " + hol_to_matrix(b).to_string();
                   }
                   return std::nullopt;
                 }});
  c.push_back({"matrix.maximal-GL3Z2", "Hol(Z2^2) is maximal in GL(3, Z2)", [](std::uint64_t) -> Witness {
                 std::vector<ResidueMatrix> gens;
                 for (const auto& h : hol_elements(2, 2)) gens.push_back(hol_to_matrix(h));
                 auto G = enumerate_gl(3, 2);
                 return all_of({expect_eq("|GL(3,2)|", G.size(), std::size_t{168}),
                                expect_eq("maximal", is_maximal(gens, G), true)});
               }});
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned long p : {2ul, 3ul})
      c.push_back({"sylow.n" + std::to_string(n) + "p" + std::to_string(p),
                   "Hol(+n Z_p) and GL(n+1, Z_p) share a Sylow p-subgroup order; not so over Z_{p^2}",
                   [n, p](std::uint64_t) -> Witness {
                     auto s = sylow_order_check(n, p, 2);
                     std::ostringstream os;
                     os << "vp|Hol| = " << s.hol_p_part << ", vp|GL| = " << s.gl_p_part << "; r=2: " << s.hol_p_part_r
                        << " vs " << s.gl_p_part_r;
                     if (s.equal && s.differ_r) return std::nullopt;
                     return os.str();
                   }});
  for (auto K : {FiniteAbelianGroup::cyclic(2), FiniteAbelianGroup::cyclic(3), FiniteAbelianGroup::cyclic(4),
                 FiniteAbelianGroup::homocyclic(2, 2)})
    c.push_back({"module-action." + K.name(), "Hol(K) acts on Z[K] through (f,x)m = f(xm)",
                 [K](std::uint64_t seed) { return expect_eq("action", module_action_check(K, 500, seed), true); }});
  c.push_back({"compatible.Z8-Z4", "a compatible pair induces a homomorphism of holomorphs", [](std::uint64_t) -> Witness {
                 Holomorph G(FiniteAbelianGroup::cyclic(8)), H(FiniteAbelianGroup::cyclic(4));
                 auto r = cyclic_reduction(G, H);
                 return all_of({expect_eq("compatible", check_compatible(G, H, r.F, r.Fp), true),
                                expect_eq("F'' homomorphism", is_group_homomorphism(G, H, build_F2(G, H, r.F, r.Fp)), true)});
               }});
  c.push_back({"pullback.roundtrip", "a split extension recovers its action phi", [](std::uint64_t) -> Witness {
                 for (auto K : {FiniteAbelianGroup::cyclic(3), FiniteAbelianGroup::cyclic(4)})
                   for (const auto& f : automorphisms(K)) {
                     if (!perm_is_identity(perm_compose(f, f))) continue;
                     auto E = pullback_extension(K, {Perm{1, 0}}, 2, {f});
                     auto rec = E.recovered_phi();
                     const bool ok = rec.size() == 2 && ((perm_is_identity(rec[0]) && rec[1] == f) ||
                                                         (perm_is_identity(rec[1]) && rec[0] == f));
                     if (!ok) return "phi: Z2 -> Aut(" + K.name() + ") not recovered";
                   }
                 return std::nullopt;
               }});
  return c;
}

// ---- resolution-acyclicity ------------------------------------------------

std::vector<Check> resolution_acyclicity() {
  std::vector<Check> c;
  for (auto P : {MetabelianPresentation{8, 2, 2, 3, 7}, MetabelianPresentation{16, 4, 2, 3, 15},
                 MetabelianPresentation{32, 8, 2, 3, 31}}) {
    const std::string tag = "q" + std::to_string(P.q);
    c.push_back({"d-squared." + tag, "the extension resolution satisfies d o d = 0 through degree 8",
                 [P](std::uint64_t) -> Witness {
                   Resolution R(P, 8);
                   try {
                     R.check_d_squared();
                   } catch (const resolution_error& e) {
                     return P.to_string() + ": " + e.what();
                   }
                   for (int m = 0; m <= max_piece(7); ++m) {
                     int k = augmented_complex(R, m).first_nonzero_square();
                     if (k >= 0) return P.to_string() + ": augmented A^" + std::to_string(m) + " has d^2 != 0 at " + std::to_string(k);
                   }
                   return std::nullopt;
                 }});
  }
  for (auto P : {MetabelianPresentation::holomorph_cyclic(2, 3), MetabelianPresentation::holomorph_cyclic(2, 4),
                 MetabelianPresentation::holomorph_cyclic(3, 2)})
    c.push_back({"normalize.relators." + std::to_string(P.q), "normal forms respect the defining relations",
                 [P](std::uint64_t) -> Witness {
                   const Monomial one{};
                   auto rep = [](char ch, std::int64_t k) { return std::string(static_cast<std::size_t>(k), ch); };
                   std::vector<std::pair<std::string, std::string>> rel = {
                       {rep('x', P.s1), ""}, {rep('y', P.s2), ""}, {rep('z', P.q), ""}, {"xy", "yx"},
                       {"zx", "x" + rep('z', P.t1)}, {"zy", "y" + rep('z', P.t2)}, {"xX", ""}, {"Zz", ""}};
                   for (const auto& [l, r] : rel) {
                     Monomial a = normalize(l, P), b = r.empty() ? one : normalize(r, P);
                     if (!(a == b)) return P.to_string() + ": " + l + " and " + (r.empty() ? "1" : r) + " differ";
                   }
                   return std::nullopt;
                 }});
  c.push_back({"group-ring.associative", "group ring multiplication is associative", [](std::uint64_t seed) -> Witness {
                 MetabelianPresentation P{8, 2, 2, 3, 7};
                 std::mt19937_64 rng(seed);
                 auto random_element = [&] {
                   GroupRingElement e(P);
                   for (int t = 0; t < 4; ++t)
                     e = e + GroupRingElement::monomial(P, monomial_at(rng() % P.order(), P),
                                                        static_cast<long>(rng() % 7) - 3);
                   return e;
                 };
                 for (int t = 0; t < 50; ++t) {
                   auto a = random_element(), b = random_element(), d = random_element();
                   if (!((a * b) * d == a * (b * d))) return "triple " + a.to_string() + " | " + b.to_string() + " | " + d.to_string();
                 }
                 return std::nullopt;
               }});
  return c;
}

// ---- homology-tables / cohomology-ranks -----------------------------------

struct GridPoint {
  unsigned long p;
  unsigned r, qmax;
};
const std::vector<GridPoint> kGrid = {{2, 3, 12}, {2, 4, 12}, {2, 5, 12}, {3, 1, 10}, {3, 2, 10}, {3, 3, 10}};

std::string grid_tag(const GridPoint& g) { return "p" + std::to_string(g.p) + "r" + std::to_string(g.r); }

std::vector<Check> homology_tables() {
  std::vector<Check> c;
  for (const auto& g : kGrid)
    c.push_back({"computed-vs-closed." + grid_tag(g), "integer homology equals the closed-form tables",
                 [g](std::uint64_t) -> Witness {
                   if (auto mm = compare_homology(g.p, g.r, g.qmax)) return mm->to_string();
                   return std::nullopt;
                 }});
  for (const auto& g : kGrid)
    c.push_back({"h1-abelianization." + grid_tag(g), "H_1 equals the abelianized presentation", [g](std::uint64_t) -> Witness {
                   auto H = computed_homology(g.p, g.r, 1);
                   auto ab = presentation_abelianization(MetabelianPresentation::holomorph_cyclic(g.p, g.r));
                   return expect_eq("H_1", H[1].to_string(), ab.to_string());
                 }});
  c.push_back({"example.h1-hol-z8", "H_1(Hol(Z8)) = (Z/2)^3", [](std::uint64_t) {
                 return expect_eq("H_1", computed_homology(2, 3, 1)[1].to_string(),
                                  AbelianInvariants::from_factors(0, {2, 2, 2}).to_string());
               }});
  c.push_back({"example.h3-hol-z3", "H_3(Hol(Z3)) = Z/6 (Hol(Z3) = S3)", [](std::uint64_t) {
                 const auto want = AbelianInvariants::from_factors(0, {6}).to_string();
                 return all_of({expect_eq("computed H_3", computed_homology(3, 1, 3)[3].to_string(), want),
                                expect_eq("closed H_3", closed_form_homology(3, 1, 3).to_string(), want)});
               }});
  return c;
}

std::vector<Check> cohomology_ranks() {
  std::vector<Check> c;
  for (const auto& g : kGrid) {
    const bool formula = g.r >= 3;
    c.push_back({"uct-vs-formula." + grid_tag(g),
                 formula ? "mod-p ranks from integer homology equal the rank formulas"
                         : "mod-p ranks from integer homology equal those of the closed-form tables",
                 [g, formula](std::uint64_t) -> Witness {
                   auto H = computed_homology(g.p, g.r, g.qmax);
                   for (unsigned q = 0; q <= g.qmax; ++q) {
                     std::size_t got = uct_rank(H[q], q ? &H[q - 1] : nullptr, g.p);
                     std::size_t want;
                     if (formula) {
                       want = mod_p_cohomology_rank(g.p, g.r, q);
                     } else {
                       auto Hq = closed_form_homology(g.p, g.r, q);
                       auto Hm = q ? closed_form_homology(g.p, g.r, q - 1) : AbelianInvariants{};
                       want = uct_rank(Hq, q ? &Hm : nullptr, g.p);
                     }
                     if (got != want)
                       return grid_tag(g) + " q=" + std::to_string(q) + ": UCT " + std::to_string(got) + ", expected " +
                              std::to_string(want);
                   }
                   return std::nullopt;
                 }});
  }
  c.push_back({"example.p2-low-degrees", "mod-2 ranks 1,3,5,7 in degrees 0-3 for r >= 3", [](std::uint64_t) -> Witness {
                 std::vector<std::size_t> got;
                 for (unsigned q = 0; q < 4; ++q) got.push_back(mod_p_cohomology_rank(2, 3, q));
                 return expect_eq("ranks", join_sizes(got), std::string("1,3,5,7"));
               }});
  c.push_back({"r-independence.p2", "mod-2 ranks do not depend on r >= 3", [](std::uint64_t) -> Witness {
                 for (unsigned r = 4; r <= 8; ++r)
                   for (unsigned q = 0; q <= 40; ++q)
                     if (mod_p_cohomology_rank(2, r, q) != mod_p_cohomology_rank(2, 3, q))
                       return "r=" + std::to_string(r) + ", q=" + std::to_string(q);
                 return std::nullopt;
               }});
  return c;
}

// ---- ring-hilbert ----------------------------------------------------------

constexpr unsigned kRingDegree = 16;

Witness compare_series(const std::string& what, const std::vector<std::size_t>& got, const std::vector<std::size_t>& want) {
  for (std::size_t d = 0; d < want.size(); ++d)
    if (d >= got.size() || got[d] != want[d])
      return what + " degree " + std::to_string(d) + ": presented " + join_sizes(got) + " vs expected " + join_sizes(want);
  return std::nullopt;
}

std::vector<Check> ring_hilbert() {
  std::vector<Check> c;
  for (bool big : {true, false}) {
    const std::string tag = big ? "p2-r-gt-3" : "p2-r3";
    const unsigned r = big ? 4 : 3;
    c.push_back({"confluence." + tag, "the mod-2 ring presentation is a confluent rewriting system",
                 [big](std::uint64_t) -> Witness {
                   auto rep = check_confluence(coh_ring_p2(big), kRingDegree);
                   if (rep.confluent) return std::nullopt;
                   return rep.witness;
                 }});
    c.push_back({"series." + tag, "the presented mod-2 ring has the ranks of the rank formula",
                 [big, r](std::uint64_t) -> Witness {
                   // vector-space dimensions of the quotient: no rewriting order involved
                   auto got = quotient_dimensions(coh_ring_p2(big), kRingDegree);
                   std::vector<std::size_t> want;
                   for (unsigned q = 0; q <= kRingDegree; ++q) want.push_back(mod_p_cohomology_rank(2, r, q));
                   return compare_series("r=" + std::to_string(r), got, want);
                 }});
  }
  for (unsigned p : {3u, 5u})
    c.push_back({"series.p" + std::to_string(p), "the presented mod-p ring has the ranks of the rank formula",
                 [p](std::uint64_t) -> Witness {
                   auto P = coh_ring_podd(p);
                   auto got = hilbert_series(P, kRingDegree);
                   std::vector<std::size_t> want;
                   for (unsigned q = 0; q <= kRingDegree; ++q) want.push_back(mod_p_cohomology_rank(p, 3, q));
                   return all_of({compare_series("p=" + std::to_string(p), got, want),
                                  compare_series("p=" + std::to_string(p) + " linear algebra",
                                                 quotient_dimensions(P, kRingDegree), want)});
                 }});
  c.push_back({"series.continuous", "Lambda(x) (x) F2[u,y]/(u^2 = ux + uy) has series (1+t)^2/(1-t)",
               [](std::uint64_t) -> Witness {
                 auto got = hilbert_series(continuous_ring(2), kRingDegree);
                 std::vector<std::size_t> want;
                 for (long long v : series_coefficients({1, 2, 1}, {1, -1}, kRingDegree)) want.push_back(static_cast<std::size_t>(v));
                 return compare_series("continuous", got, want);
               }});
  return c;
}

// ---- dickson-noncollapse ---------------------------------------------------

std::vector<Check> dickson_noncollapse() {
  std::vector<Check> c;
  struct Case {
    unsigned n, p;
    D2Mode mode;
  };
  for (auto k : {Case{2, 2, D2Mode::p2_r3}, Case{2, 2, D2Mode::p2_r_gt_3}, Case{3, 2, D2Mode::p2_r3},
                 Case{3, 2, D2Mode::p2_r_gt_3}, Case{2, 3, D2Mode::odd}})
    c.push_back({"noncollapse.n" + std::to_string(k.n) + "p" + std::to_string(k.p) + "." + d2_mode_name(k.mode),
                 "the Dickson coefficient is GL-invariant and survives d2", [k](std::uint64_t) -> Witness {
                   auto d = dickson_coefficient(k.n, k.p);
                   auto img = apply_d2(d, k.mode);
                   return all_of({expect_eq("degree", d.degree(), 2 * (static_cast<unsigned>(ipow64(k.p, k.n)) - 1)),
                                  expect_eq("GL-invariant", check_gl_invariance(d, k.n, k.p, true), true),
                                  img.is_zero() ? Witness{"d2 of " + d.to_string() + " is zero"} : std::nullopt,
                                  expect_eq("d2 o d2", apply_d2(img, k.mode).is_zero(), true)});
                 }});
  for (auto [n, p] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {3u, 3u}})
    c.push_back({"leading.n" + std::to_string(n) + "p" + std::to_string(p),
                 "the leading Dickson coefficients are (-1)^n (Wilson)", [n, p](std::uint64_t) -> Witness {
                   auto d = dickson_coefficient(n, p);
                   const unsigned want = n % 2 ? p - 1 : 1;
                   for (unsigned v : dickson_leading_coefficients(d, n, p))
                     if (v != want) return "coefficient " + std::to_string(v) + ", expected " + std::to_string(want);
                   return std::nullopt;
                 }});
  c.push_back({"example.n2p2", "the (2,2) coefficient is v1^2 v2 + v1 v2^2", [](std::uint64_t) {
                 return expect_eq("polynomial", dickson_coefficient(2, 2).to_string(), std::string("v1^2*v2 + v1*v2^2"));
               }});
  c.push_back({"d2.leibniz", "d2 is a graded derivation", [](std::uint64_t seed) -> Witness {
                 std::mt19937_64 rng(seed);
                 for (auto mode : {D2Mode::p2_r3, D2Mode::p2_r_gt_3}) {
                   auto A = d2_algebra(2, 2, mode);
                   auto random_monomial = [&] {
                     GradedElement e = GradedElement::one(A);
                     for (int t = 0; t < 3; ++t) e = e * GradedElement::generator(A, A->generators()[rng() % 4].name);
                     return e;
                   };
                   for (int t = 0; t < 100; ++t) {
                     auto a = random_monomial(), b = random_monomial();
                     if (a.is_zero() || b.is_zero()) continue;
                     const std::int64_t sign = a.degree() % 2 ? -1 : 1;
                     auto lhs = apply_d2(a * b, mode);
                     const auto& B = lhs.algebra();  // apply_d2 answers in a fresh algebra
                     auto rhs = rebase(apply_d2(a, mode), B) * rebase(b, B) +
                                (rebase(a, B) * rebase(apply_d2(b, mode), B)).scaled(sign);
                     if (!(lhs == rhs)) return "a = " + a.to_string() + ", b = " + b.to_string();
                   }
                 }
                 return std::nullopt;
               }});
  return c;
}

// ---- congruence-tower ----------------------------------------------------

std::string level_tag(const GammaLevel& L) {
  return "n" + std::to_string(L.n) + "k" + std::to_string(L.k) + "p" + std::to_string(L.p);
}

LiePair random_pair(std::size_t n, std::int64_t p, std::mt19937_64& rng) {
  LiePair a = lie_zero(n, p);
  for (std::size_t i = 0; i < n; ++i) {
    a.x.v[i] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
    for (std::size_t j = 0; j < n; ++j) a.A.set(i, j, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p)));
  }
  return a;
}

std::vector<Check> congruence_tower() {
  std::vector<Check> c;
  for (auto L : {GammaLevel{1, 1, 3}, GammaLevel{1, 2, 3}, GammaLevel{2, 1, 3}, GammaLevel{1, 1, 5}}) {
    c.push_back({"order." + level_tag(L), "|Gamma_{n,k}| = p^{k(n^2+n)}", [L](std::uint64_t) {
                   return expect_eq("order", Int(gamma_enumerate(L).size()), gamma_order(L));
                 }});
    c.push_back({"omega1." + level_tag(L), "Omega_1 is the kernel of the reduction and is central",
                 [L](std::uint64_t) -> Witness {
                   auto r = omega1_and_kernel_check(L);
                   if (r.ok()) return std::nullopt;
                   return "|Omega_1| = " + std::to_string(r.omega_size) + ", |Ker| = " + std::to_string(r.kernel_size) +
                          ", central " + std::to_string(r.central);
                 }});
  }
  for (auto L : {GammaLevel{1, 2, 3}, GammaLevel{1, 3, 3}, GammaLevel{1, 2, 5}})
    c.push_back({"p-power-bijective." + level_tag(L), "the p-power map Omega_1 -> Omega_1 one level up is bijective",
                 [L](std::uint64_t) { return expect_eq("bijective", p_power_bijective(L), true); }});
  for (auto [n, p] : {std::pair<std::size_t, std::int64_t>{1, 3}, {1, 5}, {2, 3}})
    c.push_back({"bracket-commutator.n" + std::to_string(n) + "p" + std::to_string(p),
                 "the bracket is the commutator read through phi", [n, p](std::uint64_t) {
                   return expect_eq("bracket = commutator", bracket_matches_commutator(n, p), true);
                 }});
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::int64_t p : {2, 3, 5}) {
      const std::string tag = "n" + std::to_string(n) + "p" + std::to_string(p);
      c.push_back({"jacobi." + tag, "the bracket satisfies Jacobi, antisymmetry and bilinearity",
                   [n, p](std::uint64_t seed) -> Witness {
                     std::mt19937_64 rng(seed + 17 * n + static_cast<std::uint64_t>(p));
                     for (int t = 0; t < 300; ++t) {
                       auto a = random_pair(n, p, rng), b = random_pair(n, p, rng), d = random_pair(n, p, rng);
                       const std::int64_t s = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
                       if (!jacobi_holds(a, b, d)) return "Jacobi fails at " + a.to_string() + ", " + b.to_string() + ", " + d.to_string();
                       if (!lie_add(bracket(a, b), bracket(b, a)).is_zero()) return "antisymmetry fails at " + a.to_string();
                       if (!(bracket(lie_add(a, lie_scale(d, s)), b) == lie_add(bracket(a, b), lie_scale(bracket(d, b), s))))
                         return "bilinearity fails at " + a.to_string();
                     }
                     return std::nullopt;
                   }});
      c.push_back({"structure-constants." + tag, "structure constants follow the delta formulas", [n, p](std::uint64_t) {
                     return expect_eq("tables equal", structure_constants(n, p) == structure_constants_formula(n, p), true);
                   }});
    }
  for (std::int64_t p : {3, 5})
    for (unsigned k = 1; k <= 3; ++k)
      c.push_back({"root-lemma.p" + std::to_string(p) + "k" + std::to_string(k),
                   "(1 + pb)^p = 1 + p^2 a is solvable for every a", [p, k](std::uint64_t) {
                     return expect_eq("solvable", mike_lemma_exhaustive(p, k, RootPart::odd_pth_power), true);
                   }});
  for (unsigned k = 1; k <= 4; ++k)
    for (auto part : {RootPart::square, RootPart::fourth_power})
      c.push_back({"root-lemma.p2k" + std::to_string(k) + (part == RootPart::square ? ".square" : ".fourth"),
                   "(1 + 4b)^2 = 1 + 8a and (1 + 4b)^4 = 1 + 16a are solvable for every a", [k, part](std::uint64_t) {
                     return expect_eq("solvable", mike_lemma_exhaustive(2, k, part), true);
                   }});
  for (auto L : {GammaLevel{1, 1, 3}, GammaLevel{2, 1, 3}, GammaLevel{1, 2, 2}, GammaLevel{1, 3, 2}})
    c.push_back({"almost-powerful." + level_tag(L), "N is almost powerfully embedded in Gamma_{n,k}",
                 [L](std::uint64_t) -> Witness {
                   auto r = almost_powerfully_embedded_check(L);
                   if (r.ok()) return std::nullopt;
                   return "|G| = " + std::to_string(r.g_size) + ", |N| = " + std::to_string(r.n_size) + ", [G,N] in powers " +
                          std::to_string(r.g_n_in_powers) + ", [N,N] in N^4 " + std::to_string(r.n_n_in_fourth);
                 }});
  return c;
}

// ---- bockstein ---------------------------------------------------------------

std::vector<Check> bockstein_suite() {
  std::vector<Check> c;
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::int64_t p : {2, 3, 5}) {
      const std::string tag = "n" + std::to_string(n) + "p" + std::to_string(p);
      c.push_back({"square-zero." + tag, "beta o beta = 0 on every generator", [n, p](std::uint64_t) -> Witness {
                     auto A = bockstein_algebra(n, p);
                     for (std::size_t g = 0; g < A->size(); ++g) {
                       auto e = GradedElement::generator(A, A->generators()[g].name);
                       auto bb = bockstein(bockstein(e, n), n);
                       if (!bb.is_zero()) return "beta^2(" + A->generators()[g].name + ") = " + bb.to_string();
                     }
                     return std::nullopt;
                   }});
      c.push_back({"explicit-vs-generic." + tag, "the explicit formulas are the structure-constant Bockstein",
                   [n, p](std::uint64_t) -> Witness {
                     auto A = bockstein_algebra(n, p);
                     auto sc = structure_constants(n, p);
                     for (std::size_t g = 0; g < A->size(); ++g) {
                       auto e = GradedElement::generator(A, A->generators()[g].name);
                       auto a = bockstein(e, n), b = bockstein_generic(e, n, sc);
                       if (!(a == b)) return A->generators()[g].name + ": " + a.to_string() + " vs " + b.to_string();
                     }
                     return std::nullopt;
                   }});
    }
  c.push_back({"example.n1p3", "beta(x1) = -x11 x1 and beta(x11) = 0 for n = 1", [](std::uint64_t) {
                 auto A = bockstein_algebra(1, 3);
                 return all_of({expect_eq("beta(x1)", bockstein(GradedElement::generator(A, "x1"), 1).to_string(),
                                          std::string("2*x11*x1")),
                                expect_eq("beta(x11) = 0", bockstein(GradedElement::generator(A, "x11"), 1).is_zero(), true)});
               }});
  return c;
}

// ---- wreath-permutative ----------------------------------------------------

std::vector<Check> wreath_permutative() {
  std::vector<Check> c;
  c.push_back({"example.product", "((12),(1,2)) ((12),(0,1)) = (id,(2,2)) in S2 wr Z3", [](std::uint64_t) {
                 auto K = FiniteAbelianGroup::cyclic(3);
                 WreathElement a{Perm{1, 0}, {ph_identity(K), ph_identity(K)}}, b = a;
                 a.parts[0].trans = 1, a.parts[1].trans = 2, b.parts[1].trans = 1;
                 return expect_eq("product", to_string(wreath_mul(K, a, b)), std::string("([1 2], (2), (2))"));
               }});
  for (auto K : {FiniteAbelianGroup::cyclic(2), FiniteAbelianGroup::cyclic(3), FiniteAbelianGroup::cyclic(4)}) {
    const std::size_t aut = automorphisms(K).size();
    c.push_back({"embed-i." + K.name(), "S_q wr Aut(G) embeds in Aut(G^q)", [K, aut](std::uint64_t) -> Witness {
                   auto r = check_embed_i(K, 2);
                   return all_of({expect_eq("embedding", r.ok(), true), expect_eq("image order", r.image, 2 * aut * aut)});
                 }});
    c.push_back({"embed-j." + K.name(), "S_q wr Hol(G) embeds in Hol(G^q), identically on G^q",
                 [K, aut](std::uint64_t) -> Witness {
                   auto r = check_embed_j(K, 2);
                   const std::size_t h = aut * K.order();
                   return all_of({expect_eq("embedding", r.ok(), true), expect_eq("image order", r.image, 2 * h * h)});
                 }});
  }
  for (auto K : {FiniteAbelianGroup::cyclic(2), FiniteAbelianGroup::cyclic(3)}) {
    c.push_back({"pullback.S2." + K.name(), "P wr G is the pullback of P -> Aut(G^q) <- Hol(G^q)", [K](std::uint64_t) -> Witness {
                   auto r = wreath_pullback_check(symmetric_group(2), 2, K);
                   return all_of({expect_eq("pullback", r.ok(), true), expect_eq("order", r.wreath_order, 2 * K.order() * K.order())});
                 }});
    c.push_back({"pullback.trivial." + K.name(), "for trivial P the pullback is G^q", [K](std::uint64_t) -> Witness {
                   auto r = wreath_pullback_check({perm_identity(3)}, 3, K);
                   return all_of({expect_eq("pullback", r.ok(), true),
                                  expect_eq("order", r.pullback_order, K.order() * K.order() * K.order())});
                 }});
  }
  c.push_back({"convention.literal-fails", "the product read with the other permutation convention is not associative",
               [](std::uint64_t) -> Witness {
                 auto w = literal_associativity_failure(FiniteAbelianGroup::cyclic(2), 3);
                 if (w) return std::nullopt;
                 return std::string("no failing triple found in S3 wr Z2");
               }});
  c.push_back({"double-wreath.q2n2", "the double wreath square into Hol(G^{qn}) commutes", [](std::uint64_t seed) {
                 return expect_eq("disagreements", double_wreath_square(FiniteAbelianGroup::cyclic(2), 2, 2, 200, seed),
                                  std::size_t{0});
               }});
  c.push_back({"example.c11-matrix", "c(1,1) in the matrix category is the block swap and an involution", [](std::uint64_t) {
                 PermutativeCategory C(PermutativeKind::hol_matrix, FiniteAbelianGroup::cyclic(2));
                 auto s = C.symmetry(1, 1);
                 return all_of({expect_eq("c(1,1)", s.matrix.to_string(), std::string("[[1,0,0],[0,0,1],[0,1,0]] mod 2")),
                                expect_eq("c(1,1)^2 = 1", C.equal(C.compose(s, s), C.identity(2)), true)});
               }});
  for (auto kind : {PermutativeKind::aut_powers, PermutativeKind::hol_powers, PermutativeKind::hol_matrix})
    for (std::int64_t m : {2, 4})
      c.push_back({std::string("axioms.") + permutative_kind_name(kind) + ".Z" + std::to_string(m),
                   "axioms 1-5 and naturality of a permutative category", [kind, m](std::uint64_t seed) -> Witness {
                     PermutativeCategory C(kind, FiniteAbelianGroup::cyclic(m));
                     for (std::size_t a = 0; a <= 2; ++a)
                       for (std::size_t b = 0; b <= 2; ++b)
                         for (std::size_t d = 0; d <= 2; ++d) {
                           auto r = permutative_axioms_check(C, a, b, d, seed);
                           if (!r.ok())
                             return "(m,n,p) = (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(d) +
                                    "): " + r.witness;
                         }
                     return std::nullopt;
                   }});
  return c;
}

// ---- number-theory-lemmas --------------------------------------------------

std::vector<Check> number_theory() {
  std::vector<Check> c;
  c.push_back({"nu2-3m-1", "nu_2(3^m - 1) = 1 for m odd and nu_2(m) + 2 for m even", [](std::uint64_t) -> Witness {
                 for (std::int64_t m = 1; m <= 1024; ++m) {
                   const unsigned want = m % 2 ? 1 : vp(m, std::int64_t{2}) + 2;
                   const unsigned got = vp(Int(ipow(Int(3), static_cast<unsigned long>(m)) - 1), 2ul);
                   if (got != want) return "m=" + std::to_string(m) + ": " + std::to_string(got) + " vs " + std::to_string(want);
                 }
                 return std::nullopt;
               }});
  for (std::int64_t p : {3, 5})
    c.push_back({"nup-generator.p" + std::to_string(p), "nu_p(s^{(p-1)p^{q-1}k} - 1) = q for 1 <= q <= r-1, (k,p) = 1",
                 [p](std::uint64_t) -> Witness {
                   for (unsigned r = 2; r <= 5; ++r) {
                     const std::int64_t mod = ipow64(p, r);
                     const std::int64_t s = aut_cyclic_generators(mod).at(0).unit;
                     for (unsigned q = 1; q + 1 <= r; ++q)
                       for (std::int64_t k = 1; k <= 2 * p; ++k) {
                         if (k % p == 0) continue;
                         const unsigned long e = static_cast<unsigned long>((p - 1) * ipow64(p, q - 1) * k);
                         const unsigned got = vp(Int(ipow(Int(static_cast<long>(s)), e) - 1), static_cast<unsigned long>(p));
                         if (got != q)
                           return "r=" + std::to_string(r) + ", s=" + std::to_string(s) + ", q=" + std::to_string(q) +
                                  ", k=" + std::to_string(k) + ": valuation " + std::to_string(got);
                       }
                     for (std::int64_t m = 1; m <= 60; ++m)
                       if (gcd64(m, p - 1) == 1 && pow_mod(s, static_cast<std::uint64_t>(m), p) == 1)
                         return "p divides s^" + std::to_string(m) + " - 1 (s=" + std::to_string(s) + ")";
                   }
                   return std::nullopt;
                 }});
  c.push_back({"aut-z2r-generators", "Aut(Z_{2^r}) = <3, 2^r - 1> with orders 2^{r-2} and 2", [](std::uint64_t) -> Witness {
                 for (unsigned r = 3; r <= 10; ++r) {
                   const std::int64_t m = std::int64_t{1} << r;
                   auto g = aut_cyclic_generators(m);
                   if (g.size() != 2 || g[0].unit != 3 || g[1].unit != m - 1 || g[0].order != (m >> 2) || g[1].order != 2 ||
                       mult_order(3, m) != (m >> 2) || mult_order(m - 1, m) != 2)
                     return "r=" + std::to_string(r) + ": wrong generators or orders";
                   std::vector<std::int64_t> closure = generate_group<std::int64_t>(
                       {3, m - 1}, 1, [m](std::int64_t a, std::int64_t b) { return mul_mod(a, b, m); });
                   if (closure.size() != static_cast<std::size_t>(m / 2))
                     return "r=" + std::to_string(r) + ": <3, -1> has " + std::to_string(closure.size()) + " elements";
                 }
                 return std::nullopt;
               }});
  c.push_back({"wilson", "(p-1)! = -1 mod p for p <= 97", [](std::uint64_t) -> Witness {
                 for (std::int64_t p = 2; p <= 97; ++p) {
                   if (!is_prime(p)) continue;
                   std::int64_t prod = 1;
                   for (std::int64_t a = 1; a < p; ++a) prod = mul_mod(prod, a, p);
                   if (prod != p - 1) return "p=" + std::to_string(p) + ": product " + std::to_string(prod);
                 }
                 return std::nullopt;
               }});
  return c;
}

struct SuiteDef {
  std::uint64_t seed;
  std::function<std::vector<Check>()> build;
};

const std::map<std::string, SuiteDef>& registry() {
  static const std::map<std::string, SuiteDef> r = {
      {"holomorph-basics", {101, holomorph_basics}},
      {"resolution-acyclicity", {202, resolution_acyclicity}},
      {"homology-tables", {303, homology_tables}},
      {"cohomology-ranks", {404, cohomology_ranks}},
      {"ring-hilbert", {505, ring_hilbert}},
      {"dickson-noncollapse", {606, dickson_noncollapse}},
      {"congruence-tower", {707, congruence_tower}},
      {"bockstein", {808, bockstein_suite}},
      {"wreath-permutative", {909, wreath_permutative}},
      {"number-theory-lemmas", {1010, number_theory}},
  };
  return r;
}

const SuiteDef& lookup(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite: " + name);
  return it->second;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string md_cell(std::string s) {
  for (std::size_t i = 0; (i = s.find('|', i)) != std::string::npos; i += 2) s.replace(i, 1, "\\|");
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  // the documented order, not the alphabetical one
  static const std::vector<std::string> names = {"holomorph-basics", "resolution-acyclicity", "homology-tables",
                                                 "cohomology-ranks", "ring-hilbert",          "dickson-noncollapse",
                                                 "congruence-tower", "bockstein",             "wreath-permutative",
                                                 "number-theory-lemmas"};
  return names;
}

std::uint64_t default_seed(const std::string& suite) { return lookup(suite).seed; }

SuiteReport run_suite(const std::string& name, std::optional<std::uint64_t> seed) {
  const SuiteDef& def = lookup(name);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = name;
  rep.seed = seed.value_or(def.seed);
  auto checks = def.build();
  rep.checks.resize(checks.size());
  parallel_for(checks.size(), [&](std::size_t i) {
    CheckResult& out = rep.checks[i];
    out.id = checks[i].id;
    out.anchor = checks[i].anchor;
    Witness w;
    try {
      w = checks[i].run(rep.seed);
    } catch (const std::exception& e) {
      w = std::string("exception: ") + e.what();
    }
    out.pass = !w;
    if (w) out.witness = *w;
  });
  std::stable_sort(rep.checks.begin(), rep.checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  rep.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

nlohmann::ordered_json report_to_json(const SuiteReport& r, bool timing) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["version"] = kVersion;
  j["seed"] = r.seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["anchor"] = c.anchor;
    e["status"] = c.pass ? "pass" : "fail";
    if (!c.pass) e["witness"] = c.witness;
    j["checks"].push_back(std::move(e));
  }
  j["elapsed_ms"] = timing ? r.elapsed_ms : 0;
  return j;
}

SuiteReport report_from_json(const nlohmann::ordered_json& j) {
  SuiteReport r;
  r.suite = j.at("suite").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  for (const auto& e : j.at("checks")) {
    CheckResult c;
    c.id = e.at("id").get<std::string>();
    c.anchor = e.at("anchor").get<std::string>();
    const auto status = e.at("status").get<std::string>();
    if (status != "pass" && status != "fail") throw std::invalid_argument("bad status: " + status);
    c.pass = status == "pass";
    if (e.contains("witness")) c.witness = e.at("witness").get<std::string>();
    r.checks.push_back(std::move(c));
  }
  return r;
}

std::string report_to_markdown(const SuiteReport& r) {
  std::ostringstream os;
  os << "## " << r.suite << " (seed " << r.seed << ", " << r.checks.size() - r.failures() << "/" << r.checks.size()
     << " pass)\n\n| id | claim | status | witness |\n|---|---|---|---|\n";
  for (const auto& c : r.checks)
    os << "| " << md_cell(c.id) << " | " << md_cell(c.anchor) << " | " << (c.pass ? "pass" : "FAIL") << " | "
       << md_cell(c.witness) << " |\n";
  return os.str();
}

std::string report_to_csv(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite,id,anchor,status,witness\n";
  for (const auto& c : r.checks)
    os << csv_field(r.suite) << "," << csv_field(c.id) << "," << csv_field(c.anchor) << "," << (c.pass ? "pass" : "fail")
       << "," << csv_field(c.witness) << "\n";
  return os.str();
}

}  // namespace hollab
