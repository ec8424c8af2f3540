#include "arakelov/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "arakelov/arakelov_invariants.hpp"
#include "arakelov/birkhoff.hpp"
#include "arakelov/parallel.hpp"
#include "arakelov/primes.hpp"

namespace arakelov {

namespace {

struct Check {
  std::string id;
  std::string name;
  // Returns "" on success, otherwise a description of the first mismatch.
  std::function<std::string()> run;
};

template <class T>
std::string expect_eq(const T& got, const T& want, const std::string& what) {
  if (got == want) return {};
  std::ostringstream os;
  os << what << ": got " << got.to_string() << ", expected " << want.to_string();
  return os.str();
}

std::string expect(bool ok, const std::string& what) { return ok ? std::string() : what; }

// Joins the first failure of a list of sub-checks.
std::string first_failure(std::initializer_list<std::string> parts) {
  for (const auto& p : parts)
    if (!p.empty()) return p;
  return {};
}

Triple triple(std::int64_t a, std::int64_t b, std::vector<LciComponent> z = {}) {
  return Triple(a, b, Lci(std::move(z)));
}

std::string profile_str(const CohomologyProfile& p) {
  return "(" + std::to_string(p.h0_rank) + ", " + std::to_string(p.h1_rank) + ", " + p.h1_torsion.to_string() + ")";
}

std::string expect_profile(const CohomologyProfile& got, const CohomologyProfile& want, const std::string& what) {
  if (got == want) return {};
  return what + ": got " + profile_str(got) + ", expected " + profile_str(want);
}

LaurentPoly poly_from(std::uint32_t p, std::mt19937_64& rng, int max_degree, int sign) {
  LaurentPoly f(p);
  const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
  for (int e = 0; e <= d; ++e) f += LaurentPoly::monomial(p, static_cast<std::int64_t>(rng() % p), sign * e);
  return f;
}

// Product of transvections with entries in F_p[t] (sign = 1) or F_p[1/t]
// (sign = -1), times a constant diagonal: a random gauge transformation.
TransitionMatrix2 random_gauge(std::uint32_t p, std::mt19937_64& rng, int sign) {
  auto one = [p] { return LaurentPoly::monomial(p, 1, 0); };
  auto unit = [&] { return LaurentPoly::monomial(p, 1 + static_cast<std::int64_t>(rng() % (p - 1)), 0); };
  TransitionMatrix2 g({{{unit(), LaurentPoly(p)}, {LaurentPoly(p), unit()}}});
  for (int k = 0; k < 3; ++k) {
    const auto f = poly_from(p, rng, 2, sign);
    g = g * ((k % 2 == 0) ? TransitionMatrix2({{{one(), f}, {LaurentPoly(p), one()}}})
                          : TransitionMatrix2({{{one(), LaurentPoly(p)}, {f, one()}}}));
  }
  return g;
}

std::vector<Lci> grid_subschemes() {
  std::vector<LciComponent> singles;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL})
    for (std::int64_t n = 1; n <= 3; ++n)
      for (std::int64_t len = n; len <= 4; ++len) singles.push_back(LciComponent::make(p, n, len));
  std::vector<Lci> out{Lci()};
  for (std::size_t i = 0; i < singles.size(); ++i) {
    out.push_back(Lci({singles[i]}));
    for (std::size_t j = i + 1; j < singles.size(); ++j)
      if (singles[i].p != singles[j].p) out.push_back(Lci({singles[i], singles[j]}));
  }
  return out;
}

std::vector<Check> example_checks(const oracle::PrecisionBudget& budget) {
  const LciComponent z2 = LciComponent::make(2, 1, 1);
  std::vector<Check> out;
  out.push_back({"ex-r-genus", "rank-one degree term", [] {
                   return expect_eq(r_genus_degree_term(1),
                                    ArakelovNumber(Rational(-1, 12)) + ArakelovNumber::zeta_prime(Rational(2)),
                                    "r_genus_degree_term(1)");
                 }});
  out.push_back({"ex-line-cohomology", "line bundle cohomology", [] {
                   return first_failure({expect_profile(line_cohomology(3), {4, 0, H1Torsion::zero()}, "O(3)"),
                                         expect_profile(line_cohomology(-1), {0, 0, H1Torsion::zero()}, "O(-1)"),
                                         expect_profile(line_cohomology(-3), {0, 2, H1Torsion::zero()}, "O(-3)")});
                 }});
  out.push_back({"ex-ideal-cohomology", "ideal sheaf cohomology", [z2] {
                   const Lci z({z2});
                   return first_failure(
                       {expect_profile(ideal_cohomology(z, 0), {1, 0, H1Torsion::zero()}, "I_Z(0)"),
                        expect_profile(ideal_cohomology(z, -1), {0, 0, H1Torsion::exact(ArakelovNumber::log_prime(2))},
                                       "I_Z(-1)")});
                 }});
  out.push_back({"ex-no-cohomology-ranks", "ranks of O(-1)+O(-1)", [] {
                   const auto r = rank2_cohomology_ranks(triple(-1, -1), 0);
                   return expect(r == CohomologyRanks{0, 0}, "rank2_cohomology_ranks((-1,-1,{}), 0) != (0, 0)");
                 }});
  out.push_back({"ex-fiber-splitting", "fiber splitting of (-1,-1,{2:1:1})", [z2] {
                   const auto t = triple(-1, -1, {z2});
                   return first_failure({expect_eq(fiber_splitting(t, 2), SplittingType{0, -2}, "fiber 2"),
                                         expect_eq(fiber_splitting(t, 5), SplittingType{-1, -1}, "fiber 5")});
                 }});
  out.push_back({"ex-decomposable", "decomposability and no-cohomology", [z2] {
                   return first_failure(
                       {expect(is_decomposable(triple(5, -2)), "(5,-2,{}) should split"),
                        expect(!is_decomposable(triple(-1, -1, {z2})), "(-1,-1,{2:1:1}) should not split"),
                        expect(has_no_cohomology(triple(-1, -1)), "(-1,-1,{}) should have no cohomology"),
                        expect(!has_no_cohomology(triple(-1, -1, {z2})), "(-1,-1,{2:1:1}) has cohomology")});
                 }});
  out.push_back({"ex-roberts", "Roberts matrices and their reductions", [] {
                   std::string err;
                   for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
                     IntegerTransitionMatrix2 want;
                     want.entries[0][0] = IntLaurentPoly::monomial(1, 2);
                     want.entries[0][1] = IntLaurentPoly::monomial(static_cast<std::int64_t>(p), 1);
                     want.entries[1][1] = IntLaurentPoly::monomial(1, 0);
                     if (err.empty()) err = expect_eq(roberts_matrix(p), want, "roberts_matrix");
                   }
                   return first_failure(
                       {err, expect_eq(reduce_mod(roberts_matrix(2), 2), TransitionMatrix2::diagonal(2, 2, 0), "A_2 mod 2")});
                 }});
  out.push_back({"ex-birkhoff", "sections and splitting of model matrices", [] {
                   return first_failure(
                       {expect(h0_dim(TransitionMatrix2::diagonal(7, 2, 0), 0) == 1, "h0(diag(t^2,1), 0) != 1"),
                        expect_eq(splitting_type(TransitionMatrix2::diagonal(7, 1, 1)), SplittingType{-1, -1}, "diag(t,t)"),
                        expect_eq(splitting_type(TransitionMatrix2::diagonal(7, 2, 0)), SplittingType{0, -2}, "diag(t^2,1)"),
                        expect_eq(splitting_type(reduce_mod(roberts_matrix(2), 7)), SplittingType{-1, -1}, "A_2 mod 7")});
                 }});
  out.push_back({"ex-chern", "Chern data", [] {
                   std::string err;
                   for (std::int64_t a = -3; a <= 3 && err.empty(); ++a)
                     for (std::int64_t b = -3; b <= a && err.empty(); ++b) {
                       const auto c = chern_classes(triple(a, b));
                       if (c.c1_twist != a + b || !(c.c2_degree == ArakelovNumber(Rational(a * b, 2))))
                         err = "chern_classes of " + triple(a, b).to_string();
                     }
                   return first_failure({expect(intersection_c1c1(1, 1) == Rational(1, 2), "c1(O(1))^2 != 1/2"), err});
                 }});
  out.push_back({"ex-zeta", "zeta'(-1) to seven places", [] {
                   const Real z = oracle::zeta_prime_neg1(7);
                   return expect(format_decimal(z, 7) == "-0.1654211", "zeta'(-1) ~ " + format_decimal(z, 12));
                 }});
  out.push_back({"ex-offdiagonal", "off-diagonal L2 products vanish", [budget] {
                   std::string err;
                   for (auto [a, i, j] : {std::array<std::int64_t, 3>{2, 0, 1}, {3, 0, 2}, {5, 1, 4}}) {
                     const double v = oracle::quadrature_offdiagonal_vanishing(a, i, j, budget);
                     if (err.empty() && !(v < budget.abs_tol))
                       err = "a=" + std::to_string(a) + " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                             " magnitude " + std::to_string(v);
                   }
                   return err;
                 }});
  return out;
}

std::vector<Check> deep_checks(const oracle::PrecisionBudget& budget) {
  std::vector<Check> out;
  out.push_back({"criterion-1", "zeta'(-1) oracle within 5e-8", [] {
                   const Real z = oracle::zeta_prime_neg1(7);
                   return expect(abs(z - Real("-0.1654211")) < Real("5e-8"), "zeta'(-1) ~ " + format_decimal(z, 12));
                 }});
  out.push_back({"criterion-2", "Roberts reductions match fiber splitting", [] {
                   for (std::uint64_t p : {2ULL, 3ULL, 5ULL})
                     for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
                       const auto want = q == p ? SplittingType{0, -2} : SplittingType{-1, -1};
                       const auto t = triple(-1, -1, {LciComponent::make(p, 1, 1)});
                       const std::string where = " (p=" + std::to_string(p) + ", q=" + std::to_string(q) + ")";
                       auto err = first_failure({expect_eq(splitting_type(reduce_mod(roberts_matrix(p), q)), want,
                                                           "Birkhoff" + where),
                                                 expect_eq(fiber_splitting(t, q), want, "fiber_splitting" + where)});
                       if (!err.empty()) return err;
                     }
                   return std::string();
                 }});
  out.push_back({"criterion-3-4", "AHRR and discriminant identities on the grid", [] {
                   const auto zs = grid_subschemes();
                   for (std::int64_t a = -5; a <= 5; ++a)
                     for (std::int64_t b = -5; b <= a; ++b)
                       for (const auto& z : zs) {
                         const Triple t(a, b, z);
                         auto err = expect_eq(ahrr_rhs(chern_classes(t), 2), chi_Q_rank2(t), "AHRR at " + t.to_string());
                         if (!err.empty()) return err;
                         const ArakelovNumber closed =
                             z.h0_log_order() * Rational(4) - ArakelovNumber(Rational((a - b) * (a - b), 2));
                         err = expect_eq(discriminant(t), closed, "discriminant at " + t.to_string());
                         if (!err.empty()) return err;
                       }
                   return std::string();
                 }});
  out.push_back({"criterion-5", "line-bundle torsion consistency", [] {
                   for (std::int64_t a = -10; a <= 10; ++a) {
                     auto err = expect_eq(chi_Q_line(a), chi_L2_line(a) + analytic_torsion(a) * Rational(1, 2),
                                          "chi_Q = chi_L2 + T/2 at a=" + std::to_string(a));
                     if (!err.empty()) return err;
                   }
                   return expect_eq(analytic_torsion(-1), ArakelovNumber::zeta_prime(Rational(-4)), "T(O(-1))");
                 }});
  out.push_back({"criterion-6", "Gram quadrature for a <= 8", [budget] {
                   const auto table = oracle::gram_quadrature_table(8, budget);
                   std::size_t k = 0;
                   for (std::int64_t a = 0; a <= 8; ++a) {
                     const auto g = gram_matrix_h0(a);
                     for (std::int64_t i = 0; i <= a; ++i, ++k) {
                       if (!(std::abs(table[k] - g.diagonal[i].to_double()) < 1e-9))
                         return "diagonal entry a=" + std::to_string(a) + " i=" + std::to_string(i);
                       for (std::int64_t j = 0; j <= a; ++j)
                         if (j != i && !(oracle::quadrature_offdiagonal_vanishing(a, i, j, budget) < 1e-9))
                           return "off-diagonal a=" + std::to_string(a) + " i=" + std::to_string(i) +
                                  " j=" + std::to_string(j);
                     }
                   }
                   return std::string();
                 }});
  out.push_back({"criterion-7", "gauge invariance of the splitting type", [] {
                   std::mt19937_64 rng(20240601);
                   for (std::uint32_t p : {2U, 3U, 5U, 7U})
                     for (int k = 0; k < 100; ++k) {
                       const auto base = (k % 3 == 0)   ? reduce_mod(roberts_matrix(2), p)
                                         : (k % 3 == 1) ? TransitionMatrix2::diagonal(p, 3, -1)
                                                        : TransitionMatrix2::diagonal(p, 1, 1);
                       const auto m = random_gauge(p, rng, -1) * base * random_gauge(p, rng, 1);
                       const auto s = splitting_type(m);
                       const std::string where = " (p=" + std::to_string(p) + ", sample " + std::to_string(k) + ")";
                       auto err = first_failure({expect_eq(s, splitting_type(base), "splitting" + where),
                                                 expect(s.d1 + s.d2 == -det_unit(m).k, "degree conservation" + where)});
                       if (!err.empty()) return err;
                     }
                   return std::string();
                 }});
  out.push_back({"criterion-8", "no-cohomology classifier", [] {
                   for (std::int64_t a = -4; a <= 4; ++a)
                     for (std::int64_t b = -4; b <= a; ++b)
                       for (bool with_z : {false, true}) {
                         const auto t = with_z ? triple(a, b, {LciComponent::make(2, 1, 1)}) : triple(a, b);
                         const bool want = a == -1 && b == -1 && !with_z;
                         if (has_no_cohomology(t) != want) return "has_no_cohomology at " + t.to_string();
                         if (want && !(rank2_cohomology_ranks(t, 0) == CohomologyRanks{0, 0}))
                           return "ranks at " + t.to_string();
                       }
                   return std::string();
                 }});
  out.push_back({"criterion-9", "Serre duality rank symmetry", [] {
                   for (std::int64_t a = -20; a <= 20; ++a) {
                     const auto x = line_cohomology(a), y = line_cohomology(-a - 2);
                     if (x.h0_rank != y.h1_rank || x.h1_rank != y.h0_rank) return "a=" + std::to_string(a);
                   }
                   return std::string();
                 }});
  return out;
}

}  // namespace

std::vector<CheckResult> run_checks(bool deep, const oracle::PrecisionBudget& budget) {
  auto checks = example_checks(budget);
  if (deep) {
    auto more = deep_checks(budget);
    checks.insert(checks.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }
  std::vector<CheckResult> results(checks.size());
  auto run_one = [&](std::ptrdiff_t i) {
    const auto& c = checks[static_cast<std::size_t>(i)];
    auto& r = results[static_cast<std::size_t>(i)];
    r.id = c.id;
    r.name = c.name;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = c.run();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  if (deep)
    parallel_for(static_cast<std::ptrdiff_t>(checks.size()), run_one);
  else
    for (std::size_t i = 0; i < checks.size(); ++i) run_one(static_cast<std::ptrdiff_t>(i));
  return results;
}

}  // namespace arakelov
