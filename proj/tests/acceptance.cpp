// One line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "arakelov/arakelov_invariants.hpp"
#include "arakelov/birkhoff.hpp"
#include "arakelov/cli.hpp"
#include "arakelov/numerics_oracle.hpp"
#include "gauge_helpers.hpp"

using namespace arakelov;

namespace {

// Tolerances and time limits.
constexpr double kZetaTolerance = 5e-8;
constexpr double kGramTolerance = 1e-9;
constexpr double kZetaSeconds = 5;
constexpr double kRobertsSeconds = 2;
constexpr double kGridSeconds = 5;
constexpr double kGramSeconds = 30;
constexpr double kDeepVerifySeconds = 60;
constexpr int kGaugeSamples = 100;

struct Verdict {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double time_limit, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit > 0 && secs >= time_limit) {
    std::ostringstream os;
    os << "took " << secs << " s, limit " << time_limit << " s";
    v.fail(os.str());
  }
  failures += v.ok ? 0 : 1;
  std::cout << (v.ok ? "PASS" : "FAIL") << " criterion " << std::setw(2) << id << ": " << name << " (" << std::fixed
            << std::setprecision(3) << secs << " s)";
  if (!v.ok) std::cout << " -- " << v.detail;
  std::cout << std::endl;
}

Triple triple(std::int64_t a, std::int64_t b, std::vector<LciComponent> z = {}) { return Triple(a, b, Lci(std::move(z))); }

// Every Z that is empty or has one or two components over distinct primes in
// {2, 3, 5} with fiber degree n <= 3 and length n <= len <= 4.
std::vector<std::vector<LciComponent>> criterion_subschemes() {
  std::vector<LciComponent> singles;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL})
    for (std::int64_t n = 1; n <= 3; ++n)
      for (std::int64_t len = n; len <= 4; ++len) singles.push_back(LciComponent::make(p, n, len));
  std::vector<std::vector<LciComponent>> out{{}};
  for (std::size_t i = 0; i < singles.size(); ++i) {
    out.push_back({singles[i]});
    for (std::size_t j = i + 1; j < singles.size(); ++j)
      if (singles[i].p != singles[j].p) out.push_back({singles[i], singles[j]});
  }
  return out;
}

// (a+1)^2/4 + (b+1)^2/4 - sum len log p - 4 zeta'(-1), assembled term by term.
ArakelovNumber expected_chi(std::int64_t a, std::int64_t b, const std::vector<LciComponent>& z) {
  ArakelovNumber x(Rational((a + 1) * (a + 1) + (b + 1) * (b + 1), 4));
  for (const auto& c : z) x -= ArakelovNumber::log_prime(c.p, Rational(c.length));
  return x + ArakelovNumber::zeta_prime(Rational(-4));
}

ArakelovNumber expected_discriminant(std::int64_t a, std::int64_t b, const std::vector<LciComponent>& z) {
  ArakelovNumber x(Rational(-(a - b) * (a - b), 2));
  for (const auto& c : z) x += ArakelovNumber::log_prime(c.p, Rational(4 * c.length));
  return x;
}

double factorial_ratio(std::int64_t a, std::int64_t i) {
  double v = 1;
  for (std::int64_t k = 1; k <= i; ++k) v *= static_cast<double>(k);
  for (std::int64_t k = 1; k <= a - i; ++k) v *= static_cast<double>(k);
  for (std::int64_t k = 1; k <= a + 1; ++k) v /= static_cast<double>(k);
  return v;
}

}  // namespace

int main() {
  criterion(1, "zeta'(-1) oracle reproduces -0.1654211", kZetaSeconds, [](Verdict& v) {
    const Real z = oracle::zeta_prime_neg1(7);
    if (!(abs(z - Real("-0.1654211")) < Real(kZetaTolerance))) v.fail("got " + format_decimal(z, 12));
  });

  criterion(2, "Roberts example: Birkhoff splitting matches fiber splitting", kRobertsSeconds, [](Verdict& v) {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL})
      for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        const SplittingType want = q == p ? SplittingType{0, -2} : SplittingType{-1, -1};
        const auto got = splitting_type(reduce_mod(roberts_matrix(p), q));
        const auto fiber = fiber_splitting(triple(-1, -1, {LciComponent::make(p, 1, 1)}), q);
        if (!(got == want) || !(fiber == want))
          v.fail("p=" + std::to_string(p) + " q=" + std::to_string(q) + ": Birkhoff " + got.to_string() + ", fiber " +
                 fiber.to_string());
      }
  });

  const auto zs = criterion_subschemes();
  criterion(3, "exact AHRR identity on the grid", kGridSeconds, [&](Verdict& v) {
    std::size_t count = 0;
    for (std::int64_t a = -5; a <= 5; ++a)
      for (std::int64_t b = -5; b <= a; ++b)
        for (const auto& z : zs) {
          const Triple t = triple(a, b, z);
          const auto lhs = ahrr_rhs(chern_classes(t), 2);
          const auto want = expected_chi(a, b, z);
          if (!(lhs == chi_Q_rank2(t)) || !(lhs == want)) v.fail(t.to_string() + ": " + lhs.to_string());
          ++count;
        }
    if (count != 66 * zs.size()) v.fail("grid size " + std::to_string(count));
  });

  criterion(4, "exact discriminant identity on the grid", kGridSeconds, [&](Verdict& v) {
    for (std::int64_t a = -5; a <= 5; ++a)
      for (std::int64_t b = -5; b <= a; ++b)
        for (const auto& z : zs) {
          const Triple t = triple(a, b, z);
          const auto c = chern_classes(t);
          const auto via_chern = c.c2_degree * Rational(4) - ArakelovNumber(intersection_c1c1(c.c1_twist, c.c1_twist));
          const auto d = discriminant(t);
          if (!(d == via_chern) || !(d == expected_discriminant(a, b, z))) v.fail(t.to_string() + ": " + d.to_string());
        }
  });

  criterion(5, "line-bundle torsion consistency", 0, [](Verdict& v) {
    for (std::int64_t a = -10; a <= 10; ++a)
      if (!(chi_Q_line(a) == chi_L2_line(a) + analytic_torsion(a) * Rational(1, 2))) v.fail("a=" + std::to_string(a));
    if (!(analytic_torsion(-1) == ArakelovNumber::zeta_prime(Rational(-4))))
      v.fail("T(O(-1)) = " + analytic_torsion(-1).to_string());
  });

  criterion(6, "Gram entries by quadrature for a <= 8", kGramSeconds, [](Verdict& v) {
    const oracle::PrecisionBudget budget;
    for (std::int64_t a = 0; a <= 8; ++a)
      for (std::int64_t i = 0; i <= a; ++i) {
        const double q = oracle::quadrature_gram_entry(a, i, budget);
        if (!(std::abs(q - factorial_ratio(a, i)) < kGramTolerance))
          v.fail("diagonal a=" + std::to_string(a) + " i=" + std::to_string(i));
        for (std::int64_t j = 0; j <= a; ++j)
          if (j != i && !(oracle::quadrature_offdiagonal_vanishing(a, i, j, budget) < kGramTolerance))
            v.fail("off-diagonal a=" + std::to_string(a) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
  });

  criterion(7, "gauge invariance and degree conservation", 0, [](Verdict& v) {
    std::mt19937_64 rng(7);
    for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
      const std::vector<TransitionMatrix2> bases = {reduce_mod(roberts_matrix(2), p), reduce_mod(roberts_matrix(3), p),
                                                    TransitionMatrix2::diagonal(p, 4, -1),
                                                    TransitionMatrix2::diagonal(p, 1, 1)};
      for (int k = 0; k < kGaugeSamples; ++k) {
        const auto& base = bases[static_cast<std::size_t>(k) % bases.size()];
        const auto m = testing::random_unimodular(rng, p, true) * base * testing::random_unimodular(rng, p, false);
        const auto s = splitting_type(m);
        if (!(s == splitting_type(base)))
          v.fail("p=" + std::to_string(p) + " sample " + std::to_string(k) + ": " + s.to_string());
        if (s.d1 + s.d2 != -det_unit(m).k) v.fail("degree not conserved at p=" + std::to_string(p));
      }
    }
  });

  criterion(8, "no-cohomology classifier", 0, [](Verdict& v) {
    for (std::int64_t a = -4; a <= 4; ++a)
      for (std::int64_t b = -4; b <= a; ++b)
        for (bool with_z : {false, true}) {
          const Triple t = with_z ? triple(a, b, {LciComponent::make(2, 1, 1)}) : triple(a, b);
          const bool want = a == -1 && b == -1 && !with_z;
          if (has_no_cohomology(t) != want) v.fail(t.to_string());
          if (want && !(rank2_cohomology_ranks(t, 0) == CohomologyRanks{0, 0})) v.fail("ranks at " + t.to_string());
        }
  });

  criterion(9, "Serre duality rank symmetry", 0, [](Verdict& v) {
    for (std::int64_t a = -20; a <= 20; ++a) {
      const auto x = line_cohomology(a), y = line_cohomology(-a - 2);
      if (x.h0_rank != y.h1_rank || x.h1_rank != y.h0_rank) v.fail("O(" + std::to_string(a) + ")");
      // E^dual = E(-a-b) for rank two
      const Triple t = triple(3, -2, {LciComponent::make(2, 1, 1)});
      const auto e = rank2_cohomology_ranks(t, a), f = rank2_cohomology_ranks(t, -a - 1 - 2);
      if (e.h0_rank != f.h1_rank || e.h1_rank != f.h0_rank) v.fail("E(" + std::to_string(a) + ")");
    }
  });

  criterion(10, "verify --deep", kDeepVerifySeconds, [](Verdict& v) {
    std::ostringstream out, err;
    const int code = cli::run({"verify", "--deep"}, out, err);
    if (code != 0) v.fail("exit code " + std::to_string(code) + "\n" + out.str() + err.str());
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
