#include <cmath>

#include "doctest.h"

#include "arakelov/arakelov_invariants.hpp"
#include "arakelov/numerics_oracle.hpp"

using namespace arakelov;
using namespace arakelov::oracle;

TEST_CASE("zeta'(-1) oracle matches the stored constant") {
  const Real stored = numeric_value(ArakelovNumber::zeta_prime(Rational(1)), 40);
  CHECK(abs(zeta_prime_neg1(30) - stored) < Real("1e-30"));
  CHECK(abs(zeta_prime_neg1(7) - Real("-0.1654211")) < Real("5e-8"));
}

TEST_CASE("zeta'(-1) rounded outputs") {
  CHECK(format_decimal(zeta_prime_neg1(7), 7) == "-0.1654211");
  CHECK(format_decimal(zeta_prime_neg1(2), 2) == "-0.17");
}

TEST_CASE("Glaisher constant") {
  const Real a = exp(Real(1) / 12 - zeta_prime_neg1(20));
  CHECK(format_decimal(a, 7) == "1.2824271");
  CHECK(abs(log_glaisher(20) - log(Real("1.28242712910062263687534256886979172776768892732500"))) < Real("1e-20"));
}

TEST_CASE("zeta'(-1) is monotone-stable in the level budget") {
  const std::string reference = format_decimal(zeta_prime_neg1(12, 10), 12);
  for (int levels = 11; levels <= 18; ++levels) CHECK(format_decimal(zeta_prime_neg1(12, levels), 12) == reference);
}

TEST_CASE("zeta'(-1) contract errors") {
  CHECK_THROWS_AS(zeta_prime_neg1(0), std::domain_error);
  CHECK_THROWS_AS(zeta_prime_neg1(31), std::domain_error);
  CHECK_THROWS_AS(zeta_prime_neg1(30, 2), ConvergenceError);
}

TEST_CASE("hyperfactorial block against direct sum") {
  WideReal direct = 0;
  for (int i = 1; i <= 500; ++i) direct += WideReal(i) * log(WideReal(i));
  CHECK(abs(hyperfactorial_log_block(0, 500) - direct) < WideReal("1e-80"));
  CHECK(hyperfactorial_log_block(0, 300) + hyperfactorial_log_block(300, 500) - direct < WideReal("1e-80"));
}

TEST_CASE("PrecisionBudget validation") {
  CHECK_NOTHROW(PrecisionBudget::make(1e-14, 1));
  CHECK_THROWS_AS(PrecisionBudget::make(1e-15, 100), std::domain_error);
  CHECK_THROWS_AS(PrecisionBudget::make(0, 100), std::domain_error);
  CHECK_THROWS_AS(PrecisionBudget::make(1e-8, 0), std::domain_error);
}

TEST_CASE("adaptive quadrature on known integrals") {
  const PrecisionBudget budget;
  const auto r = integrate_adaptive([](double x) { return std::exp(x); }, 0, 1, budget);
  CHECK(std::abs(r.value - (std::exp(1.0) - 1)) < 1e-12);
  const auto s = integrate_adaptive([](double x) { return std::sqrt(x); }, 0, 1, budget);
  CHECK(std::abs(s.value - 2.0 / 3) < 1e-10);
  CHECK(s.subdivisions > 1);
  CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::sqrt(x); }, 0, 1, PrecisionBudget::make(1e-14, 1)),
                  ConvergenceError);
}

TEST_CASE("quadrature_gram_entry examples") {
  const PrecisionBudget budget;
  CHECK(std::abs(quadrature_gram_entry(0, 0, budget) - 1.0) < budget.abs_tol);
  CHECK(std::abs(quadrature_gram_entry(1, 0, budget) - 0.5) < budget.abs_tol);
  CHECK(std::abs(quadrature_gram_entry(2, 1, budget) - 1.0 / 6) < budget.abs_tol);
  CHECK_THROWS_AS(quadrature_gram_entry(2, 3, budget), std::domain_error);
  CHECK_THROWS_AS(quadrature_gram_entry(-1, 0, budget), std::domain_error);
}

TEST_CASE("quadrature_offdiagonal_vanishing examples") {
  const PrecisionBudget budget;
  CHECK(quadrature_offdiagonal_vanishing(2, 0, 1, budget) < budget.abs_tol);
  CHECK(quadrature_offdiagonal_vanishing(3, 0, 2, budget) < budget.abs_tol);
  CHECK(quadrature_offdiagonal_vanishing(5, 1, 4, budget) < budget.abs_tol);
  CHECK_THROWS_AS(quadrature_offdiagonal_vanishing(3, 1, 1, budget), std::domain_error);
  CHECK_THROWS_AS(quadrature_offdiagonal_vanishing(3, 0, 4, budget), std::domain_error);
}

TEST_CASE("quadrature reproduces every exact Gram entry for a <= 8") {
  const PrecisionBudget budget;
  const auto table = gram_quadrature_table(8, budget);
  std::size_t k = 0;
  for (std::int64_t a = 0; a <= 8; ++a) {
    const auto g = gram_matrix_h0(a);
    for (std::int64_t i = 0; i <= a; ++i, ++k) {
      CHECK(std::abs(table.at(k) - g.diagonal[i].to_double()) < 1e-9);
      for (std::int64_t j = 0; j <= a; ++j)
        if (j != i) CHECK(quadrature_offdiagonal_vanishing(a, i, j, budget) < 1e-9);
    }
  }
  CHECK(k == table.size());
}
