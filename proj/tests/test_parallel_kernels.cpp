#include <random>

#include "doctest.h"

#include "arakelov/birkhoff.hpp"
#include "arakelov/fp_linalg.hpp"
#include "arakelov/numerics_oracle.hpp"
#include "arakelov/parallel.hpp"
#include "gauge_helpers.hpp"

using namespace arakelov;

TEST_CASE("parallel_for visits every index once") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK(max_threads() >= 1);
}

TEST_CASE("hyperfactorial block: parallel equals serial") {
  for (auto [lo, hi] : {std::pair<std::int64_t, std::int64_t>{0, 10}, {0, 5000}, {1000, 9000}}) {
    const WideReal a = oracle::hyperfactorial_log_block(lo, hi);
    const WideReal b = oracle::serial::hyperfactorial_log_block(lo, hi);
    CHECK(abs(a - b) <= abs(b) * WideReal("1e-60"));
  }
}

TEST_CASE("Gram quadrature table: parallel equals serial") {
  const oracle::PrecisionBudget budget;
  const auto a = oracle::gram_quadrature_table(6, budget);
  const auto b = oracle::serial::gram_quadrature_table(6, budget);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == b[k]);
}

TEST_CASE("rank_mod_p: parallel equals serial on large matrices") {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2U, 65521U}) {
    for (std::size_t n : {40U, 150U}) {
      FpMatrix m(n, n + 7, p);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n + 7; ++c) m.set(r, c, static_cast<std::int64_t>(rng() % p));
      // force a rank drop
      for (std::size_t c = 0; c < n + 7; ++c) m.at(n - 1, c) = m.at(0, c);
      CHECK(rank_mod_p(m) == serial::rank_mod_p(m));
      CHECK(rank_mod_p(m) < n);
    }
  }
}

TEST_CASE("h0_dim: parallel equals serial") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 30; ++k) {
    const std::uint32_t p = (k % 3 == 0) ? 2 : 5;
    const auto m = testing::random_unimodular(rng, p, true, 3) * TransitionMatrix2::diagonal(p, 20, -4) *
                   testing::random_unimodular(rng, p, false, 3);
    for (std::int64_t n : {-10, 0, 5, 30}) CHECK(h0_dim(m, n) == serial::h0_dim(m, n));
  }
}
