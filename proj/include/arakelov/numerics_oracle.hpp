#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "arakelov/real.hpp"

namespace arakelov::oracle {

/// Raised when an acceleration or quadrature budget is exhausted before the
/// requested accuracy is reached.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrecisionBudget {
  double abs_tol = 1e-10;
  std::int64_t max_subdivisions = 2000;

  /// Throws std::domain_error unless abs_tol >= 1e-14 and max_subdivisions >= 1.
  static PrecisionBudget make(double abs_tol, std::int64_t max_subdivisions);
};

// ---- Glaisher-Kinkelin / zeta'(-1) -----------------------------------------

inline constexpr int kMaxZetaDigits = 30;
inline constexpr int kDefaultGlaisherLevels = 14;

/// zeta'(-1) = 1/12 - log A, with log A obtained from the limit
///   log K(n+1) - (n^2/2 + n/2 + 1/12) log n + n^2/4 -> log A,
/// K(n+1) = prod_{i<=n} i^i, sampled at n = 8 * 2^j and accelerated by
/// Richardson extrapolation in powers of 1/n^2. Returns the unrounded value,
/// accurate to at least `digits` decimal places.
///
/// Throws std::domain_error unless 1 <= digits <= 30, and ConvergenceError if
/// `max_levels` doublings do not settle the requested digits.
Real zeta_prime_neg1(int digits, int max_levels = kDefaultGlaisherLevels);

/// log A for the Glaisher-Kinkelin constant A, same scheme and contract.
Real log_glaisher(int digits, int max_levels = kDefaultGlaisherLevels);

/// sum_{i=lo+1}^{hi} i log i. Parallel reduction over i.
WideReal hyperfactorial_log_block(std::int64_t lo, std::int64_t hi);

// ---- quadrature ------------------------------------------------------------

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
  std::int64_t subdivisions = 0;
};

/// Adaptive Gauss-Kronrod (7,15) with global bisection of the worst interval
/// until the summed error estimate is below budget.abs_tol. Throws
/// ConvergenceError when more than budget.max_subdivisions intervals would
/// be needed.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    const PrecisionBudget& budget);

/// int_0^inf t^i / (1+t)^(a+2) dt via t = u/(1-u) on (0,1). The exact value
/// is i!(a-i)!/(a+1)!. Throws std::domain_error unless 0 <= i <= a.
double quadrature_gram_entry(std::int64_t a, std::int64_t i, const PrecisionBudget& budget);

/// |(1/pi) int_0^inf int_0^2pi r^(i+j+1) e^{i phi (i-j)} / (1+r^2)^(a+2) dphi dr|,
/// with the angular factor integrated numerically. Throws std::domain_error
/// unless i != j and both lie in [0, a].
double quadrature_offdiagonal_vanishing(std::int64_t a, std::int64_t i, std::int64_t j,
                                        const PrecisionBudget& budget);

/// Every diagonal entry for a = 0..max_a, flattened in (a, i) order. The
/// (a, i) pairs are integrated in parallel.
std::vector<double> gram_quadrature_table(std::int64_t max_a, const PrecisionBudget& budget);

namespace serial {
WideReal hyperfactorial_log_block(std::int64_t lo, std::int64_t hi);
std::vector<double> gram_quadrature_table(std::int64_t max_a, const PrecisionBudget& budget);
}  // namespace serial

}  // namespace arakelov::oracle
