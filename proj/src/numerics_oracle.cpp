#include "arakelov/numerics_oracle.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <queue>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "arakelov/parallel.hpp"

namespace arakelov::oracle {

PrecisionBudget PrecisionBudget::make(double abs_tol, std::int64_t max_subdivisions) {
  if (!(abs_tol >= 1e-14)) throw std::domain_error("PrecisionBudget: abs_tol must be >= 1e-14");
  if (max_subdivisions < 1) throw std::domain_error("PrecisionBudget: max_subdivisions must be >= 1");
  return {abs_tol, max_subdivisions};
}

// ---- Glaisher limit ----------------------------------------------------------

namespace {

constexpr std::int64_t kBaseSample = 8;

WideReal block_sum_serial(std::int64_t lo, std::int64_t hi) {
  WideReal s = 0;
  for (std::int64_t i = lo + 1; i <= hi; ++i) s += WideReal(i) * boost::multiprecision::log(WideReal(i));
  return s;
}

// log K(n+1) - (n^2/2 + n/2 + 1/12) log n + n^2/4
WideReal glaisher_sample(const WideReal& log_hyperfactorial, std::int64_t n) {
  const WideReal wn(n);
  return log_hyperfactorial - (wn * wn / 2 + wn / 2 + WideReal(1) / 12) * boost::multiprecision::log(wn) +
         wn * wn / 4;
}

void check_digits(int digits) {
  if (digits < 1 || digits > kMaxZetaDigits)
    throw std::domain_error("zeta'(-1) oracle: digits must be in [1, " + std::to_string(kMaxZetaDigits) + "]");
}

}  // namespace

WideReal hyperfactorial_log_block(std::int64_t lo, std::int64_t hi) {
  if (hi <= lo) return 0;
#if defined(_OPENMP)
  const int threads = max_threads();
  if (threads > 1 && hi - lo >= 256) {
    std::vector<WideReal> partial(static_cast<std::size_t>(threads), WideReal(0));
#pragma omp parallel num_threads(threads)
    {
      const int t = omp_get_thread_num();
      WideReal local = 0;
#pragma omp for schedule(static)
      for (std::int64_t i = lo + 1; i <= hi; ++i) local += WideReal(i) * boost::multiprecision::log(WideReal(i));
      partial[static_cast<std::size_t>(t)] = local;
    }
    WideReal s = 0;
    for (const auto& x : partial) s += x;
    return s;
  }
#endif
  return block_sum_serial(lo, hi);
}

namespace serial {
WideReal hyperfactorial_log_block(std::int64_t lo, std::int64_t hi) { return block_sum_serial(lo, hi); }
}  // namespace serial

Real log_glaisher(int digits, int max_levels) {
  check_digits(digits);
  if (max_levels < 2) throw std::domain_error("log_glaisher: need at least two levels");
  const WideReal tol = boost::multiprecision::pow(WideReal(10), -(digits + 4));

  // Row j of the Richardson table holds extrapolations of samples 0..j.
  std::vector<WideReal> previous_row;
  WideReal log_hyperfactorial = 0;
  std::int64_t n_prev = 0;
  WideReal last_diagonal = 0;
  for (int j = 0; j < max_levels; ++j) {
    const std::int64_t n = kBaseSample << j;
    log_hyperfactorial += hyperfactorial_log_block(n_prev, n);
    n_prev = n;

    std::vector<WideReal> row{glaisher_sample(log_hyperfactorial, n)};
    WideReal factor = 1;
    for (int k = 1; k <= j; ++k) {
      factor *= 4;
      row.push_back((factor * row[static_cast<std::size_t>(k - 1)] - previous_row[static_cast<std::size_t>(k - 1)]) /
                    (factor - 1));
    }
    const WideReal diagonal = row.back();
    if (j >= 2 && boost::multiprecision::abs(diagonal - last_diagonal) < tol) return Real(diagonal);
    last_diagonal = diagonal;
    previous_row = std::move(row);
  }
  throw ConvergenceError("Glaisher limit did not settle " + std::to_string(digits) + " digits within " +
                         std::to_string(max_levels) + " doublings");
}

Real zeta_prime_neg1(int digits, int max_levels) {
  return Real(1) / 12 - log_glaisher(digits, max_levels);
}

// ---- quadrature --------------------------------------------------------------

namespace {

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gauss_kronrod_panel(const std::function<double(double)>& f, double lo, double hi) {
  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
  using Gauss = boost::math::quadrature::gauss<double, 7>;
  const auto& x = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const double f0 = f(mid);
  double kronrod = f0 * wk[0];
  double gauss = f0 * wg[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double pair = f(mid + half * x[i]) + f(mid - half * x[i]);
    kronrod += pair * wk[i];
    // The 7-point Gauss nodes are the even-indexed Kronrod abscissae.
    if (i % 2 == 0) gauss += pair * wg[i / 2];
  }
  return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    const PrecisionBudget& budget) {
  std::priority_queue<Panel> panels;
  panels.push(gauss_kronrod_panel(f, lo, hi));
  double total_error = panels.top().error;
  std::int64_t count = 1;
  while (total_error > budget.abs_tol) {
    if (count >= budget.max_subdivisions)
      throw ConvergenceError("quadrature: error estimate " + std::to_string(total_error) + " above tolerance after " +
                             std::to_string(count) + " subdivisions");
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Panel left = gauss_kronrod_panel(f, worst.lo, mid);
    const Panel right = gauss_kronrod_panel(f, mid, worst.hi);
    total_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
  }
  QuadratureResult out;
  out.subdivisions = count;
  // Re-sum from scratch; the running error total drifts with cancellation.
  out.error_estimate = 0;
  while (!panels.empty()) {
    out.value += panels.top().value;
    out.error_estimate += panels.top().error;
    panels.pop();
  }
  return out;
}

namespace {

// int_0^inf g(t) dt with t = u/(1-u), dt = du/(1-u)^2. GK nodes never touch
// u = 1, so the map is always finite.
QuadratureResult integrate_half_line(const std::function<double(double)>& g, const PrecisionBudget& budget) {
  return integrate_adaptive(
      [&g](double u) {
        const double w = 1.0 - u;
        return g(u / w) / (w * w);
      },
      0.0, 1.0, budget);
}

}  // namespace

double quadrature_gram_entry(std::int64_t a, std::int64_t i, const PrecisionBudget& budget) {
  if (a < 0 || i < 0 || i > a) throw std::domain_error("quadrature_gram_entry: need 0 <= i <= a");
  const double pi_exp = static_cast<double>(i);
  const double denom_exp = static_cast<double>(a + 2);
  return integrate_half_line([=](double t) { return std::pow(t, pi_exp) / std::pow(1.0 + t, denom_exp); }, budget)
      .value;
}

double quadrature_offdiagonal_vanishing(std::int64_t a, std::int64_t i, std::int64_t j,
                                        const PrecisionBudget& budget) {
  if (i == j || i < 0 || j < 0 || i > a || j > a)
    throw std::domain_error("quadrature_offdiagonal_vanishing: need i != j, both in [0, a]");
  const double freq = static_cast<double>(i - j);
  const double two_pi = 2.0 * std::numbers::pi;
  const double re = integrate_adaptive([=](double phi) { return std::cos(freq * phi); }, 0.0, two_pi, budget).value;
  const double im = integrate_adaptive([=](double phi) { return std::sin(freq * phi); }, 0.0, two_pi, budget).value;
  // Radial part: with r^2 = t, int_0^inf r^(i+j+1)/(1+r^2)^(a+2) dr
  //            = 1/2 int_0^inf t^((i+j)/2)/(1+t)^(a+2) dt.
  const double half_power = 0.5 * static_cast<double>(i + j);
  const double denom_exp = static_cast<double>(a + 2);
  const double radial =
      0.5 * integrate_half_line([=](double t) { return std::pow(t, half_power) / std::pow(1.0 + t, denom_exp); },
                                budget)
                .value;
  return std::abs(std::complex<double>(re, im)) * radial / std::numbers::pi;
}

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> gram_pairs(std::int64_t max_a) {
  if (max_a < 0) throw std::domain_error("gram_quadrature_table: max_a must be >= 0");
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t a = 0; a <= max_a; ++a)
    for (std::int64_t i = 0; i <= a; ++i) pairs.emplace_back(a, i);
  return pairs;
}

}  // namespace

std::vector<double> gram_quadrature_table(std::int64_t max_a, const PrecisionBudget& budget) {
  const auto pairs = gram_pairs(max_a);
  std::vector<double> out(pairs.size());
  // Exceptions must not escape an OpenMP region; capture the first one.
  std::vector<std::exception_ptr> errors(pairs.size());
  parallel_for(static_cast<std::ptrdiff_t>(pairs.size()), [&](std::ptrdiff_t k) {
    const auto idx = static_cast<std::size_t>(k);
    try {
      out[idx] = quadrature_gram_entry(pairs[idx].first, pairs[idx].second, budget);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  });
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

namespace serial {
std::vector<double> gram_quadrature_table(std::int64_t max_a, const PrecisionBudget& budget) {
  std::vector<double> out;
  for (const auto& [a, i] : gram_pairs(max_a)) out.push_back(quadrature_gram_entry(a, i, budget));
  return out;
}
}  // namespace serial

}  // namespace arakelov::oracle
