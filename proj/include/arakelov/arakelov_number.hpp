#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "arakelov/rational.hpp"
#include "arakelov/real.hpp"

namespace arakelov {

/// An element of Q + Q*zeta'(-1) + sum_p Q*log p.
///
/// This is the value type of every degree, torsion and Euler characteristic
/// computed by the library. zeta'(-1) stays symbolic; zeta(-1) = -1/12 is
/// rational and lives in the rational part. The representation is canonical
/// (no zero coefficient is ever stored, log keys are primes), so `==` is exact
/// componentwise equality.
class ArakelovNumber {
 public:
  using LogTerms = std::map<std::uint64_t, Rational>;

  ArakelovNumber() = default;
  ArakelovNumber(Rational rational);  // NOLINT(google-explicit-constructor)

  static ArakelovNumber zeta_prime(Rational coeff);
  /// coeff * log p. Throws std::domain_error if p is not prime.
  static ArakelovNumber log_prime(std::uint64_t p, Rational coeff = 1);

  const Rational& rational_part() const { return rational_; }
  const Rational& zeta_coeff() const { return zeta_; }
  const LogTerms& log_terms() const { return logs_; }
  /// Coefficient of log p (zero when absent).
  Rational log_coeff(std::uint64_t p) const;

  bool is_zero() const { return rational_.is_zero() && zeta_.is_zero() && logs_.empty(); }
  bool is_pure_log() const { return rational_.is_zero() && zeta_.is_zero(); }

  ArakelovNumber operator-() const;
  ArakelovNumber& operator+=(const ArakelovNumber& o);
  ArakelovNumber& operator-=(const ArakelovNumber& o);
  ArakelovNumber& operator*=(const Rational& s);

  friend ArakelovNumber operator+(ArakelovNumber a, const ArakelovNumber& b) { return a += b; }
  friend ArakelovNumber operator-(ArakelovNumber a, const ArakelovNumber& b) { return a -= b; }
  friend ArakelovNumber operator*(ArakelovNumber a, const Rational& s) { return a *= s; }
  friend ArakelovNumber operator*(const Rational& s, ArakelovNumber a) { return a *= s; }

  friend bool operator==(const ArakelovNumber&, const ArakelovNumber&) = default;

  /// Human-readable exact form, e.g. "1/2 + log 2 - 4 zeta'(-1)".
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const ArakelovNumber& x) {
    return os << x.to_string();
  }

 private:
  Rational rational_;
  Rational zeta_;
  LogTerms logs_;
};

/// sum_p e_p log p for n = prod p^e_p. Throws std::domain_error for n <= 0
/// or prime factors above the sieve bound.
ArakelovNumber log_of_positive_integer(const mpz_class& n);
ArakelovNumber log_of_positive_integer(std::int64_t n);

/// log(num) - log(den). Throws std::domain_error for q <= 0.
ArakelovNumber log_of_positive_rational(const Rational& q);

/// Stored value of zeta'(-1) (60 significant digits).
const Real& zeta_prime_neg1_constant();

/// rational + zeta*zeta'(-1) + sum coeff*log p, evaluated with ~50 digits.
/// The absolute error is below 10^(1-precision) for precision <=
/// kMaxOutputPrecision; larger requests are clamped to that bound.
/// Throws std::domain_error when precision < 1.
Real numeric_value(const ArakelovNumber& x, int precision);

/// rank * (2 zeta'(-1) + zeta(-1)): the only surviving term of the R-genus on
/// a curve. Throws std::domain_error for rank <= 0.
ArakelovNumber r_genus_degree_term(std::int64_t rank);

/// {"rational": "p/q", "zeta1": "p/q", "logs": {"2": "p/q"}, "numeric": "..."}
nlohmann::json to_json(const ArakelovNumber& x, int precision);

/// Inverse of to_json. The "numeric" field, if present, is ignored. Throws
/// std::invalid_argument on schema violations.
ArakelovNumber arakelov_number_from_json(const nlohmann::json& j);

}  // namespace arakelov
