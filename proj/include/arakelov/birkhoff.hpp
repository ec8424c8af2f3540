#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "arakelov/sheaf_model.hpp"

namespace arakelov {

/// The determinant of a transition matrix is not a unit c*t^k.
class DegenerateMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Laurent polynomial in t with integer coefficients.
class IntLaurentPoly {
 public:
  IntLaurentPoly() = default;
  static IntLaurentPoly monomial(std::int64_t coeff, std::int64_t exponent);

  const std::map<std::int64_t, std::int64_t>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  IntLaurentPoly& operator+=(const IntLaurentPoly& o);
  std::string to_string() const;
  friend bool operator==(const IntLaurentPoly&, const IntLaurentPoly&) = default;

 private:
  std::map<std::int64_t, std::int64_t> coeffs_;
};

/// Laurent polynomial in t over F_p, zero coefficients dropped.
class LaurentPoly {
 public:
  explicit LaurentPoly(std::uint32_t p);
  static LaurentPoly monomial(std::uint32_t p, std::int64_t coeff, std::int64_t exponent);

  std::uint32_t modulus() const { return p_; }
  const std::map<std::int64_t, std::uint32_t>& coefficients() const { return coeffs_; }
  std::uint32_t coeff(std::int64_t exponent) const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  std::int64_t min_exponent() const;  ///< requires !is_zero()
  std::int64_t max_exponent() const;  ///< requires !is_zero()

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  std::string to_string() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(std::int64_t exponent, std::uint64_t value);
  std::uint32_t p_;
  std::map<std::int64_t, std::uint32_t> coeffs_;
};

/// 2x2 matrix over Z[t, 1/t].
struct IntegerTransitionMatrix2 {
  std::array<std::array<IntLaurentPoly, 2>, 2> entries;
  std::string to_string() const;
  friend bool operator==(const IntegerTransitionMatrix2&, const IntegerTransitionMatrix2&) = default;
};

/// 2x2 matrix over F_p[t, 1/t] gluing a rank-two bundle on P^1_{F_p}.
///
/// Gluing convention: a section of E(n) is a pair of column vectors
/// f in F_p[t]^2 (chart t) and g in F_p[1/t]^2 (chart 1/t) with
/// g = t^{-n} M f. Under this convention diag(t^k1, t^k2) glues
/// O(-k1) + O(-k2); column operations over F_p[t] and row operations over
/// F_p[1/t] leave the bundle unchanged.
class TransitionMatrix2 {
 public:
  using Entries = std::array<std::array<LaurentPoly, 2>, 2>;

  /// Throws std::domain_error if the entries do not share one prime modulus.
  explicit TransitionMatrix2(Entries entries);
  static TransitionMatrix2 identity(std::uint32_t p);
  static TransitionMatrix2 diagonal(std::uint32_t p, std::int64_t k1, std::int64_t k2);

  std::uint32_t modulus() const { return entries_[0][0].modulus(); }
  const LaurentPoly& at(int r, int c) const { return entries_[r][c]; }
  const Entries& entries() const { return entries_; }

  LaurentPoly determinant() const;
  /// Largest t-exponent over the nonzero entries.
  std::int64_t max_exponent() const;

  friend TransitionMatrix2 operator*(const TransitionMatrix2& a, const TransitionMatrix2& b);
  std::string to_string() const;
  friend bool operator==(const TransitionMatrix2&, const TransitionMatrix2&) = default;

 private:
  Entries entries_;
};

struct DetUnit {
  std::uint32_t c = 1;
  std::int64_t k = 0;
  friend bool operator==(const DetUnit&, const DetUnit&) = default;
};

/// [[t^2, p t], [0, 1]]: over F_p it is diag(t^2, 1); over F_q, q != p, it
/// is equivalent to diag(t, t).
IntegerTransitionMatrix2 roberts_matrix(std::uint64_t p);
IntegerTransitionMatrix2 integer_identity();

/// Entrywise reduction mod q. Throws DegenerateMatrixError if the reduced
/// determinant is not a unit, std::domain_error if q is not a usable prime.
TransitionMatrix2 reduce_mod(const IntegerTransitionMatrix2& m, std::uint64_t q);

/// det(M) = c t^k. Throws DegenerateMatrixError otherwise.
DetUnit det_unit(const TransitionMatrix2& m);

/// dim_{F_p} H^0(E(twist)) for the bundle glued by M.
std::int64_t h0_dim(const TransitionMatrix2& m, std::int64_t twist);

/// Splitting type (d1, d2) of the bundle glued by M, read off the profile
/// n -> h0_dim(M, n).
SplittingType splitting_type(const TransitionMatrix2& m);

namespace serial {
/// h0_dim over the single-threaded elimination.
std::int64_t h0_dim(const TransitionMatrix2& m, std::int64_t twist);
}  // namespace serial

/// Parses "t^2, 2*t; 0, 1": two rows separated by ';', entries by ','.
/// Entries are sums of terms c, c*t, c*t^e, t^e with integer c and e
/// (e may be negative, written t^-1 or t^(-1)).
IntegerTransitionMatrix2 parse_integer_matrix(std::string_view text);

}  // namespace arakelov
