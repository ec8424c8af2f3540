#include "arakelov/birkhoff.hpp"

#include <algorithm>
#include <cstdlib>

#include "arakelov/fp_linalg.hpp"
#include "arakelov/primes.hpp"
#include "text_cursor.hpp"

namespace arakelov {

namespace {

std::string term_string(bool first, bool negative, const std::string& mag, std::int64_t e) {
  std::string out = first ? (negative ? "-" : "") : (negative ? " - " : " + ");
  if (e == 0) return out + mag;
  if (mag != "1") out += mag + "*";
  out += "t";
  if (e != 1) out += "^" + std::to_string(e);
  return out;
}

std::uint32_t checked_modulus(std::uint64_t q) {
  if (q >= (1ULL << 31) || !is_prime(q))
    throw std::domain_error("modulus " + std::to_string(q) + " is not a prime below 2^31");
  return static_cast<std::uint32_t>(q);
}

}  // namespace

// ---- IntLaurentPoly --------------------------------------------------------

IntLaurentPoly IntLaurentPoly::monomial(std::int64_t coeff, std::int64_t exponent) {
  IntLaurentPoly f;
  if (coeff != 0) f.coeffs_[exponent] = coeff;
  return f;
}

IntLaurentPoly& IntLaurentPoly::operator+=(const IntLaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) {
    const std::int64_t v = (coeffs_[e] += c);
    if (v == 0) coeffs_.erase(e);
  }
  return *this;
}

std::string IntLaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto [e, c] = *it;
    out += term_string(out.empty(), c < 0, std::to_string(c < 0 ? -c : c), e);
  }
  return out;
}

// ---- LaurentPoly -----------------------------------------------------------

LaurentPoly::LaurentPoly(std::uint32_t p) : p_(p) {
  if (p < 2) throw std::domain_error("LaurentPoly: modulus must be >= 2");
}

LaurentPoly LaurentPoly::monomial(std::uint32_t p, std::int64_t coeff, std::int64_t exponent) {
  LaurentPoly f(p);
  const auto m = static_cast<std::int64_t>(p);
  f.add_term(exponent, static_cast<std::uint64_t>(((coeff % m) + m) % m));
  return f;
}

void LaurentPoly::add_term(std::int64_t exponent, std::uint64_t value) {
  value %= p_;
  if (value == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, static_cast<std::uint32_t>(value));
  if (inserted) return;
  it->second = static_cast<std::uint32_t>((it->second + value) % p_);
  if (it->second == 0) coeffs_.erase(it);
}

std::uint32_t LaurentPoly::coeff(std::int64_t exponent) const {
  const auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

std::int64_t LaurentPoly::min_exponent() const {
  if (coeffs_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return coeffs_.begin()->first;
}

std::int64_t LaurentPoly::max_exponent() const {
  if (coeffs_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return coeffs_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.p_ != p_) throw std::domain_error("LaurentPoly: modulus mismatch");
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.p_ != p_) throw std::domain_error("LaurentPoly: modulus mismatch");
  for (const auto& [e, c] : o.coeffs_) add_term(e, p_ - c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.p_ != b.p_) throw std::domain_error("LaurentPoly: modulus mismatch");
  LaurentPoly out(a.p_);
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, std::uint64_t{ca} * cb);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    out += term_string(out.empty(), false, std::to_string(it->second), it->first);
  return out;
}

// ---- matrices --------------------------------------------------------------

std::string IntegerTransitionMatrix2::to_string() const {
  return entries[0][0].to_string() + ", " + entries[0][1].to_string() + "; " +
         entries[1][0].to_string() + ", " + entries[1][1].to_string();
}

TransitionMatrix2::TransitionMatrix2(Entries entries) : entries_(std::move(entries)) {
  const std::uint32_t p = entries_[0][0].modulus();
  for (const auto& row : entries_)
    for (const auto& e : row)
      if (e.modulus() != p) throw std::domain_error("TransitionMatrix2: entries over different fields");
  checked_modulus(p);
}

TransitionMatrix2 TransitionMatrix2::identity(std::uint32_t p) { return diagonal(p, 0, 0); }

TransitionMatrix2 TransitionMatrix2::diagonal(std::uint32_t p, std::int64_t k1, std::int64_t k2) {
  return TransitionMatrix2({{{LaurentPoly::monomial(p, 1, k1), LaurentPoly(p)},
                             {LaurentPoly(p), LaurentPoly::monomial(p, 1, k2)}}});
}

LaurentPoly TransitionMatrix2::determinant() const {
  return entries_[0][0] * entries_[1][1] - entries_[0][1] * entries_[1][0];
}

std::int64_t TransitionMatrix2::max_exponent() const {
  bool any = false;
  std::int64_t best = 0;
  for (const auto& row : entries_)
    for (const auto& e : row)
      if (!e.is_zero()) {
        best = any ? std::max(best, e.max_exponent()) : e.max_exponent();
        any = true;
      }
  if (!any) throw DegenerateMatrixError("zero transition matrix");
  return best;
}

TransitionMatrix2 operator*(const TransitionMatrix2& a, const TransitionMatrix2& b) {
  const std::uint32_t p = a.modulus();
  if (b.modulus() != p) throw std::domain_error("TransitionMatrix2: modulus mismatch");
  TransitionMatrix2::Entries out{{{LaurentPoly(p), LaurentPoly(p)}, {LaurentPoly(p), LaurentPoly(p)}}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
  return TransitionMatrix2(std::move(out));
}

std::string TransitionMatrix2::to_string() const {
  return entries_[0][0].to_string() + ", " + entries_[0][1].to_string() + "; " +
         entries_[1][0].to_string() + ", " + entries_[1][1].to_string() + " (mod " +
         std::to_string(modulus()) + ")";
}

IntegerTransitionMatrix2 roberts_matrix(std::uint64_t p) {
  if (!is_prime(p)) throw std::domain_error("roberts_matrix: " + std::to_string(p) + " is not prime");
  return {{{{IntLaurentPoly::monomial(1, 2), IntLaurentPoly::monomial(static_cast<std::int64_t>(p), 1)},
            {IntLaurentPoly{}, IntLaurentPoly::monomial(1, 0)}}}};
}

IntegerTransitionMatrix2 integer_identity() {
  return {{{{IntLaurentPoly::monomial(1, 0), IntLaurentPoly{}},
            {IntLaurentPoly{}, IntLaurentPoly::monomial(1, 0)}}}};
}

TransitionMatrix2 reduce_mod(const IntegerTransitionMatrix2& m, std::uint64_t q) {
  const std::uint32_t p = checked_modulus(q);
  TransitionMatrix2::Entries out{{{LaurentPoly(p), LaurentPoly(p)}, {LaurentPoly(p), LaurentPoly(p)}}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (const auto& [e, c] : m.entries[i][j].coefficients()) out[i][j] += LaurentPoly::monomial(p, c, e);
  TransitionMatrix2 reduced(std::move(out));
  det_unit(reduced);
  return reduced;
}

DetUnit det_unit(const TransitionMatrix2& m) {
  const LaurentPoly det = m.determinant();
  if (!det.is_monomial())
    throw DegenerateMatrixError("determinant " + det.to_string() + " is not a unit c*t^k over F_" +
                                std::to_string(m.modulus()));
  const auto& [k, c] = *det.coefficients().begin();
  return {c, k};
}

namespace {

// Sections of E(n): f in F_p[t]^2 with t^{-n} M f in F_p[1/t]^2. Since
// f = t^n M^{-1} g and adj(M) has exponents <= max_exponent, deg f is at most
// n - k + max_exponent. The unknowns are the coefficients of f up to that
// degree; every coefficient of t^{-n} M f at a positive power of t must
// vanish.
template <class RankFn>
std::int64_t h0_dim_impl(const TransitionMatrix2& m, std::int64_t twist, RankFn rank) {
  const DetUnit det = det_unit(m);
  const std::int64_t emax = m.max_exponent();
  const std::int64_t deg_bound = twist - det.k + emax;
  if (deg_bound < 0) return 0;
  const auto width = static_cast<std::size_t>(deg_bound + 1);
  const std::int64_t top = emax + deg_bound - twist;  // highest power of t after the twist
  if (top <= 0) return static_cast<std::int64_t>(2 * width);

  const auto powers = static_cast<std::size_t>(top);
  FpMatrix system(2 * powers, 2 * width, m.modulus());
  for (int r = 0; r < 2; ++r)
    for (int j = 0; j < 2; ++j)
      for (const auto& [e, c] : m.at(r, j).coefficients())
        for (std::size_t i = 0; i < width; ++i) {
          const std::int64_t power = e + static_cast<std::int64_t>(i) - twist;
          if (power <= 0) continue;
          system.at(static_cast<std::size_t>(r) * powers + static_cast<std::size_t>(power - 1),
                    static_cast<std::size_t>(j) * width + i) = c;
        }
  return static_cast<std::int64_t>(2 * width - rank(std::move(system)));
}

}  // namespace

std::int64_t h0_dim(const TransitionMatrix2& m, std::int64_t twist) {
  return h0_dim_impl(m, twist, [](FpMatrix s) { return rank_mod_p(std::move(s)); });
}

namespace serial {
std::int64_t h0_dim(const TransitionMatrix2& m, std::int64_t twist) {
  return h0_dim_impl(m, twist, [](FpMatrix s) { return serial::rank_mod_p(std::move(s)); });
}
}  // namespace serial

SplittingType splitting_type(const TransitionMatrix2& m) {
  const DetUnit det = det_unit(m);
  const std::int64_t emax = m.max_exponent();
  // A constant f gives two independent sections of E(emax), so both
  // splitting degrees are >= -emax; with d1 + d2 = -k this pins
  // n0 = -d1 to [k - emax, emax].
  const std::int64_t lo = det.k - emax;
  const std::int64_t hi = emax;
  for (std::int64_t n = lo; n <= hi; ++n) {
    if (h0_dim(m, n) == 0) continue;
    const SplittingType s{-n, -det.k + n};
    if (s.d1 < s.d2) throw std::logic_error("splitting_type: inconsistent section profile");
    return s;
  }
  throw std::logic_error("splitting_type: no sections found up to twist " + std::to_string(hi));
}

// ---- parsing ---------------------------------------------------------------

namespace {

std::int64_t parse_exponent(detail::TextCursor& cur) {
  if (!cur.accept('^')) return 1;
  if (cur.accept('(')) {
    const std::int64_t e = cur.signed_integer();
    cur.expect(')');
    return e;
  }
  return cur.signed_integer();
}

IntLaurentPoly parse_poly(detail::TextCursor& cur) {
  IntLaurentPoly f;
  bool first = true;
  for (;;) {
    std::int64_t sign = 1;
    if (cur.accept('-')) {
      sign = -1;
    } else if (!cur.accept('+') && !first) {
      break;
    }
    first = false;
    std::int64_t coeff = 1;
    std::int64_t exponent = 0;
    if (cur.at_digit()) {
      coeff = cur.signed_integer();
      if (cur.accept('*')) {
        if (!cur.accept('t')) cur.fail("expected 't' after '*'");
        exponent = parse_exponent(cur);
      } else if (cur.accept('t')) {
        exponent = parse_exponent(cur);
      }
    } else if (cur.accept('t')) {
      exponent = parse_exponent(cur);
    } else {
      cur.fail("expected a coefficient or 't'");
    }
    f += IntLaurentPoly::monomial(sign * coeff, exponent);
  }
  return f;
}

}  // namespace

IntegerTransitionMatrix2 parse_integer_matrix(std::string_view text) {
  detail::TextCursor cur(text);
  IntegerTransitionMatrix2 m;
  for (int r = 0; r < 2; ++r) {
    if (r == 1) cur.expect(';');
    m.entries[r][0] = parse_poly(cur);
    cur.expect(',');
    m.entries[r][1] = parse_poly(cur);
  }
  if (!cur.at_end()) cur.fail("unexpected character");
  return m;
}

}  // namespace arakelov
