#include "arakelov/arakelov_invariants.hpp"

#include <stdexcept>

namespace arakelov {

namespace {

mpz_class factorial(std::int64_t n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Rational square(std::int64_t x) { return Rational(x) * Rational(x); }

// prod_{i=0}^{a} i!(a-i)!/(a+1)!, accumulated directly from factorials
// (independent of the Gram matrix code path).
Rational torsion_product(std::int64_t a) {
  if (a < 0) return Rational(1);
  mpz_class num = 1;
  for (std::int64_t i = 0; i <= a; ++i) num *= factorial(i) * factorial(a - i);
  mpz_class den;
  mpz_pow_ui(den.get_mpz_t(), factorial(a + 1).get_mpz_t(), static_cast<unsigned long>(a + 1));
  return Rational(num, den);
}

}  // namespace

Rational GramMatrix::determinant() const {
  Rational det(1);
  for (const auto& d : diagonal) det *= d;
  return det;
}

Rational intersection_c1c1(std::int64_t m, std::int64_t n) {
  // f_*(c1(O(1))^2) = 1/2, extended bilinearly.
  return Rational(m) * Rational(n) * Rational(1, 2);
}

ChernData chern_classes(const Triple& t) {
  return {t.a() + t.b(), ArakelovNumber(intersection_c1c1(t.a(), t.b())) + t.z().h0_log_order()};
}

ArakelovNumber discriminant(const Triple& t) {
  const ChernData c = chern_classes(t);
  const ArakelovNumber via_chern = c.c2_degree * Rational(4) - ArakelovNumber(intersection_c1c1(c.c1_twist, c.c1_twist));
  const ArakelovNumber closed_form =
      t.z().h0_log_order() * Rational(4) - ArakelovNumber(square(t.a() - t.b()) * Rational(1, 2));
  if (via_chern != closed_form)
    throw std::logic_error("discriminant: routes disagree for " + t.to_string() + ": " + via_chern.to_string() +
                           " vs " + closed_form.to_string());
  return closed_form;
}

ArakelovNumber chi_Q_line(std::int64_t a) {
  return ArakelovNumber(square(a + 1) * Rational(1, 4)) + ArakelovNumber::zeta_prime(-2);
}

ArakelovNumber chi_Q_rank2(const Triple& t) {
  return ArakelovNumber((square(t.a() + 1) + square(t.b() + 1)) * Rational(1, 4)) - t.z().h0_log_order() +
         ArakelovNumber::zeta_prime(-4);
}

ArakelovNumber ahrr_rhs(const ChernData& chern, std::int64_t rank) {
  if (rank != 1 && rank != 2) throw std::domain_error("ahrr_rhs: rank must be 1 or 2, got " + std::to_string(rank));
  const std::int64_t c1 = chern.c1_twist;
  ArakelovNumber pushforward = ArakelovNumber(intersection_c1c1(c1, c1) * Rational(1, 2)) - chern.c2_degree +
                               ArakelovNumber(intersection_c1c1(c1, 1));
  // Todd part: rank/12 c1(T)^2 with T = O(2), i.e. rank/3 c1(O(1))^2.
  const ArakelovNumber todd(Rational(rank, 3) * intersection_c1c1(1, 1));
  return pushforward + todd - r_genus_degree_term(rank);
}

GramMatrix gram_matrix_h0(std::int64_t a) {
  if (a < 0) throw std::domain_error("gram_matrix_h0: a must be >= 0, got " + std::to_string(a));
  GramMatrix g;
  g.dimension = a + 1;
  const mpz_class top = factorial(a + 1);
  g.diagonal.reserve(static_cast<std::size_t>(a + 1));
  for (std::int64_t i = 0; i <= a; ++i) g.diagonal.emplace_back(factorial(i) * factorial(a - i), top);
  return g;
}

ArakelovNumber degree_h0_line(std::int64_t a) {
  if (a < 0) throw std::domain_error("degree_h0_line: a must be >= 0, got " + std::to_string(a));
  // The monomials form a Z-basis, so the cokernel term vanishes.
  return hermitian_module_degree(ArakelovNumber{}, gram_matrix_h0(a).determinant());
}

ArakelovNumber degree_h1_line(std::int64_t a) {
  if (a >= 0) throw std::domain_error("degree_h1_line: a must be <= -1, got " + std::to_string(a));
  const std::int64_t m = -a;
  if (m == 1) return {};
  return -degree_h0_line(m - 2);
}

ArakelovNumber analytic_torsion(std::int64_t a) {
  const ArakelovNumber zeta_part = ArakelovNumber::zeta_prime(-4);
  if (a >= 0)
    return ArakelovNumber(square(a + 1) * Rational(1, 2)) + log_of_positive_rational(torsion_product(a)) + zeta_part;
  const std::int64_t m = -a;
  return ArakelovNumber(square(1 - m) * Rational(1, 2)) + log_of_positive_rational(torsion_product(m - 2)) +
         zeta_part;
}

ArakelovNumber chi_L2_line(std::int64_t a) {
  const ArakelovNumber h0 = a >= 0 ? degree_h0_line(a) : ArakelovNumber{};
  const ArakelovNumber h1 = a <= -1 ? degree_h1_line(a) : ArakelovNumber{};
  return h0 - h1;
}

Real h1_torsion_from_volumes(const ArakelovNumber& chi_q, const Real& log_vol0, const Real& log_vol1,
                             const Real& torsion_t, int precision) {
  return -numeric_value(chi_q, precision) + torsion_t / 2 - log_vol0 + log_vol1;
}

ArakelovNumber hermitian_module_degree(const ArakelovNumber& log_cokernel_order, const Rational& gram_det) {
  if (gram_det.sign() <= 0)
    throw std::domain_error("hermitian_module_degree: Gram determinant must be positive, got " + gram_det.to_string());
  return log_cokernel_order - log_of_positive_rational(gram_det) * Rational(1, 2);
}

}  // namespace arakelov
