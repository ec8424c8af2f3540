#pragma once

#include <cstdint>
#include <vector>

#include "arakelov/arakelov_number.hpp"
#include "arakelov/real.hpp"
#include "arakelov/sheaf_model.hpp"

namespace arakelov {

/// Arithmetic Chern data of a rank-two bundle with the orthogonal
/// Fubini-Study metric. c1 is the class of O(c1_twist); c2 is carried by its
/// arithmetic degree.
struct ChernData {
  std::int64_t c1_twist = 0;
  ArakelovNumber c2_degree;
  friend bool operator==(const ChernData&, const ChernData&) = default;
};

/// Gram matrix of the monomial basis x0^(a-i) x1^i of H^0(O(a)) under the
/// L^2 metric. It is diagonal, so only the diagonal is stored.
struct GramMatrix {
  std::int64_t dimension = 0;
  std::vector<Rational> diagonal;
  Rational determinant() const;
};

/// Degree of f_*(c1(O(m)) c1(O(n))), i.e. m n / 2.
Rational intersection_c1c1(std::int64_t m, std::int64_t n);

ChernData chern_classes(const Triple& t);

/// 4 c2 - c1^2, computed from the Chern data and from the closed form
/// 4 log #H^0(Z,O_Z) - (a-b)^2/2. Throws std::logic_error if the two
/// disagree.
ArakelovNumber discriminant(const Triple& t);

/// Quillen Euler characteristic of O(a): (a+1)^2/4 - 2 zeta'(-1).
ArakelovNumber chi_Q_line(std::int64_t a);

/// Quillen Euler characteristic of a rank-two bundle, closed form
/// (a+1)^2/4 + (b+1)^2/4 - log #H^0(Z,O_Z) - 4 zeta'(-1).
ArakelovNumber chi_Q_rank2(const Triple& t);

/// Right-hand side of the arithmetic Hirzebruch-Riemann-Roch formula on
/// P^1_Z, assembled from the Chern data:
///   f_*(c1^2/2 - c2 + c1 c1(O(1))) + rank/3 f_*(c1(O(1))^2) - rank(2 zeta'(-1) + zeta(-1)).
/// Throws std::domain_error unless rank is 1 or 2.
ArakelovNumber ahrr_rhs(const ChernData& chern, std::int64_t rank);

/// Diagonal entries i!(a-i)!/(a+1)!. Throws std::domain_error for a < 0.
GramMatrix gram_matrix_h0(std::int64_t a);

/// Arakelov degree of (H^0(O(a)), L^2) = -1/2 log det Gram.
ArakelovNumber degree_h0_line(std::int64_t a);

/// Arakelov degree of (H^1(O(a)), L^2) for a <= -1, via Serre duality.
ArakelovNumber degree_h1_line(std::int64_t a);

/// Ray-Singer analytic torsion of O(a) with Fubini-Study metrics, using the
/// sign convention T(E) = sum_q (-1)^q q zeta_q'(0). (Weng's computation
/// differs by an overall sign.)
ArakelovNumber analytic_torsion(std::int64_t a);

/// deg H^0 - deg H^1 with L^2 metrics.
ArakelovNumber chi_L2_line(std::int64_t a);

/// Solves chi_Q = chi_L2 + T/2 for log #H^1_tors given the covolume logs of
/// H^0 and H^1 (H^0 is torsion-free):
///   log #H^1_tors = -chi_Q + T/2 - log_vol0 + log_vol1.
Real h1_torsion_from_volumes(const ArakelovNumber& chi_q, const Real& log_vol0, const Real& log_vol1,
                             const Real& torsion_t, int precision);

/// log #(F / <s_i>) - 1/2 log det h(s_i, s_j). Throws std::domain_error when
/// gram_det <= 0.
ArakelovNumber hermitian_module_degree(const ArakelovNumber& log_cokernel_order, const Rational& gram_det);

}  // namespace arakelov
