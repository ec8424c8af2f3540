#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arakelov/arakelov_number.hpp"

namespace arakelov {

/// Syntax error in user-supplied text; `position` is a 0-based offset into
/// the parsed string.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// One piece of a codimension-two lci over the prime p: it contributes
/// `fiber_degree` to n_p and `length` to the p-exponent of #H^0(Z, O_Z).
struct LciComponent {
  std::uint64_t p = 2;
  std::int64_t fiber_degree = 1;
  std::int64_t length = 1;

  /// Validates p prime, 1 <= fiber_degree <= length; throws std::domain_error.
  static LciComponent make(std::uint64_t p, std::int64_t fiber_degree, std::int64_t length);
  static LciComponent make(std::uint64_t p, std::int64_t fiber_degree) {
    return make(p, fiber_degree, fiber_degree);
  }

  friend bool operator==(const LciComponent&, const LciComponent&) = default;
  friend auto operator<=>(const LciComponent&, const LciComponent&) = default;
};

/// Zero-dimensional lci Z, kept as the multiset of its per-prime pieces.
/// Components are stored sorted, so equal multisets compare equal.
class Lci {
 public:
  Lci() = default;
  explicit Lci(std::vector<LciComponent> components);

  const std::vector<LciComponent>& components() const { return components_; }
  bool empty() const { return components_.empty(); }

  /// Primes over which Z has a component, ascending.
  std::vector<std::uint64_t> support() const;
  bool supported_at(std::uint64_t p) const;
  /// n_p; zero off the support.
  std::int64_t fiber_degree(std::uint64_t p) const;
  /// max_p n_p, or nullopt for Z empty (read as -infinity).
  std::optional<std::int64_t> max_fiber_degree() const;
  /// log #H^0(Z, O_Z) = sum over components of length * log p.
  ArakelovNumber h0_log_order() const;

  Lci with(const LciComponent& c) const;

  /// "p:n" / "p:n:len" pieces, comma separated; "" for Z empty.
  std::string to_string() const;

  friend bool operator==(const Lci&, const Lci&) = default;

 private:
  std::vector<LciComponent> components_;
};

/// Classifying datum (a, b, Z) of 0 -> O(a) -> E -> I_Z(b) -> 0, normalized
/// to a >= b on construction.
class Triple {
 public:
  Triple(std::int64_t a, std::int64_t b, Lci z = {});

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  const Lci& z() const { return z_; }

  /// "a,b;Z", or "a,b" for Z empty
  std::string to_string() const;
  friend bool operator==(const Triple&, const Triple&) = default;

 private:
  std::int64_t a_;
  std::int64_t b_;
  Lci z_;
};

/// Torsion status of an H^1 group.
struct H1Torsion {
  enum class Kind { kZero, kExactLogOrder, kUnknownDividing };
  Kind kind = Kind::kZero;
  /// log of the order (exact), or log of a known multiple of it.
  ArakelovNumber log_order;

  static H1Torsion zero() { return {}; }
  /// An exact order of 1 collapses to Zero.
  static H1Torsion exact(ArakelovNumber log_order);
  static H1Torsion dividing(ArakelovNumber log_bound) {
    return {Kind::kUnknownDividing, std::move(log_bound)};
  }
  std::string to_string() const;
  friend bool operator==(const H1Torsion&, const H1Torsion&) = default;
};

struct CohomologyProfile {
  std::int64_t h0_rank = 0;
  std::int64_t h1_rank = 0;
  H1Torsion h1_torsion;
  friend bool operator==(const CohomologyProfile&, const CohomologyProfile&) = default;
};

/// E restricted to a fiber is O(d1) + O(d2), d1 >= d2.
struct SplittingType {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;

  /// Orders the pair so that d1 >= d2.
  static SplittingType sorted(std::int64_t x, std::int64_t y) {
    return x >= y ? SplittingType{x, y} : SplittingType{y, x};
  }
  std::string to_string() const {
    return "(" + std::to_string(d1) + ", " + std::to_string(d2) + ")";
  }
  friend bool operator==(const SplittingType&, const SplittingType&) = default;
  friend std::ostream& operator<<(std::ostream& os, const SplittingType& s) {
    return os << s.to_string();
  }
};

/// A fiber of P^1_Z -> Spec Z: a prime, or nullopt for the generic fiber.
using Fiber = std::optional<std::uint64_t>;
inline constexpr Fiber kGenericFiber = std::nullopt;

CohomologyProfile line_cohomology(std::int64_t a);
CohomologyProfile ideal_cohomology(const Lci& z, std::int64_t b);

struct CohomologyRanks {
  std::int64_t h0_rank = 0;
  std::int64_t h1_rank = 0;
  friend bool operator==(const CohomologyRanks&, const CohomologyRanks&) = default;
};

/// Ranks of H^0, H^1 of E(twist); torsion is not determined by the triple.
CohomologyRanks rank2_cohomology_ranks(const Triple& t, std::int64_t twist);

SplittingType fiber_splitting(const Triple& t, Fiber fiber);
bool is_decomposable(const Triple& t);
bool has_no_cohomology(const Triple& t);

/// Parses "2:1,3:2:3". Throws ParseError with a position on bad syntax and
/// std::domain_error on invalid components (non-prime p, len < n, ...).
Lci parse_lci(std::string_view text);
/// Parses "a,b;Z" (the ";Z" part may be omitted or empty).
Triple parse_triple(std::string_view text);

}  // namespace arakelov
