#include "arakelov/sheaf_model.hpp"

#include <algorithm>
#include <set>

#include "arakelov/primes.hpp"
#include "text_cursor.hpp"

namespace arakelov {

LciComponent LciComponent::make(std::uint64_t p, std::int64_t fiber_degree, std::int64_t length) {
  if (!is_prime(p)) throw std::domain_error("lci component: " + std::to_string(p) + " is not prime");
  if (fiber_degree < 1) throw std::domain_error("lci component: fiber degree n must be >= 1");
  if (length < fiber_degree)
    throw std::domain_error("lci component: length " + std::to_string(length) +
                            " is below fiber degree " + std::to_string(fiber_degree));
  return {p, fiber_degree, length};
}

Lci::Lci(std::vector<LciComponent> components) : components_(std::move(components)) {
  for (const auto& c : components_) LciComponent::make(c.p, c.fiber_degree, c.length);
  std::sort(components_.begin(), components_.end());
}

std::vector<std::uint64_t> Lci::support() const {
  std::set<std::uint64_t> primes;
  for (const auto& c : components_) primes.insert(c.p);
  return {primes.begin(), primes.end()};
}

bool Lci::supported_at(std::uint64_t p) const {
  return std::any_of(components_.begin(), components_.end(),
                     [p](const LciComponent& c) { return c.p == p; });
}

std::int64_t Lci::fiber_degree(std::uint64_t p) const {
  std::int64_t n = 0;
  for (const auto& c : components_)
    if (c.p == p) n += c.fiber_degree;
  return n;
}

std::optional<std::int64_t> Lci::max_fiber_degree() const {
  std::optional<std::int64_t> best;
  for (std::uint64_t p : support()) best = std::max(best.value_or(0), fiber_degree(p));
  return best;
}

ArakelovNumber Lci::h0_log_order() const {
  ArakelovNumber x;
  for (const auto& c : components_) x += ArakelovNumber::log_prime(c.p, Rational(c.length));
  return x;
}

Lci Lci::with(const LciComponent& c) const {
  auto components = components_;
  components.push_back(c);
  return Lci(std::move(components));
}

std::string Lci::to_string() const {
  std::string out;
  for (const auto& c : components_) {
    if (!out.empty()) out += ",";
    out += std::to_string(c.p) + ":" + std::to_string(c.fiber_degree);
    if (c.length != c.fiber_degree) out += ":" + std::to_string(c.length);
  }
  return out;
}

Triple::Triple(std::int64_t a, std::int64_t b, Lci z)
    : a_(std::max(a, b)), b_(std::min(a, b)), z_(std::move(z)) {}

std::string Triple::to_string() const {
  const std::string head = std::to_string(a_) + "," + std::to_string(b_);
  return z_.empty() ? head : head + ";" + z_.to_string();
}

H1Torsion H1Torsion::exact(ArakelovNumber log_order) {
  if (log_order.is_zero()) return zero();
  return {Kind::kExactLogOrder, std::move(log_order)};
}

std::string H1Torsion::to_string() const {
  switch (kind) {
    case Kind::kZero:
      return "0";
    case Kind::kExactLogOrder:
      return "exact, log order = " + log_order.to_string();
    case Kind::kUnknownDividing:
      return "unknown, log order <= " + log_order.to_string() + " (divides)";
  }
  return "?";
}

CohomologyProfile line_cohomology(std::int64_t a) {
  return {a >= 0 ? a + 1 : 0, a <= -2 ? -a - 1 : 0, H1Torsion::zero()};
}

CohomologyProfile ideal_cohomology(const Lci& z, std::int64_t b) {
  CohomologyProfile out;
  out.h0_rank = b >= 0 ? b + 1 : 0;
  if (b <= -1) {
    // H^1(I_Z(b)) = H^0(Z, O_Z) + H^1(O(b)).
    out.h1_rank = -b - 1;
    out.h1_torsion = H1Torsion::exact(z.h0_log_order());
    return out;
  }
  const auto max_n = z.max_fiber_degree();
  if (!max_n || b >= *max_n - 1) return out;
  // H^1 is a torsion quotient of H^0(Z, O_Z); its order is not pinned down.
  out.h1_torsion = H1Torsion::dividing(z.h0_log_order());
  return out;
}

CohomologyRanks rank2_cohomology_ranks(const Triple& t, std::int64_t twist) {
  const auto la = line_cohomology(t.a() + twist);
  const auto lb = line_cohomology(t.b() + twist);
  return {la.h0_rank + lb.h0_rank, la.h1_rank + lb.h1_rank};
}

SplittingType fiber_splitting(const Triple& t, Fiber fiber) {
  if (!fiber || !t.z().supported_at(*fiber)) return {t.a(), t.b()};
  const std::int64_t n = t.z().fiber_degree(*fiber);
  return SplittingType::sorted(t.a() + n, t.b() - n);
}

bool is_decomposable(const Triple& t) { return t.z().empty(); }

bool has_no_cohomology(const Triple& t) { return t.a() == -1 && t.b() == -1 && t.z().empty(); }

namespace {

Lci parse_lci_at(detail::TextCursor& cur) {
  std::vector<LciComponent> components;
  if (cur.at_end() || cur.peek() == ';') return Lci{};
  do {
    const std::size_t start = cur.pos();
    const std::uint64_t p = cur.unsigned_integer();
    cur.expect(':');
    const std::int64_t n = cur.signed_integer();
    std::int64_t len = n;
    if (cur.accept(':')) len = cur.signed_integer();
    try {
      components.push_back(LciComponent::make(p, n, len));
    } catch (const std::domain_error& e) {
      throw std::domain_error(std::string(e.what()) + " (component at position " +
                              std::to_string(start) + ")");
    }
  } while (cur.accept(','));
  return Lci(std::move(components));
}

}  // namespace

Lci parse_lci(std::string_view text) {
  detail::TextCursor cur(text);
  Lci z = parse_lci_at(cur);
  if (!cur.at_end()) cur.fail("unexpected character");
  return z;
}

Triple parse_triple(std::string_view text) {
  detail::TextCursor cur(text);
  const std::int64_t a = cur.signed_integer();
  cur.expect(',');
  const std::int64_t b = cur.signed_integer();
  Lci z;
  if (cur.accept(';')) z = parse_lci_at(cur);
  if (!cur.at_end()) cur.fail("unexpected character");
  return Triple(a, b, std::move(z));
}

}  // namespace arakelov
