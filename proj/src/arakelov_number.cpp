#include "arakelov/arakelov_number.hpp"

#include <algorithm>
#include <stdexcept>

#include "arakelov/primes.hpp"

namespace arakelov {

ArakelovNumber::ArakelovNumber(Rational rational) : rational_(std::move(rational)) {}

ArakelovNumber ArakelovNumber::zeta_prime(Rational coeff) {
  ArakelovNumber x;
  x.zeta_ = std::move(coeff);
  return x;
}

ArakelovNumber ArakelovNumber::log_prime(std::uint64_t p, Rational coeff) {
  if (!is_prime(p)) throw std::domain_error("log_prime: " + std::to_string(p) + " is not prime");
  ArakelovNumber x;
  if (!coeff.is_zero()) x.logs_.emplace(p, std::move(coeff));
  return x;
}

Rational ArakelovNumber::log_coeff(std::uint64_t p) const {
  const auto it = logs_.find(p);
  return it == logs_.end() ? Rational{} : it->second;
}

ArakelovNumber ArakelovNumber::operator-() const {
  ArakelovNumber x = *this;
  x *= Rational(-1);
  return x;
}

ArakelovNumber& ArakelovNumber::operator+=(const ArakelovNumber& o) {
  rational_ += o.rational_;
  zeta_ += o.zeta_;
  for (const auto& [p, c] : o.logs_) {
    auto [it, inserted] = logs_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) logs_.erase(it);
    }
  }
  return *this;
}

ArakelovNumber& ArakelovNumber::operator-=(const ArakelovNumber& o) { return *this += -o; }

ArakelovNumber& ArakelovNumber::operator*=(const Rational& s) {
  if (s.is_zero()) {
    *this = ArakelovNumber{};
    return *this;
  }
  rational_ *= s;
  zeta_ *= s;
  for (auto& [p, c] : logs_) c *= s;
  return *this;
}

namespace {

// Appends "± |c| body" with a unit coefficient elided.
void append_term(std::string& out, const Rational& c, const std::string& body) {
  const bool negative = c.sign() < 0;
  const Rational mag = negative ? -c : c;
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (body.empty()) {
    out += mag.to_string();
  } else {
    if (mag != Rational(1)) out += mag.to_string() + " ";
    out += body;
  }
}

}  // namespace

std::string ArakelovNumber::to_string() const {
  std::string out;
  if (!rational_.is_zero()) append_term(out, rational_, "");
  for (const auto& [p, c] : logs_) append_term(out, c, "log " + std::to_string(p));
  if (!zeta_.is_zero()) append_term(out, zeta_, "zeta'(-1)");
  return out.empty() ? "0" : out;
}

ArakelovNumber log_of_positive_integer(const mpz_class& n) {
  if (n <= 0) throw std::domain_error("log_of_positive_integer: n must be >= 1, got " + n.get_str());
  ArakelovNumber x;
  for (const auto& [p, e] : factorize(n)) x += ArakelovNumber::log_prime(p, Rational(static_cast<std::int64_t>(e)));
  return x;
}

ArakelovNumber log_of_positive_integer(std::int64_t n) {
  if (n <= 0) throw std::domain_error("log_of_positive_integer: n must be >= 1, got " + std::to_string(n));
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(n));
  return log_of_positive_integer(z);
}

ArakelovNumber log_of_positive_rational(const Rational& q) {
  if (q.sign() <= 0) throw std::domain_error("log_of_positive_rational: q must be > 0, got " + q.to_string());
  return log_of_positive_integer(q.numerator()) - log_of_positive_integer(q.denominator());
}

const Real& zeta_prime_neg1_constant() {
  static const Real value("-0.165421143700450929213919660242780642764036380335201783666522");
  return value;
}

Real numeric_value(const ArakelovNumber& x, int precision) {
  if (precision < 1) throw std::domain_error("numeric_value: precision must be >= 1");
  // Real carries ~50 digits, so every precision up to kMaxOutputPrecision is
  // served by the same evaluation.
  const auto to_real = [](const Rational& q) {
    return Real(q.numerator().get_str()) / Real(q.denominator().get_str());
  };
  Real sum = to_real(x.rational_part());
  sum += to_real(x.zeta_coeff()) * zeta_prime_neg1_constant();
  for (const auto& [p, c] : x.log_terms()) sum += to_real(c) * boost::multiprecision::log(Real(p));
  return sum;
}

ArakelovNumber r_genus_degree_term(std::int64_t rank) {
  if (rank <= 0) throw std::domain_error("r_genus_degree_term: rank must be >= 1");
  // 2 zeta'(-1) + zeta(-1) with zeta(-1) = -1/12.
  return (ArakelovNumber(Rational(-1, 12)) + ArakelovNumber::zeta_prime(2)) * Rational(rank);
}

nlohmann::json to_json(const ArakelovNumber& x, int precision) {
  nlohmann::json logs = nlohmann::json::object();
  for (const auto& [p, c] : x.log_terms()) logs[std::to_string(p)] = c.to_string();
  const int decimals = std::clamp(precision, 1, kMaxOutputPrecision);
  return {{"rational", x.rational_part().to_string()},
          {"zeta1", x.zeta_coeff().to_string()},
          {"logs", logs},
          {"numeric", format_decimal(numeric_value(x, decimals), decimals)}};
}

ArakelovNumber arakelov_number_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("ArakelovNumber JSON must be an object");
  const auto field = [&](const char* key) -> Rational {
    if (!j.contains(key)) return Rational{};
    if (!j.at(key).is_string())
      throw std::invalid_argument(std::string("ArakelovNumber JSON: '") + key + "' must be a string");
    return Rational::parse(j.at(key).get<std::string>());
  };
  ArakelovNumber x(field("rational"));
  x += ArakelovNumber::zeta_prime(field("zeta1"));
  if (j.contains("logs")) {
    const auto& logs = j.at("logs");
    if (!logs.is_object()) throw std::invalid_argument("ArakelovNumber JSON: 'logs' must be an object");
    for (const auto& [key, value] : logs.items()) {
      if (!value.is_string() || key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("ArakelovNumber JSON: bad log entry '" + key + "'");
      x += ArakelovNumber::log_prime(std::stoull(key), Rational::parse(value.get<std::string>()));
    }
  }
  return x;
}

}  // namespace arakelov
