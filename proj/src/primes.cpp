#include "arakelov/primes.hpp"

#include <stdexcept>
#include <vector>

namespace arakelov {

std::span<const std::uint32_t> sieve_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kSieveLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kSieveLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kSieveLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : sieve_primes()) {
    if (p * p > n) return true;
    if (n % p == 0) return n == p;
  }
  // n > kSieveLimit^2; fall back to GMP's probabilistic test (25 rounds).
  mpz_class z;
  mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 25) != 0;
}

std::map<std::uint64_t, std::uint64_t> factorize(const mpz_class& n) {
  if (n <= 0) throw std::domain_error("factorize: input must be positive, got " + n.get_str());
  std::map<std::uint64_t, std::uint64_t> out;
  mpz_class rest = n;
  for (std::uint32_t p : sieve_primes()) {
    if (rest == 1) break;
    if (mpz_class(p) * p > rest) {
      // rest is prime now.
      if (rest > kSieveLimit) break;
      out[rest.get_ui()] += 1;
      rest = 1;
      break;
    }
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      out[p] += 1;
    }
  }
  if (rest != 1)
    throw std::domain_error("factorize: " + n.get_str() + " has a prime factor above " +
                            std::to_string(kSieveLimit));
  return out;
}

}  // namespace arakelov
