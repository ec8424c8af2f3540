#pragma once

#include <cstdint>
#include <map>
#include <span>

#include <gmpxx.h>

namespace arakelov {

/// Upper bound of the prime sieve; factorization rejects any prime factor
/// above it.
inline constexpr std::uint32_t kSieveLimit = 1'000'000;

/// All primes <= kSieveLimit, ascending. Built once, read-only afterwards.
std::span<const std::uint32_t> sieve_primes();

bool is_prime(std::uint64_t n);

/// Prime factorization by trial division against the sieve. Throws
/// std::domain_error for n <= 0 or when n has a prime factor above
/// kSieveLimit.
std::map<std::uint64_t, std::uint64_t> factorize(const mpz_class& n);

}  // namespace arakelov
