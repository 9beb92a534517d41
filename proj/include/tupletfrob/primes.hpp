#pragma once

#include <cstdint>
#include <vector>

namespace tupletfrob {

/// Deterministic Miller-Rabin over the whole 64-bit range (bases 2..37).
bool is_prime(std::uint64_t n) noexcept;

/// Primes <= limit by a plain sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Primality flags for [lo, hi]: flags[i] != 0 iff lo + i is prime.
/// `base_primes` must contain every prime <= sqrt(hi).
std::vector<std::uint8_t> sieve_interval(std::uint64_t lo, std::uint64_t hi,
                                         const std::vector<std::uint64_t>& base_primes);

std::uint64_t isqrt(std::uint64_t n) noexcept;

}  // namespace tupletfrob
