#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace lacunary {

/// Deterministic primality check for 64-bit integers (Miller-Rabin with a
/// witness set that is exact for the full uint64 range).
bool is_prime(std::uint64_t n);

/// The `count` smallest primes >= min, in increasing order.
std::vector<std::uint64_t> primes_at_least(std::uint64_t min, std::size_t count);

/// Smallest k with 2^k >= n. Exact, from the binary length of n.
/// Rejects n < 1.
unsigned long ceil_log2(const mpz_class& n);

/// Euler's totient. Rejects n = 0.
std::uint64_t euler_phi(std::uint64_t n);

}  // namespace lacunary
