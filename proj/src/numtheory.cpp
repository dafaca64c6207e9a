#include "lacunary/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "lacunary/errors.hpp"

namespace lacunary {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all n < 3.3 * 10^24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i + 1 < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::mutex g_sieve_mutex;
std::vector<std::uint64_t> g_sieved_primes;  // all primes < g_sieve_limit
std::uint64_t g_sieve_limit = 0;

constexpr std::uint64_t kSieveCap = 1ull << 31;

// Caller holds g_sieve_mutex.
void ensure_sieved(std::uint64_t limit) {
  if (limit <= g_sieve_limit) return;
  if (limit > kSieveCap)
    throw GuardError("prime request exceeds the sieve cap (2^31)");
  std::vector<bool> composite(limit, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j < limit; j += i) composite[j] = true;
  }
  g_sieved_primes = std::move(primes);
  g_sieve_limit = limit;
}

}  // namespace

std::vector<std::uint64_t> primes_at_least(std::uint64_t min, std::size_t count) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  if (count == 0) return out;
  std::lock_guard<std::mutex> lock(g_sieve_mutex);
  double m = std::max<double>(min, 2.0);
  double guess = m + static_cast<double>(count) *
                         (std::log(m + count * (std::log(m) + 2.0) + 16.0) + 2.0) +
                 64.0;
  std::uint64_t bound =
      std::max<std::uint64_t>(g_sieve_limit, static_cast<std::uint64_t>(guess));
  for (;;) {
    ensure_sieved(bound);
    auto it = std::lower_bound(g_sieved_primes.begin(), g_sieved_primes.end(), min);
    if (static_cast<std::size_t>(g_sieved_primes.end() - it) >= count) {
      out.assign(it, it + count);
      return out;
    }
    bound += bound / 2 + 64;
  }
}

unsigned long ceil_log2(const mpz_class& n) {
  if (n < 1) throw std::invalid_argument("ceil_log2 requires n >= 1");
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  bool power_of_two = mpz_popcount(n.get_mpz_t()) == 1;
  return power_of_two ? bits - 1 : bits;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi requires n >= 1");
  std::uint64_t result = n;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace lacunary
