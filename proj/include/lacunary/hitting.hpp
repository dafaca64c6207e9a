#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lacunary {

/// A certified rational lower bound on log2(C), where C > 1 is the absolute
/// constant in the height lower bound H(a + b*theta) >= C.
struct GapConstant {
  mpq_class c_log2_lower;
  std::string provenance;

  /// 193/1000 < log2(5)/12: the explicit 5^(1/12) height bound for abelian
  /// extensions. Conservative and overridable; a smaller constant only
  /// enlarges delta and the prime sets.
  static const GapConstant& defaults();
};

/// The gap threshold: smallest natural delta with
/// delta >= ceil_log2(t(t+1)M) / c_log2_lower, exact rational arithmetic.
/// t = 0 returns 0 (single-term expressions need no gap analysis).
/// Rejects M < 1 when t >= 1.
std::uint64_t gap_delta(std::size_t t, const mpz_class& M,
                        const GapConstant& C = GapConstant::defaults());

/// (t+1) * max( ceil_log2(d + d' + 1), (delta*t + 1) * ceil_log2(d + t*delta + 1) ).
/// The +1 inside the logs guards the d = 0 corner.
std::uint64_t prime_count_bound(std::size_t t, const mpz_class& d,
                                const mpz_class& d_prime, std::uint64_t delta);

enum class HittingSetKind { RootsOfUnity, RealPoints };

struct HittingSetParams {
  std::size_t t = 0;
  mpz_class d;
  mpz_class d_prime;
  mpz_class height_bound;  // M
  std::uint64_t delta = 0;
};

struct HittingSetSpec {
  HittingSetKind kind = HittingSetKind::RootsOfUnity;
  std::vector<std::uint64_t> primes;  // roots-of-unity kind, ascending
  std::vector<mpq_class> points;      // real kind, pairwise distinct
  HittingSetParams params;
};

/// The prime_count_bound(t,d,d',delta) smallest primes that are
/// >= max(5, (t+1)(delta*t+1) + 1). Requiring primes above the expanded
/// sparsity bound makes vanishing modulo the cyclotomic polynomial
/// equivalent to vanishing modulo X^p - 1 for the polynomials in the class.
HittingSetSpec build_rou_hitting_set(std::size_t t, const mpz_class& d,
                                     const mpz_class& d_prime, const mpz_class& M,
                                     const GapConstant& C = GapConstant::defaults());

/// The integer points 1, 2, ..., 6(t+1)-3. An expression with t+1 terms has
/// at most 6(t+1)-4 distinct real roots, so the set is hitting.
HittingSetSpec build_real_hitting_set(std::size_t t);

/// Text form: one header line `kind t d d' M delta`, then one prime (or
/// rational point) per line, decimal.
std::string serialize_spec(const HittingSetSpec& spec);
HittingSetSpec parse_spec(const std::string& text);

/// Checks the full invariants (primality, ordering, minimum, count against
/// prime_count_bound; distinctness and count for real kind). Throws
/// std::invalid_argument on violation.
void validate_spec(const HittingSetSpec& spec);

}  // namespace lacunary
