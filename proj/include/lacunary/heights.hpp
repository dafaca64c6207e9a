#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace lacunary {

/// Height of a rational x = d/e in lowest terms: max(|d|, |e|). H(0) = 1.
mpz_class rational_height(const mpq_class& x);

/// Projective height of a rational tuple: bring to a common denominator,
/// divide the resulting integers by their gcd, take the maximum absolute
/// value. Rejects the all-zero tuple.
mpz_class projective_height(const std::vector<mpq_class>& c);

/// (t+1) * projective_height(c) for a tuple with t+1 entries: a certified
/// upper bound on the height of the collapsed univariate polynomial.
mpz_class poly_height_bound(const std::vector<mpq_class>& c);

/// True exactly for the five shift pairs (0,0), (1,0), (-1,0), (0,1), (0,-1)
/// for which the height lower bound on a+b*theta fails.
bool is_excluded_pair(const mpq_class& a, const mpq_class& b);

/// Floating approximation of the absolute height H(a + b*theta) for theta a
/// primitive n-th root of unity, via the Mahler-measure form
///   ( D^phi(n) * prod_{gcd(k,n)=1} max(1, |a + b*exp(2*pi*i*k/n)|) )^(1/phi(n))
/// with D the least common denominator of a and b. Numeric verification
/// oracle only; never used inside the deterministic testers.
/// Rejects n = 0 and precision <= 0.
double algebraic_height_numeric(const mpq_class& a, const mpq_class& b,
                                std::uint64_t n, double precision = 1e-12);

}  // namespace lacunary
