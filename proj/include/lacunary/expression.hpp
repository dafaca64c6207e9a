#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace lacunary {

/// One term c * X^alpha * (a + b*X)^beta of a shifted-power expression.
/// Exponents are arbitrary-precision naturals.
struct Term {
  mpq_class c;
  mpz_class alpha;
  mpz_class beta;
};

/// A lacunary expression sum_j c_j X^{alpha_j} (a + b X)^{beta_j}.
/// `terms` is non-empty for user-supplied expressions; normalization may
/// produce an empty term list when everything cancels (the zero polynomial).
struct Expression {
  mpq_class a;
  mpq_class b;
  std::vector<Term> terms;
};

/// The size parameters the bound machinery works with:
/// t = terms - 1, d = max alpha, d_prime = max beta, height = H(c).
struct ExpressionParams {
  std::size_t t = 0;
  mpz_class d;
  mpz_class d_prime;
  mpz_class height;
};

/// Rejects an empty term list. When every coefficient is zero the height is
/// reported as 1 (the expression is the zero polynomial).
ExpressionParams expression_params(const Expression& expr);

std::vector<mpq_class> coefficient_tuple(const Expression& expr);

/// base^e for a natural e, exact. 0^0 = 1. Bases 0 and +/-1 are handled for
/// any exponent; otherwise e's bit length must stay within the size guard.
mpq_class rational_pow(const mpq_class& base, const mpz_class& e, unsigned size_guard);

}  // namespace lacunary
