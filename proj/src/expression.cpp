#include "lacunary/expression.hpp"

#include <stdexcept>

#include "lacunary/errors.hpp"
#include "lacunary/heights.hpp"

namespace lacunary {

ExpressionParams expression_params(const Expression& expr) {
  if (expr.terms.empty())
    throw std::invalid_argument("expression has no terms");
  ExpressionParams params;
  params.t = expr.terms.size() - 1;
  params.d = 0;
  params.d_prime = 0;
  bool any_nonzero = false;
  for (const auto& term : expr.terms) {
    if (term.alpha > params.d) params.d = term.alpha;
    if (term.beta > params.d_prime) params.d_prime = term.beta;
    if (term.c != 0) any_nonzero = true;
  }
  params.height = any_nonzero ? projective_height(coefficient_tuple(expr)) : 1;
  return params;
}

std::vector<mpq_class> coefficient_tuple(const Expression& expr) {
  std::vector<mpq_class> c;
  c.reserve(expr.terms.size());
  for (const auto& term : expr.terms) c.push_back(term.c);
  return c;
}

mpq_class rational_pow(const mpq_class& base, const mpz_class& e, unsigned size_guard) {
  if (e < 0) throw std::invalid_argument("rational_pow requires a natural exponent");
  if (e == 0) return 1;
  if (base == 0) return 0;
  if (base == 1) return 1;
  if (base == -1) return mpz_odd_p(e.get_mpz_t()) ? -1 : 1;
  if (mpz_sizeinbase(e.get_mpz_t(), 2) > size_guard || !e.fits_ulong_p())
    throw GuardError("exponent bit length exceeds the size guard for exact powers");
  unsigned long ei = e.get_ui();
  mpq_class result;
  mpz_pow_ui(result.get_num().get_mpz_t(), base.get_num().get_mpz_t(), ei);
  mpz_pow_ui(result.get_den().get_mpz_t(), base.get_den().get_mpz_t(), ei);
  // base is canonical, so numerator and denominator powers stay coprime.
  return result;
}

}  // namespace lacunary
