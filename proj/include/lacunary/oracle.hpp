#pragma once

#include <cstdint>
#include <map>

#include <gmpxx.h>

#include "lacunary/errors.hpp"
#include "lacunary/expression.hpp"

namespace lacunary {

/// Exact "sum of monomials" representation: exponent -> nonzero coefficient.
using SparsePoly = std::map<mpz_class, mpq_class>;

/// The exact monomial map of the represented polynomial; empty iff the
/// polynomial is identically zero. Rejects inputs with
/// sum_j (beta_j + 1) > term_limit.
SparsePoly expand_to_sparse(const Expression& expr,
                            const mpz_class& term_limit = mpz_class(kDefaultTermLimit));

/// Value of the represented polynomial at x modulo the prime q, computed by
/// modular power-by-squaring with exponents reduced mod q-1 (with explicit
/// checks for x == 0 and a + b*x == 0 mod q). Randomized cross-check
/// tooling; never part of a deterministic verdict. Rejects q dividing a
/// needed denominator.
std::uint64_t random_eval_mod(const Expression& expr, std::uint64_t q, std::uint64_t x);

/// Deterministic point derived from a seed, for the randomized cross-check.
std::uint64_t draw_eval_point(std::uint64_t q, std::uint64_t seed);

/// Number of distinct real roots, exact Sturm sequences over the rationals.
/// Rejects the zero polynomial and degrees beyond desk scale.
std::uint64_t real_root_count(const SparsePoly& poly);

}  // namespace lacunary
