#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lacunary/errors.hpp"
#include "lacunary/expression.hpp"
#include "lacunary/hitting.hpp"

namespace lacunary {

struct NormalizationReport {
  bool rewritten_monomial = false;  // degenerate (a,b) rewritten to pure monomials
  mpz_class stripped_beta = 0;      // exponent of the factored-out (a+bX)^beta0
  std::size_t merged_terms = 0;
  std::size_t dropped_terms = 0;
  bool collapsed_to_zero = false;   // all terms cancelled; result has no terms
};

/// Sorts terms by beta nondecreasing, merges terms with identical
/// (alpha, beta), drops zero coefficients. Degenerate shifts are rewritten
/// to pure monomial form: b = 0 gives c_j a^beta_j X^alpha_j (with 0^0 = 1),
/// a = 0 gives c_j b^beta_j X^(alpha_j+beta_j). Otherwise (a+bX)^beta0 is
/// stripped and beta0 recorded in the report. The represented polynomial is
/// preserved up to the recorded stripped factor.
/// The size guard applies to a^beta / b^beta scalar powers in the degenerate
/// rewrite when |a| (resp. |b|) is not 0 or 1.
Expression normalize(const Expression& expr, NormalizationReport* report = nullptr,
                     unsigned size_guard = kDefaultSizeGuard);

/// Contiguous index ranges of terms separated by beta-gaps exceeding delta.
struct GapDecomposition {
  std::uint64_t delta = 0;
  // Inclusive [first, last] ranges, partitioning the term indices in order.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  mpz_class stripped_beta = 0;
};

/// Blocks are maximal runs where consecutive beta differences are <= delta.
/// Expects a normalized expression with b != 0.
GapDecomposition gap_split(const Expression& normalized, std::uint64_t delta,
                           const mpz_class& stripped_beta = 0);

enum class ZeroResult { Zero, Nonzero };
enum class TestMode { Structural, BlackBox, RealPoints, Oracle };

struct Verdict {
  ZeroResult result = ZeroResult::Zero;
  TestMode mode = TestMode::Structural;
  std::optional<std::uint64_t> witness_prime;
  std::optional<mpq_class> witness_point;
};

/// Deterministic polynomial-time zero test: normalizes, computes delta from
/// t and M = H(c), splits at the gaps, and expands each block exactly into a
/// sparse monomial map (block beta-spans are at most delta*t even when the
/// beta values themselves are astronomically large). Zero iff every block
/// collapses to zero.
Verdict structural_zero_test(const Expression& expr,
                             const GapConstant& C = GapConstant::defaults());

/// Black-box test over the spec's roots of unity: for each prime p in
/// ascending order, evaluates the expression in R_p and checks vanishing at
/// the primitive p-th roots. Nonzero with the smallest witnessing prime on
/// first failure. The spec's parameters must dominate the expression's
/// (t, d, d', M).
Verdict blackbox_zero_test(const Expression& expr, const HittingSetSpec& spec,
                           unsigned size_guard = kDefaultSizeGuard);

/// Evaluates the normalized expression exactly at each rational point;
/// Nonzero with the first witnessing point. Exponents must be within the
/// size guard (exact values carry on the order of beta bits).
Verdict real_point_zero_test(const Expression& expr, const HittingSetSpec& spec,
                             unsigned size_guard = kDefaultSizeGuard);

/// A lower-bound certificate: for the given prime set P, the maximal
/// exponent bounds (d, d') for which no expression with parameters
/// (t, alpha <= d, beta <= d', H(c) <= M) and any shift pair (a, b) can
/// equal prod_{p in P} (X^p - 1) or any nonzero multiple of it.
struct LowerBoundCertificate {
  bool certified = false;
  std::size_t t = 0;
  mpz_class height_bound;
  std::uint64_t delta = 0;
  std::size_t prime_count = 0;
  mpz_class d_max;        // largest certified alpha bound
  mpz_class d_prime_max;  // largest certified beta bound at d = d_max
  std::string statement;
};

LowerBoundCertificate lower_bound_params(const std::vector<std::uint64_t>& target_primes,
                                         std::size_t t, const mpz_class& M,
                                         const GapConstant& C = GapConstant::defaults());

/// Whether the certificate's prime set also covers the bounds (d, d'),
/// i.e. prime_count_bound(t, d, d', delta) <= |P|.
bool certificate_covers(const LowerBoundCertificate& cert, const mpz_class& d,
                        const mpz_class& d_prime);

enum class RefutationStatus { Refuted, NotRefuted };

struct Refutation {
  RefutationStatus status = RefutationStatus::NotRefuted;
  std::optional<std::uint64_t> witness_prime;
  bool witness_is_target = false;
  std::string residue_summary;
  // NotRefuted is inconclusive unless the oracle expansion confirmed equality.
  bool oracle_confirmed_equality = false;
  ExpressionParams params;
  std::uint64_t required_prime_count = 0;
};

/// Tests whether expr could equal P = prod_{p in targets} (X^p - 1):
/// (i) expr must vanish identically in R_p for every target p (X^p - 1
/// divides P); (ii) for extra_primes primes q outside the target set, the
/// residue of expr in R_q must match the directly computed product. Any
/// failure is a refutation with a witness prime. When all checks pass and
/// the expression is within oracle reach, equality is confirmed by full
/// expansion.
Refutation refute_representation(const Expression& expr,
                                 const std::vector<std::uint64_t>& target_primes,
                                 unsigned size_guard = kDefaultSizeGuard,
                                 std::size_t extra_primes = 3);

}  // namespace lacunary
