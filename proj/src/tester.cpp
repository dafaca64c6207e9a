#include "lacunary/tester.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lacunary/cyclo.hpp"
#include "lacunary/heights.hpp"
#include "lacunary/numtheory.hpp"
#include "lacunary/oracle.hpp"

namespace lacunary {

Expression normalize(const Expression& in, NormalizationReport* report,
                     unsigned size_guard) {
  if (in.terms.empty()) throw std::invalid_argument("expression has no terms");
  NormalizationReport rep;
  Expression out;
  out.a = in.a;
  out.b = in.b;

  if (in.a == 0 || in.b == 0) {
    // Degenerate shift: collapse to pure monomial form. With b = 0 each term
    // becomes c a^beta X^alpha (0^0 = 1); with a = 0 it becomes
    // c b^beta X^(alpha+beta).
    rep.rewritten_monomial = true;
    bool shift_into_exponent = (in.a == 0 && in.b != 0);
    const mpq_class& base = (in.b == 0) ? in.a : in.b;
    std::map<mpz_class, mpq_class> collapsed;
    for (const auto& term : in.terms) {
      mpq_class c = term.c * rational_pow(base, term.beta, size_guard);
      if (c == 0) {
        ++rep.dropped_terms;
        continue;
      }
      mpz_class exponent =
          shift_into_exponent ? mpz_class(term.alpha + term.beta) : term.alpha;
      auto [it, inserted] = collapsed.emplace(std::move(exponent), c);
      if (!inserted) {
        it->second += c;
        ++rep.merged_terms;
      }
    }
    for (auto& [exponent, c] : collapsed) {
      if (c == 0) {
        ++rep.dropped_terms;
        continue;
      }
      out.terms.push_back({std::move(c), exponent, 0});
    }
  } else {
    for (const auto& term : in.terms) {
      if (term.c == 0) {
        ++rep.dropped_terms;
        continue;
      }
      out.terms.push_back(term);
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const Term& x, const Term& y) {
      if (x.beta != y.beta) return x.beta < y.beta;
      return x.alpha < y.alpha;
    });
    std::vector<Term> merged;
    for (auto& term : out.terms) {
      if (!merged.empty() && merged.back().alpha == term.alpha &&
          merged.back().beta == term.beta) {
        merged.back().c += term.c;
        ++rep.merged_terms;
        continue;
      }
      merged.push_back(std::move(term));
    }
    out.terms.clear();
    for (auto& term : merged) {
      if (term.c == 0) {
        ++rep.dropped_terms;
        continue;
      }
      out.terms.push_back(std::move(term));
    }
    if (!out.terms.empty()) {
      rep.stripped_beta = out.terms.front().beta;
      if (rep.stripped_beta != 0)
        for (auto& term : out.terms) term.beta -= rep.stripped_beta;
    }
  }

  rep.collapsed_to_zero = out.terms.empty();
  if (report) *report = rep;
  return out;
}

GapDecomposition gap_split(const Expression& normalized, std::uint64_t delta,
                           const mpz_class& stripped_beta) {
  GapDecomposition gd;
  gd.delta = delta;
  gd.stripped_beta = stripped_beta;
  if (normalized.terms.empty()) return gd;
  for (std::size_t i = 1; i < normalized.terms.size(); ++i)
    if (normalized.terms[i].beta < normalized.terms[i - 1].beta)
      throw std::invalid_argument("gap_split expects terms sorted by beta");
  std::size_t first = 0;
  for (std::size_t i = 1; i < normalized.terms.size(); ++i) {
    if (normalized.terms[i].beta - normalized.terms[i - 1].beta > delta) {
      gd.blocks.emplace_back(first, i - 1);
      first = i;
    }
  }
  gd.blocks.emplace_back(first, normalized.terms.size() - 1);
  return gd;
}

namespace {

// Exact expansion of one gap-free block, with its minimal beta factored out.
// Spans are at most delta*t even when the beta values are astronomically
// large, so the binomial loop is short; alpha keys stay arbitrary-precision.
bool block_expands_to_zero(const Expression& expr, std::size_t first,
                           std::size_t last) {
  std::map<mpz_class, mpq_class> acc;
  const mpz_class& mu = expr.terms[first].beta;
  mpq_class ratio = expr.b / expr.a;
  for (std::size_t j = first; j <= last; ++j) {
    const Term& term = expr.terms[j];
    mpz_class span_z = term.beta - mu;
    if (!span_z.fits_ulong_p())
      throw GuardError("gap-free block span exceeds the machine range");
    unsigned long span = span_z.get_ui();
    // w_k = c * C(span, k) * a^(span-k) * b^k, built incrementally.
    mpq_class w = term.c * rational_pow(expr.a, span_z, 64);
    for (unsigned long k = 0;; ++k) {
      auto [it, inserted] = acc.emplace(term.alpha + k, w);
      if (!inserted) {
        it->second += w;
        if (it->second == 0) acc.erase(it);
      }
      if (k == span) break;
      w *= ratio;
      w *= span - k;
      w /= k + 1;
    }
  }
  return acc.empty();
}

}  // namespace

Verdict structural_zero_test(const Expression& expr, const GapConstant& C) {
  NormalizationReport rep;
  Expression norm = normalize(expr, &rep);
  Verdict verdict;
  verdict.mode = TestMode::Structural;
  if (norm.terms.empty()) {
    verdict.result = ZeroResult::Zero;
    return verdict;
  }
  if (rep.rewritten_monomial) {
    // Distinct nonzero monomials remain after collapsing.
    verdict.result = ZeroResult::Nonzero;
    return verdict;
  }
  std::size_t t = norm.terms.size() - 1;
  mpz_class M = projective_height(coefficient_tuple(norm));
  std::uint64_t delta = gap_delta(t, M, C);
  GapDecomposition gd = gap_split(norm, delta, rep.stripped_beta);
  for (const auto& [first, last] : gd.blocks) {
    if (!block_expands_to_zero(norm, first, last)) {
      verdict.result = ZeroResult::Nonzero;
      return verdict;
    }
  }
  verdict.result = ZeroResult::Zero;
  return verdict;
}

Verdict blackbox_zero_test(const Expression& expr, const HittingSetSpec& spec,
                           unsigned size_guard) {
  if (spec.kind != HittingSetKind::RootsOfUnity)
    throw std::invalid_argument("black-box tester needs a roots-of-unity spec");
  if (spec.primes.empty()) throw std::invalid_argument("empty hitting set");
  std::uint64_t prev = 0;
  for (std::uint64_t p : spec.primes) {
    if (p < 5 || p <= prev)
      throw std::invalid_argument("hitting set primes must be >= 5 and ascending");
    prev = p;
  }
  ExpressionParams params = expression_params(expr);
  if (spec.params.t < params.t || spec.params.d < params.d ||
      spec.params.d_prime < params.d_prime ||
      spec.params.height_bound < params.height)
    throw std::invalid_argument(
        "hitting set parameters do not dominate the expression's (t, d, d', M)");

  NormalizationReport rep;
  Expression norm = normalize(expr, &rep, size_guard);
  Verdict verdict;
  verdict.mode = TestMode::BlackBox;
  if (norm.terms.empty()) {
    verdict.result = ZeroResult::Zero;
    return verdict;
  }
  // The stripped (a+bX)^beta0 never vanishes at a primitive p-th root of
  // unity for p >= 5, so testing the stripped expression is equivalent.
  for (std::uint64_t p : spec.primes) {
    CycloElement residue = eval_expression_mod(norm, p, size_guard);
    if (!vanishes_on_primitive_roots(residue)) {
      verdict.result = ZeroResult::Nonzero;
      verdict.witness_prime = p;
      return verdict;
    }
  }
  verdict.result = ZeroResult::Zero;
  return verdict;
}

Verdict real_point_zero_test(const Expression& expr, const HittingSetSpec& spec,
                             unsigned size_guard) {
  if (spec.kind != HittingSetKind::RealPoints)
    throw std::invalid_argument("real-point tester needs a real-point spec");
  NormalizationReport rep;
  Expression norm = normalize(expr, &rep, size_guard);
  Verdict verdict;
  verdict.mode = TestMode::RealPoints;
  if (norm.terms.empty()) {
    verdict.result = ZeroResult::Zero;
    return verdict;
  }
  std::size_t t = norm.terms.size() - 1;
  bool monomial_form = true;
  for (const auto& term : norm.terms)
    if (term.beta != 0) monomial_form = false;
  bool all_positive = true;
  std::size_t nonzero_points = 0;
  for (const auto& x : spec.points) {
    if (x <= 0) all_positive = false;
    if (x != 0) ++nonzero_points;
  }
  std::set<mpq_class> distinct(spec.points.begin(), spec.points.end());
  if (distinct.size() != spec.points.size())
    throw std::invalid_argument("real hitting set points must be pairwise distinct");
  // Monomial form: at most t positive roots (Descartes), at most 2t+1
  // nonzero real roots. General form with t+1 terms: at most 6(t+1)-4
  // distinct real roots.
  bool enough;
  if (monomial_form)
    enough = all_positive ? spec.points.size() >= t + 1
                          : nonzero_points >= 2 * t + 2;
  else
    enough = spec.points.size() >= 6 * t + 3;
  if (!enough)
    throw std::invalid_argument("real hitting set too small for the expression");

  for (const auto& x : spec.points) {
    mpq_class shift = norm.a + norm.b * x;
    mpq_class value = 0;
    for (const auto& term : norm.terms)
      value += term.c * rational_pow(x, term.alpha, size_guard) *
               rational_pow(shift, term.beta, size_guard);
    if (value != 0) {
      verdict.result = ZeroResult::Nonzero;
      verdict.witness_point = x;
      return verdict;
    }
  }
  verdict.result = ZeroResult::Zero;
  return verdict;
}

LowerBoundCertificate lower_bound_params(const std::vector<std::uint64_t>& target_primes,
                                         std::size_t t, const mpz_class& M,
                                         const GapConstant& C) {
  LowerBoundCertificate cert;
  cert.t = t;
  cert.height_bound = M;
  cert.prime_count = target_primes.size();
  cert.delta = gap_delta(t, M, C);

  mpz_class sparsity = mpz_class(t + 1) * (mpz_class(cert.delta) * t + 1);
  std::set<std::uint64_t> seen;
  for (std::uint64_t p : target_primes) {
    if (p < 5 || !is_prime(p) || sparsity >= p || !seen.insert(p).second) {
      cert.statement =
          "not certified: target primes must be distinct primes exceeding "
          "max(4, (t+1)(delta*t+1))";
      return cert;
    }
  }

  std::size_t n = target_primes.size();
  mpz_class k2 = mpz_class(n) / sparsity;
  mpz_class k1 = mpz_class(n) / mpz_class(t + 1);
  if (k2 == 0 || !k2.fits_ulong_p() || !k1.fits_ulong_p()) {
    cert.statement = "not certified: too few primes for any (d, d') >= 1";
    return cert;
  }
  mpz_class two_k2, two_k1;
  mpz_ui_pow_ui(two_k2.get_mpz_t(), 2, k2.get_ui());
  mpz_ui_pow_ui(two_k1.get_mpz_t(), 2, k1.get_ui());
  mpz_class d_max = two_k2 - mpz_class(cert.delta) * t - 1;
  if (d_max > two_k1 - 2) d_max = two_k1 - 2;
  if (d_max < 1) {
    cert.statement = "not certified: too few primes for any (d, d') >= 1";
    return cert;
  }
  mpz_class d_prime_max = two_k1 - d_max - 1;
  if (d_prime_max < 1) {
    cert.statement = "not certified: too few primes for any (d, d') >= 1";
    return cert;
  }
  if (prime_count_bound(t, d_max, d_prime_max, cert.delta) > n)
    throw std::logic_error("certificate bound inversion is inconsistent");

  cert.certified = true;
  cert.d_max = d_max;
  cert.d_prime_max = d_prime_max;
  std::ostringstream msg;
  msg << "certified: no expression with t <= " << t << ", H(c) <= " << M
      << ", alpha_j <= d and beta_j <= d' for (d, d') in the certified region "
         "equals the product of (X^p - 1) over the "
      << n
      << " target primes, or any nonzero multiple of it; all shift pairs "
         "(a, b) are covered, the degenerate ones via the sparse-monomial "
         "bound";
  cert.statement = msg.str();
  return cert;
}

bool certificate_covers(const LowerBoundCertificate& cert, const mpz_class& d,
                        const mpz_class& d_prime) {
  if (!cert.certified || d < 1 || d_prime < 1) return false;
  return prime_count_bound(cert.t, d, d_prime, cert.delta) <= cert.prime_count;
}

namespace {

std::string describe_first_nonzero(const CycloElement& residue) {
  for (const auto& [i, q] : residue.entries()) {
    std::ostringstream msg;
    msg << "coefficient " << q << " at X^" << i;
    return msg.str();
  }
  return "all coefficients equal but nonzero";
}

SparsePoly expand_target_product(const std::vector<std::uint64_t>& targets) {
  SparsePoly product;
  product[0] = 1;
  for (std::uint64_t p : targets) {
    SparsePoly next;
    for (const auto& [e, c] : product) {
      next[e + p] += c;
      next[e] -= c;
    }
    for (auto it = next.begin(); it != next.end();)
      it = (it->second == 0) ? next.erase(it) : std::next(it);
    product = std::move(next);
  }
  return product;
}

}  // namespace

Refutation refute_representation(const Expression& expr,
                                 const std::vector<std::uint64_t>& target_primes,
                                 unsigned size_guard, std::size_t extra_primes) {
  if (target_primes.empty())
    throw std::invalid_argument("refutation needs at least one target prime");
  std::set<std::uint64_t> target_set;
  for (std::uint64_t p : target_primes) {
    if (p < 5 || !is_prime(p))
      throw std::invalid_argument("target primes must be primes >= 5");
    if (!target_set.insert(p).second)
      throw std::invalid_argument("target primes must be distinct");
  }

  Refutation out;
  out.params = expression_params(expr);
  out.required_prime_count = prime_count_bound(
      out.params.t, out.params.d, out.params.d_prime,
      gap_delta(out.params.t, std::max(out.params.height, mpz_class(1))));

  NormalizationReport rep;
  Expression norm = normalize(expr, &rep, size_guard);

  auto full_residue = [&](std::uint64_t p) {
    CycloElement residue = eval_expression_mod(norm, p, size_guard);
    if (rep.stripped_beta != 0)
      residue = residue * CycloElement::linear(norm.a, norm.b, p)
                              .pow(rep.stripped_beta, size_guard);
    return residue;
  };

  // (i) X^p - 1 divides the target product, so the expression must vanish
  // identically in R_p for every target prime.
  for (std::uint64_t p : target_set) {
    CycloElement residue = full_residue(p);
    if (!vanishes_on_all_roots(residue)) {
      out.status = RefutationStatus::Refuted;
      out.witness_prime = p;
      out.witness_is_target = true;
      out.residue_summary = "nonzero residue modulo X^p - 1: " +
                            describe_first_nonzero(residue);
      return out;
    }
  }

  // (ii) Cross-check against the directly computed product at primes outside
  // the target set.
  if (extra_primes > 0) {
    std::vector<std::uint64_t> candidates =
        primes_at_least(5, target_set.size() + extra_primes + 8);
    std::size_t used = 0;
    for (std::uint64_t q : candidates) {
      if (used == extra_primes) break;
      if (target_set.count(q)) continue;
      ++used;
      CycloElement lhs = full_residue(q);
      CycloElement rhs = CycloElement::one(q);
      for (std::uint64_t p : target_set) {
        CycloElement factor =
            CycloElement::monomial(mpz_class(static_cast<unsigned long>(p)), q) -
            CycloElement::one(q);
        rhs = rhs * factor;
      }
      if (!(lhs == rhs)) {
        out.status = RefutationStatus::Refuted;
        out.witness_prime = q;
        out.witness_is_target = false;
        out.residue_summary =
            "residue modulo X^q - 1 differs from the target product";
        return out;
      }
    }
  }

  out.status = RefutationStatus::NotRefuted;
  // Inconclusive unless full expansion is feasible and confirms equality.
  mpz_class expansion_cost = 0;
  for (const auto& term : expr.terms) expansion_cost += term.beta + 1;
  if (expansion_cost <= kDefaultTermLimit && target_set.size() <= 20) {
    SparsePoly lhs = expand_to_sparse(expr);
    SparsePoly rhs = expand_target_product(
        std::vector<std::uint64_t>(target_set.begin(), target_set.end()));
    out.oracle_confirmed_equality = (lhs == rhs);
  }
  return out;
}

}  // namespace lacunary
