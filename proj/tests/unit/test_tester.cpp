#include <doctest.h>

#include <random>

#include "lacunary/cyclo.hpp"
#include "lacunary/numtheory.hpp"
#include "lacunary/oracle.hpp"
#include "lacunary/tester.hpp"

using namespace lacunary;

namespace {

Expression make(const mpq_class& a, const mpq_class& b,
                std::vector<Term> terms) {
  Expression e;
  e.a = a;
  e.b = b;
  e.terms = std::move(terms);
  return e;
}

// (1+X)^2 - its own monomial expansion: identically zero.
Expression zero_identity() {
  return make(1, 1,
              {{1, 0, 2}, {-1, 0, 0}, {-2, 1, 0}, {-1, 2, 0}});
}

}  // namespace

TEST_CASE("normalize sorts, merges and strips") {
  NormalizationReport rep;
  Expression e = make(1, 1, {{2, 3, 7}, {1, 0, 5}, {-2, 3, 7}, {0, 1, 6}});
  Expression n = normalize(e, &rep);
  REQUIRE(n.terms.size() == 1);  // the (3,7) pair cancels, the zero c drops
  CHECK(n.terms[0].alpha == 0);
  CHECK(n.terms[0].beta == 0);  // beta0 = 5 stripped
  CHECK(rep.stripped_beta == 5);
  CHECK(rep.merged_terms == 1);
  CHECK(rep.dropped_terms == 2);
  CHECK_FALSE(rep.collapsed_to_zero);
  CHECK_FALSE(rep.rewritten_monomial);
}

TEST_CASE("normalize degenerate b = 0") {
  NormalizationReport rep;
  Expression e = make(3, 0, {{1, 2, 2}, {5, 0, 0}});
  Expression n = normalize(e, &rep);
  CHECK(rep.rewritten_monomial);
  REQUIRE(n.terms.size() == 2);
  CHECK(n.terms[0].alpha == 0);
  CHECK(n.terms[0].c == 5);  // 0^0 = 1 convention keeps the constant
  CHECK(n.terms[1].alpha == 2);
  CHECK(n.terms[1].c == 9);  // 1 * 3^2
  CHECK(n.terms[1].beta == 0);
}

TEST_CASE("normalize degenerate a = 0 shifts beta into alpha") {
  Expression e = make(0, 2, {{1, 1, 3}});
  Expression n = normalize(e);
  REQUIRE(n.terms.size() == 1);
  CHECK(n.terms[0].alpha == 4);
  CHECK(n.terms[0].c == 8);  // 2^3
}

TEST_CASE("normalize (a,b) = (0,0) keeps only beta = 0 terms") {
  Expression e = make(0, 0, {{7, 2, 0}, {3, 1, 5}});
  Expression n = normalize(e);
  REQUIRE(n.terms.size() == 1);
  CHECK(n.terms[0].alpha == 2);
  CHECK(n.terms[0].c == 7);
}

TEST_CASE("normalize can collapse everything") {
  NormalizationReport rep;
  Expression e = make(1, 2, {{1, 1, 4}, {-1, 1, 4}});
  Expression n = normalize(e, &rep);
  CHECK(n.terms.empty());
  CHECK(rep.collapsed_to_zero);
  CHECK_THROWS_AS(normalize(make(1, 1, {})), std::invalid_argument);
}

TEST_CASE("normalize preserves the expansion") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-4, 4), expo(0, 8), shift(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    Expression e = make(shift(rng), shift(rng), {});
    int nterms = 1 + trial % 4;
    for (int j = 0; j < nterms; ++j)
      e.terms.push_back({coeff(rng), expo(rng), expo(rng)});
    NormalizationReport rep;
    Expression n = normalize(e, &rep);
    SparsePoly before = expand_to_sparse(e);
    SparsePoly after;
    if (!n.terms.empty()) {
      // re-attach the stripped factor before comparing
      Expression full = n;
      for (auto& term : full.terms) term.beta += rep.stripped_beta;
      after = expand_to_sparse(full);
    }
    CHECK(before == after);
  }
}

TEST_CASE("gap_split blocks are maximal runs") {
  Expression e = make(1, 1, {{1, 0, 0}, {1, 0, 3}, {1, 0, 10}, {1, 0, 12}});
  GapDecomposition gd = gap_split(e, 4);
  REQUIRE(gd.blocks.size() == 2);
  CHECK(gd.blocks[0] == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(gd.blocks[1] == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(gap_split(e, 12).blocks.size() == 1);
  CHECK(gap_split(e, 0).blocks.size() == 4);
  Expression unsorted = make(1, 1, {{1, 0, 5}, {1, 0, 1}});
  CHECK_THROWS_AS(gap_split(unsorted, 3), std::invalid_argument);
}

TEST_CASE("structural tester on fixed instances") {
  CHECK(structural_zero_test(zero_identity()).result == ZeroResult::Zero);
  Expression nz = make(1, 1, {{1, 0, 2}, {-1, 0, 0}, {-2, 1, 0}});
  CHECK(structural_zero_test(nz).result == ZeroResult::Nonzero);
  CHECK(structural_zero_test(make(1, 1, {{0, 0, 0}})).result == ZeroResult::Zero);
  CHECK(structural_zero_test(make(0, 0, {{1, 0, 1}})).result == ZeroResult::Zero);
  CHECK(structural_zero_test(make(0, 0, {{1, 0, 0}})).result == ZeroResult::Nonzero);
}

TEST_CASE("structural tester handles huge exponents") {
  mpz_class huge = (mpz_class(1) << 300) + 17;
  Expression e = make(2, -3, {{1, huge, huge}, {-1, huge, huge}});
  CHECK(structural_zero_test(e).result == ZeroResult::Zero);
  Expression nz = make(2, -3, {{1, huge, huge}, {1, 0, 0}});
  CHECK(structural_zero_test(nz).result == ZeroResult::Nonzero);
}

TEST_CASE("blackbox tester with a built spec") {
  Expression z = zero_identity();
  ExpressionParams p = expression_params(z);
  HittingSetSpec spec = build_rou_hitting_set(p.t, p.d, p.d_prime, p.height);
  CHECK(blackbox_zero_test(z, spec).result == ZeroResult::Zero);

  Expression nz = make(1, 1, {{1, 0, 2}, {-1, 0, 0}, {-2, 1, 0}});
  Verdict v = blackbox_zero_test(nz, spec);
  REQUIRE(v.result == ZeroResult::Nonzero);
  REQUIRE(v.witness_prime.has_value());
  CHECK(*v.witness_prime == spec.primes.front());  // smallest witness
  CHECK_FALSE(vanishes_on_primitive_roots(
      eval_expression_mod(normalize(nz), *v.witness_prime)));
}

TEST_CASE("blackbox rejects non-dominating specs") {
  Expression e = make(1, 1, {{1, 100, 0}, {1, 0, 0}});
  HittingSetSpec spec = build_rou_hitting_set(1, 8, 8, 1);
  CHECK_THROWS_AS(blackbox_zero_test(e, spec), std::invalid_argument);
}

TEST_CASE("real point tester") {
  HittingSetSpec spec = build_real_hitting_set(3);
  CHECK(real_point_zero_test(zero_identity(), spec).result == ZeroResult::Zero);
  Expression nz = make(1, 1, {{1, 0, 2}, {-1, 0, 0}, {-2, 1, 0}});
  Verdict v = real_point_zero_test(nz, spec);
  REQUIRE(v.result == ZeroResult::Nonzero);
  REQUIRE(v.witness_point.has_value());
  CHECK(*v.witness_point == 1);
  HittingSetSpec tiny = build_real_hitting_set(0);
  CHECK_THROWS_AS(real_point_zero_test(nz, tiny), std::invalid_argument);
}

TEST_CASE("real point tester survives a many-rooted 2-term expression") {
  // (X-2)^3 - (X-2) = (X-1)(X-2)(X-3): vanishes at 1, 2 and 3, so any
  // 3-point prefix of the integers would be fooled.
  Expression trap = make(-2, 1, {{1, 0, 3}, {-1, 0, 1}});
  Verdict v = real_point_zero_test(trap, build_real_hitting_set(1));
  REQUIRE(v.result == ZeroResult::Nonzero);
  // normalize strips (X-2)^1, leaving (X-2)^2 - 1 with roots 1 and 3 only
  CHECK(*v.witness_point == 2);
}

TEST_CASE("testers agree with the oracle on random small instances") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> coeff(-3, 3), expo(0, 10), shift(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    Expression e = make(shift(rng), shift(rng), {});
    int nterms = 1 + trial % 3;
    for (int j = 0; j < nterms; ++j)
      e.terms.push_back({coeff(rng), expo(rng), expo(rng)});
    bool oracle_zero = expand_to_sparse(e).empty();
    CHECK((structural_zero_test(e).result == ZeroResult::Zero) == oracle_zero);
    ExpressionParams p = expression_params(e);
    HittingSetSpec rou = build_rou_hitting_set(p.t, p.d, p.d_prime, p.height);
    CHECK((blackbox_zero_test(e, rou).result == ZeroResult::Zero) == oracle_zero);
    HittingSetSpec real = build_real_hitting_set(p.t);
    CHECK((real_point_zero_test(e, real).result == ZeroResult::Zero) == oracle_zero);
  }
}

TEST_CASE("lower_bound_params inverts the prime count bound") {
  auto primes = primes_at_least(17, 56);
  LowerBoundCertificate cert = lower_bound_params(primes, 1, 1);
  REQUIRE(cert.certified);
  CHECK(cert.delta == 6);
  CHECK(cert.d_max == 9);
  CHECK(cert.d_prime_max >= 1000);
  CHECK(certificate_covers(cert, 8, 1000));
  CHECK_FALSE(certificate_covers(cert, cert.d_max + 1, cert.d_prime_max));

  auto fewer = primes_at_least(17, 55);
  LowerBoundCertificate weak = lower_bound_params(fewer, 1, 1);
  CHECK_FALSE(certificate_covers(weak, 8, 1000));
}

TEST_CASE("lower_bound_params rejects unusable prime sets") {
  CHECK_FALSE(lower_bound_params({5, 7}, 1, 1).certified);  // below sparsity bound
  LowerBoundCertificate tiny = lower_bound_params(primes_at_least(17, 3), 1, 1);
  CHECK_FALSE(tiny.certified);
}

TEST_CASE("refuter on the constant 1") {
  Refutation r = refute_representation(make(1, 0, {{1, 0, 0}}), {5});
  CHECK(r.status == RefutationStatus::Refuted);
  CHECK(r.witness_prime == 5);
  CHECK(r.witness_is_target);
}

TEST_CASE("refuter confirms the (X^5-1)(X^7-1) product") {
  Expression e = make(1, 0, {{1, 12, 0}, {-1, 7, 0}, {-1, 5, 0}, {1, 0, 0}});
  Refutation r = refute_representation(e, {5, 7});
  CHECK(r.status == RefutationStatus::NotRefuted);
  CHECK(r.oracle_confirmed_equality);

  Expression wrong = e;
  wrong.terms[1].c = 1;
  Refutation rw = refute_representation(wrong, {5, 7});
  CHECK(rw.status == RefutationStatus::Refuted);
  REQUIRE(rw.witness_prime.has_value());
}
