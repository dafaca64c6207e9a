#include <doctest.h>

#include "lacunary/cyclo.hpp"
#include "lacunary/oracle.hpp"

using namespace lacunary;

namespace {

CycloElement from_dense(std::uint64_t p, const std::vector<mpq_class>& coeffs) {
  CycloElement u(p);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    u += coeffs[i] * CycloElement::monomial(mpz_class(i), p);
  return u;
}

CycloElement reduce_sparse(const SparsePoly& poly, std::uint64_t p) {
  CycloElement u(p);
  for (const auto& [e, c] : poly) u += c * CycloElement::monomial(e, p);
  return u;
}

}  // namespace

TEST_CASE("constructors and basic observers") {
  CycloElement zero(5);
  CHECK(zero.is_zero());
  CHECK(zero.modulus() == 5);
  CHECK(zero.dense() == std::vector<mpq_class>(5, 0));

  CHECK(CycloElement::one(5).coeff(0) == 1);
  CHECK(CycloElement::one(5).coeff(1) == 0);
  CHECK_THROWS_AS(CycloElement(6), std::invalid_argument);
  CHECK_THROWS_AS(CycloElement::one(5).coeff(5), std::out_of_range);
}

TEST_CASE("monomial reduces the exponent mod p") {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 100);
  CycloElement u = CycloElement::monomial(big, 7);
  CHECK(u.coeff(4) == 1);  // 10^100 = 4 mod 7
  CHECK(u.nonzero_count() == 1);
  CHECK_THROWS_AS(CycloElement::monomial(mpz_class(-1), 7), std::invalid_argument);
}

TEST_CASE("(1+X)^5 in R_5") {
  CycloElement u = CycloElement::linear(1, 1, 5).pow(5);
  CHECK(u.dense() == std::vector<mpq_class>{2, 5, 10, 10, 5});
}

TEST_CASE("X^p - 1 vanishes everywhere, 1+...+X^(p-1) only at primitive roots") {
  CycloElement xp_minus_1 =
      CycloElement::monomial(mpz_class(5), 5) - CycloElement::one(5);
  CHECK(vanishes_on_all_roots(xp_minus_1));
  CHECK(vanishes_on_primitive_roots(xp_minus_1));

  CycloElement phi(5);
  for (std::uint64_t i = 0; i < 5; ++i)
    phi += CycloElement::monomial(mpz_class(i), 5);
  CHECK_FALSE(vanishes_on_all_roots(phi));
  CHECK(vanishes_on_primitive_roots(phi));

  CHECK_FALSE(vanishes_on_primitive_roots(CycloElement::one(5)));
  CHECK_FALSE(vanishes_on_primitive_roots(CycloElement::linear(1, 1, 5)));
}

TEST_CASE("ring laws on fixed elements") {
  CycloElement u = from_dense(7, {1, mpq_class(1, 2), 0, -3});
  CycloElement v = from_dense(7, {0, 2, 0, 0, mpq_class(5, 3)});
  CycloElement w = from_dense(7, {-1, 0, 0, 0, 0, 0, mpq_class(7, 4)});

  CHECK(u * v == v * u);
  CHECK((u * v) * w == u * (v * w));
  CHECK(u * (v + w) == u * v + u * w);
  CHECK(u * CycloElement::one(7) == u);
  CHECK((u - u).is_zero());
  CHECK(mpq_class(0) * u == CycloElement(7));
  CHECK(mpq_class(2) * u + mpq_class(3) * u == mpq_class(5) * u);
}

TEST_CASE("pow matches repeated multiplication") {
  CycloElement u = from_dense(11, {1, -2, 0, mpq_class(1, 3)});
  CycloElement by_mul = CycloElement::one(11);
  for (int i = 0; i < 6; ++i) by_mul = by_mul * u;
  CHECK(u.pow(6) == by_mul);
  CHECK(u.pow(0) == CycloElement::one(11));
  CHECK_THROWS_AS(u.pow(mpz_class(1) << 40), GuardError);
  CHECK_THROWS_AS(u.pow(-1), std::invalid_argument);
}

TEST_CASE("mismatched moduli rejected") {
  CHECK_THROWS_AS(CycloElement::one(5) + CycloElement::one(7), std::invalid_argument);
  CHECK_THROWS_AS(CycloElement::one(5) * CycloElement::one(7), std::invalid_argument);
}

TEST_CASE("eval_expression_mod agrees with reducing the full expansion") {
  Expression expr;
  expr.a = 2;
  expr.b = mpq_class(-1, 3);
  expr.terms = {{mpq_class(3), 4, 6}, {mpq_class(-1, 2), 9, 2}, {mpq_class(5), 0, 0}};
  SparsePoly expanded = expand_to_sparse(expr);
  for (std::uint64_t p : {5, 7, 13}) {
    CHECK(eval_expression_mod(expr, p) == reduce_sparse(expanded, p));
  }
}
