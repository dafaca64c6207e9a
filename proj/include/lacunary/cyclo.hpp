#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lacunary/errors.hpp"
#include "lacunary/expression.hpp"

namespace lacunary {

/// An element of R_p = Q[X]/(X^p - 1) for prime p: a length-p sequence of
/// exact rational coefficients. Stored sparsely (only nonzero coefficients);
/// all observable values are exact and canonical.
class CycloElement {
 public:
  /// The zero element of R_p. Rejects non-prime p.
  explicit CycloElement(std::uint64_t p);

  static CycloElement one(std::uint64_t p);
  /// X^(alpha mod p); the reduction of the monomial X^alpha.
  static CycloElement monomial(const mpz_class& alpha, std::uint64_t p);
  /// a + b*X.
  static CycloElement linear(const mpq_class& a, const mpq_class& b, std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  /// Coefficient of X^i (zero when not stored). Rejects i >= p.
  const mpq_class& coeff(std::uint64_t i) const;
  std::vector<mpq_class> dense() const;
  std::size_t nonzero_count() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }

  CycloElement& operator+=(const CycloElement& rhs);
  CycloElement& operator-=(const CycloElement& rhs);
  friend CycloElement operator+(CycloElement lhs, const CycloElement& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend CycloElement operator-(CycloElement lhs, const CycloElement& rhs) {
    lhs -= rhs;
    return lhs;
  }
  /// Cyclic convolution: coefficient k of the product is
  /// sum_{i+j == k mod p} u_i v_j, exact rational arithmetic.
  friend CycloElement operator*(const CycloElement& lhs, const CycloElement& rhs);
  friend CycloElement operator*(const mpq_class& s, CycloElement rhs);
  bool operator==(const CycloElement& rhs) const;

  /// u^e by square-and-multiply. Rejects exponents whose bit length exceeds
  /// size_guard: coefficient bit size grows linearly in e, so exact
  /// exponentiation beyond the guard is infeasible (use the structural
  /// tester instead).
  CycloElement pow(const mpz_class& e, unsigned size_guard = kDefaultSizeGuard) const;

  const std::vector<std::pair<std::uint64_t, mpq_class>>& entries() const {
    return coeffs_;
  }

 private:
  struct Unchecked {};
  CycloElement(std::uint64_t p, Unchecked) : p_(p) {}

  std::uint64_t p_;
  // Sorted by index, no zero coefficients stored.
  std::vector<std::pair<std::uint64_t, mpq_class>> coeffs_;

  friend struct CycloOps;
};

/// True iff every coefficient is zero (the residue vanishes at all p-th
/// roots of unity).
bool vanishes_on_all_roots(const CycloElement& u);

/// True iff all p coefficients are equal, i.e. u is a rational multiple of
/// 1 + X + ... + X^(p-1): exactly divisibility by the cyclotomic polynomial
/// for prime p, so the residue vanishes at every primitive p-th root.
bool vanishes_on_primitive_roots(const CycloElement& u);

/// sum_j c_j * X^(alpha_j mod p) * (a + b X)^(beta_j) in R_p: the reduction
/// of the represented polynomial modulo X^p - 1.
CycloElement eval_expression_mod(const Expression& expr, std::uint64_t p,
                                 unsigned size_guard = kDefaultSizeGuard);

}  // namespace lacunary
