#include "lacunary/cyclo.hpp"

#include <algorithm>
#include <stdexcept>

#include "lacunary/numtheory.hpp"

namespace lacunary {

namespace {

const mpq_class kZero = 0;

void check_prime_modulus(std::uint64_t p) {
  if (p >= (1ull << 32))
    throw std::invalid_argument("cyclotomic modulus beyond 2^32 is not supported");
  if (!is_prime(p))
    throw std::invalid_argument("cyclotomic modulus must be prime");
}

}  // namespace

// Integer-cleared view of an element: value = coeffs / den. Convolutions run
// on integers only, with a single canonicalization when converting back.
struct CycloOps {
  struct Scaled {
    mpz_class den;
    std::vector<std::pair<std::uint64_t, mpz_class>> coeffs;  // sorted, nonzero
  };

  static Scaled to_scaled(const CycloElement& u) {
    Scaled s;
    s.den = 1;
    for (const auto& [i, q] : u.coeffs_)
      mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), q.get_den().get_mpz_t());
    s.coeffs.reserve(u.coeffs_.size());
    for (const auto& [i, q] : u.coeffs_)
      s.coeffs.emplace_back(i, q.get_num() * (s.den / q.get_den()));
    return s;
  }

  static CycloElement from_scaled(Scaled&& s, std::uint64_t p) {
    CycloElement out(p, CycloElement::Unchecked{});
    out.coeffs_.reserve(s.coeffs.size());
    for (auto& [i, z] : s.coeffs) {
      mpq_class q(std::move(z), s.den);
      q.canonicalize();
      out.coeffs_.emplace_back(i, std::move(q));
    }
    return out;
  }

  static void combine_sorted(std::vector<std::pair<std::uint64_t, mpz_class>>& v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
      std::uint64_t idx = v[i].first;
      mpz_class sum = std::move(v[i].second);
      for (++i; i < v.size() && v[i].first == idx; ++i) sum += v[i].second;
      if (sum != 0) v[out++] = {idx, std::move(sum)};
    }
    v.resize(out);
  }

  static Scaled mul(const Scaled& u, const Scaled& v, std::uint64_t p) {
    Scaled r;
    r.den = u.den * v.den;
    r.coeffs.reserve(u.coeffs.size() * v.coeffs.size());
    for (const auto& [i, ui] : u.coeffs) {
      for (const auto& [j, vj] : v.coeffs) {
        std::uint64_t k = i + j;
        if (k >= p) k -= p;
        r.coeffs.emplace_back(k, ui * vj);
      }
    }
    combine_sorted(r.coeffs);
    return r;
  }
};

CycloElement::CycloElement(std::uint64_t p) : p_(p) { check_prime_modulus(p); }

CycloElement CycloElement::one(std::uint64_t p) {
  CycloElement u(p);
  u.coeffs_.emplace_back(0, mpq_class(1));
  return u;
}

CycloElement CycloElement::monomial(const mpz_class& alpha, std::uint64_t p) {
  if (alpha < 0) throw std::invalid_argument("monomial exponent must be a natural");
  CycloElement u(p);
  unsigned long r = mpz_fdiv_ui(alpha.get_mpz_t(), p);
  u.coeffs_.emplace_back(r, mpq_class(1));
  return u;
}

CycloElement CycloElement::linear(const mpq_class& a, const mpq_class& b,
                                  std::uint64_t p) {
  CycloElement u(p);
  if (a != 0) u.coeffs_.emplace_back(0, a);
  if (b != 0) u.coeffs_.emplace_back(1, b);
  return u;
}

const mpq_class& CycloElement::coeff(std::uint64_t i) const {
  if (i >= p_) throw std::out_of_range("coefficient index beyond the modulus");
  auto it = std::lower_bound(
      coeffs_.begin(), coeffs_.end(), i,
      [](const auto& entry, std::uint64_t idx) { return entry.first < idx; });
  if (it != coeffs_.end() && it->first == i) return it->second;
  return kZero;
}

std::vector<mpq_class> CycloElement::dense() const {
  std::vector<mpq_class> out(p_, mpq_class(0));
  for (const auto& [i, q] : coeffs_) out[i] = q;
  return out;
}

CycloElement& CycloElement::operator+=(const CycloElement& rhs) {
  if (p_ != rhs.p_)
    throw std::invalid_argument("mismatched cyclotomic moduli");
  std::vector<std::pair<std::uint64_t, mpq_class>> merged;
  merged.reserve(coeffs_.size() + rhs.coeffs_.size());
  std::size_t i = 0, j = 0;
  while (i < coeffs_.size() || j < rhs.coeffs_.size()) {
    if (j == rhs.coeffs_.size() ||
        (i < coeffs_.size() && coeffs_[i].first < rhs.coeffs_[j].first)) {
      merged.push_back(std::move(coeffs_[i++]));
    } else if (i == coeffs_.size() || rhs.coeffs_[j].first < coeffs_[i].first) {
      merged.push_back(rhs.coeffs_[j++]);
    } else {
      mpq_class sum = coeffs_[i].second + rhs.coeffs_[j].second;
      if (sum != 0) merged.emplace_back(coeffs_[i].first, std::move(sum));
      ++i;
      ++j;
    }
  }
  coeffs_ = std::move(merged);
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& rhs) {
  *this += mpq_class(-1) * rhs;
  return *this;
}

CycloElement operator*(const CycloElement& lhs, const CycloElement& rhs) {
  if (lhs.modulus() != rhs.modulus())
    throw std::invalid_argument("mismatched cyclotomic moduli");
  auto u = CycloOps::to_scaled(lhs);
  auto v = CycloOps::to_scaled(rhs);
  return CycloOps::from_scaled(CycloOps::mul(u, v, lhs.modulus()), lhs.modulus());
}

CycloElement operator*(const mpq_class& s, CycloElement rhs) {
  if (s == 0) {
    rhs.coeffs_.clear();
    return rhs;
  }
  for (auto& [i, q] : rhs.coeffs_) q *= s;
  return rhs;
}

bool CycloElement::operator==(const CycloElement& rhs) const {
  return p_ == rhs.p_ && coeffs_ == rhs.coeffs_;
}

CycloElement CycloElement::pow(const mpz_class& e, unsigned size_guard) const {
  if (e < 0) throw std::invalid_argument("pow requires a natural exponent");
  if (e == 0) return one(p_);
  if (mpz_sizeinbase(e.get_mpz_t(), 2) > size_guard)
    throw GuardError(
        "exponent bit length exceeds the size guard for exact ring powers; "
        "use the structural tester for lacunary exponents");
  auto base = CycloOps::to_scaled(*this);
  CycloOps::Scaled result;
  result.den = 1;
  result.coeffs.emplace_back(0, mpz_class(1));
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t k = bits; k-- > 0;) {
    result = CycloOps::mul(result, result, p_);
    if (mpz_tstbit(e.get_mpz_t(), k)) result = CycloOps::mul(result, base, p_);
  }
  return CycloOps::from_scaled(std::move(result), p_);
}

bool vanishes_on_all_roots(const CycloElement& u) { return u.is_zero(); }

bool vanishes_on_primitive_roots(const CycloElement& u) {
  const auto& entries = u.entries();
  if (entries.empty()) return true;
  if (entries.size() != u.modulus()) return false;
  const mpq_class& first = entries.front().second;
  for (const auto& [i, q] : entries)
    if (q != first) return false;
  return true;
}

CycloElement eval_expression_mod(const Expression& expr, std::uint64_t p,
                                 unsigned size_guard) {
  CycloElement acc(p);
  CycloElement base = CycloElement::linear(expr.a, expr.b, p);
  for (const auto& term : expr.terms) {
    CycloElement value =
        CycloElement::monomial(term.alpha, p) * base.pow(term.beta, size_guard);
    acc += term.c * value;
  }
  return acc;
}

}  // namespace lacunary
