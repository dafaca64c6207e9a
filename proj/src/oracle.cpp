#include "lacunary/oracle.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace lacunary {

SparsePoly expand_to_sparse(const Expression& expr, const mpz_class& term_limit) {
  mpz_class cost = 0;
  for (const auto& term : expr.terms) {
    if (term.alpha < 0 || term.beta < 0)
      throw std::invalid_argument("exponents must be naturals");
    cost += term.beta + 1;
  }
  if (cost > term_limit)
    throw GuardError("expansion cost exceeds the term limit");

  SparsePoly poly;
  auto add = [&poly](const mpz_class& exponent, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = poly.emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) poly.erase(it);
    }
  };

  for (const auto& term : expr.terms) {
    if (term.c == 0) continue;
    unsigned long beta = term.beta.get_ui();  // cost check bounds beta already
    if (expr.b == 0) {
      add(term.alpha, term.c * rational_pow(expr.a, term.beta, 64));
      continue;
    }
    if (expr.a == 0) {
      add(term.alpha + term.beta, term.c * rational_pow(expr.b, term.beta, 64));
      continue;
    }
    // w_k = c * C(beta, k) * a^(beta-k) * b^k, built incrementally.
    mpq_class w = term.c * rational_pow(expr.a, term.beta, 64);
    mpq_class ratio = expr.b / expr.a;
    for (unsigned long k = 0;; ++k) {
      add(term.alpha + k, w);
      if (k == beta) break;
      w *= ratio;
      w *= beta - k;
      w /= k + 1;
    }
  }
  return poly;
}

namespace {

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

std::uint64_t mpz_mod_u64(const mpz_class& v, std::uint64_t q) {
  mpz_class r = v % q;
  if (r < 0) r += q;
  return r.get_ui();
}

std::uint64_t mpq_mod_u64(const mpq_class& v, std::uint64_t q) {
  std::uint64_t den = mpz_mod_u64(v.get_den(), q);
  if (den == 0)
    throw std::invalid_argument("evaluation prime divides a coefficient denominator");
  return mulmod(mpz_mod_u64(v.get_num(), q), powmod(den, q - 2, q), q);
}

// base^e mod q with the exponent reduced mod q-1 (Fermat), valid only when
// the reduced base is nonzero; callers handle base == 0 explicitly.
std::uint64_t lacunary_powmod(std::uint64_t base, const mpz_class& e, std::uint64_t q) {
  return powmod(base, mpz_fdiv_ui(e.get_mpz_t(), q - 1), q);
}

}  // namespace

std::uint64_t random_eval_mod(const Expression& expr, std::uint64_t q, std::uint64_t x) {
  if (q < 3) throw std::invalid_argument("evaluation modulus must be an odd prime");
  x %= q;
  std::uint64_t a = mpq_mod_u64(expr.a, q);
  std::uint64_t b = mpq_mod_u64(expr.b, q);
  std::uint64_t shift = (a + mulmod(b, x, q)) % q;
  std::uint64_t acc = 0;
  for (const auto& term : expr.terms) {
    if (term.alpha < 0 || term.beta < 0)
      throw std::invalid_argument("exponents must be naturals");
    std::uint64_t value = mpq_mod_u64(term.c, q);
    if (x == 0)
      value = (term.alpha == 0) ? value : 0;
    else
      value = mulmod(value, lacunary_powmod(x, term.alpha, q), q);
    if (shift == 0)
      value = (term.beta == 0) ? value : 0;
    else
      value = mulmod(value, lacunary_powmod(shift, term.beta, q), q);
    acc = (acc + value) % q;
  }
  return acc;
}

std::uint64_t draw_eval_point(std::uint64_t q, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
  return dist(rng);
}

namespace {

using Dense = std::vector<mpq_class>;  // coefficient i of X^i; no leading zeros

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense derivative(const Dense& p) {
  Dense d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * mpq_class(i));
  trim(d);
  return d;
}

// Scales by a positive rational so the coefficients become coprime integers;
// sign-preserving, which is all the Sturm counts need.
void make_primitive(Dense& p) {
  if (p.empty()) return;
  mpz_class den = 1, num = 0;
  for (const auto& c : p) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
  }
  mpq_class scale(den, num);
  scale.canonicalize();
  for (auto& c : p) {
    c *= scale;
    c.canonicalize();
  }
}

Dense remainder(Dense num, const Dense& den) {
  while (num.size() >= den.size()) {
    mpq_class factor = num.back() / den.back();
    std::size_t offset = num.size() - den.size();
    for (std::size_t i = 0; i < den.size(); ++i) num[offset + i] -= factor * den[i];
    trim(num);
    if (num.size() < den.size()) break;
  }
  trim(num);
  return num;
}

Dense quotient(Dense num, const Dense& den) {
  Dense q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpq_class(0));
  while (num.size() >= den.size()) {
    mpq_class factor = num.back() / den.back();
    std::size_t offset = num.size() - den.size();
    q[offset] = factor;
    for (std::size_t i = 0; i < den.size(); ++i) num[offset + i] -= factor * den[i];
    trim(num);
  }
  trim(q);
  return q;
}

Dense poly_gcd(Dense u, Dense v) {
  while (!v.empty()) {
    Dense r = remainder(std::move(u), v);
    make_primitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  return u;
}

int sgn(const mpq_class& c) { return c > 0 ? 1 : (c < 0 ? -1 : 0); }

std::uint64_t sign_variations_at_infinity(const std::vector<Dense>& chain, int direction) {
  std::uint64_t variations = 0;
  int prev = 0;
  for (const auto& p : chain) {
    if (p.empty()) continue;
    int s = sgn(p.back());
    if (direction < 0 && (p.size() - 1) % 2 == 1) s = -s;
    if (prev != 0 && s != 0 && s != prev) ++variations;
    if (s != 0) prev = s;
  }
  return variations;
}

constexpr std::size_t kMaxSturmDegree = 4096;

}  // namespace

std::uint64_t real_root_count(const SparsePoly& poly) {
  if (poly.empty()) throw std::invalid_argument("the zero polynomial has every real root");
  Dense p;
  for (const auto& [e, c] : poly) {
    if (e < 0) throw std::invalid_argument("exponents must be naturals");
    if (e > kMaxSturmDegree) throw GuardError("degree beyond the Sturm degree cap");
    std::size_t i = e.get_ui();
    if (p.size() <= i) p.resize(i + 1, mpq_class(0));
    p[i] = c;
  }
  trim(p);
  if (p.size() <= 1) return 0;  // nonzero constant

  // Squarefree part, so the variation difference counts distinct roots.
  Dense d = derivative(p);
  Dense g = poly_gcd(p, d);
  Dense f = (g.size() > 1) ? quotient(std::move(p), g) : std::move(p);
  make_primitive(f);
  if (f.size() <= 1) return 0;

  std::vector<Dense> chain;
  chain.push_back(f);
  chain.push_back(derivative(f));
  while (chain.back().size() > 1) {
    Dense r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;  // cannot happen for squarefree f, kept defensive
    for (auto& c : r) c = -c;
    make_primitive(r);
    chain.push_back(std::move(r));
  }
  return sign_variations_at_infinity(chain, -1) - sign_variations_at_infinity(chain, +1);
}

}  // namespace lacunary
