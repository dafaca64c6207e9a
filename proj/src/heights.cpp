#include "lacunary/heights.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "lacunary/numtheory.hpp"

namespace lacunary {

mpz_class rational_height(const mpq_class& x) {
  mpz_class num = abs(x.get_num());
  mpz_class den = x.get_den();
  return num > den ? num : den;
}

mpz_class projective_height(const std::vector<mpq_class>& c) {
  if (c.empty()) throw std::invalid_argument("projective height of an empty tuple");
  mpz_class common_den = 1;
  for (const auto& x : c)
    mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_class g = 0;
  std::vector<mpz_class> scaled;
  scaled.reserve(c.size());
  for (const auto& x : c) {
    mpz_class v = x.get_num() * (common_den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    scaled.push_back(std::move(v));
  }
  if (g == 0)
    throw std::invalid_argument("projective height is undefined for the zero tuple");
  mpz_class best = 0;
  for (auto& v : scaled) {
    mpz_class m = abs(v) / g;
    if (m > best) best = m;
  }
  return best;
}

mpz_class poly_height_bound(const std::vector<mpq_class>& c) {
  return mpz_class(c.size()) * projective_height(c);
}

bool is_excluded_pair(const mpq_class& a, const mpq_class& b) {
  if (a == 0) return b == 0 || b == 1 || b == -1;
  if (b == 0) return a == 1 || a == -1;
  return false;
}

double algebraic_height_numeric(const mpq_class& a, const mpq_class& b,
                                std::uint64_t n, double precision) {
  if (n == 0) throw std::invalid_argument("root of unity order must be >= 1");
  if (!(precision > 0)) throw std::invalid_argument("precision must be positive");
  mpz_class common_den;
  mpz_lcm(common_den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  long double log_den = std::log(common_den.get_d());
  long double av = static_cast<long double>(a.get_d());
  long double bv = static_cast<long double>(b.get_d());
  std::uint64_t phi = 0;
  long double sum = 0.0L;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    ++phi;
    long double angle =
        2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) / n;
    long double re = av + bv * std::cos(angle);
    long double im = bv * std::sin(angle);
    long double mag = std::sqrt(re * re + im * im);
    if (mag > 1.0L) sum += std::log(mag);
  }
  sum += static_cast<long double>(phi) * log_den;
  return static_cast<double>(std::exp(sum / static_cast<long double>(phi)));
}

}  // namespace lacunary
