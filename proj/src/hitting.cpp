#include "lacunary/hitting.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lacunary/errors.hpp"
#include "lacunary/numtheory.hpp"

namespace lacunary {

const GapConstant& GapConstant::defaults() {
  static const GapConstant instance{
      mpq_class(193, 1000),
      "lower bound on log2(C) for C = 5^(1/12), the explicit height bound "
      "for abelian extensions"};
  return instance;
}

namespace {

std::uint64_t to_u64(const mpz_class& v, const char* what) {
  if (!v.fits_ulong_p()) throw std::overflow_error(what);
  return v.get_ui();
}

}  // namespace

std::uint64_t gap_delta(std::size_t t, const mpz_class& M, const GapConstant& C) {
  if (t == 0) return 0;
  if (M < 1) throw std::invalid_argument("height bound M must be >= 1");
  if (C.c_log2_lower <= 0)
    throw std::invalid_argument("gap constant lower bound must be positive");
  mpz_class arg = mpz_class(t) * mpz_class(t + 1) * M;
  mpz_class log_arg = ceil_log2(arg);
  // ceil( log_arg / c_log2_lower ) in exact rational arithmetic.
  mpz_class delta;
  mpz_cdiv_q(delta.get_mpz_t(),
             mpz_class(log_arg * C.c_log2_lower.get_den()).get_mpz_t(),
             C.c_log2_lower.get_num().get_mpz_t());
  return to_u64(delta, "gap threshold does not fit in 64 bits");
}

std::uint64_t prime_count_bound(std::size_t t, const mpz_class& d,
                                const mpz_class& d_prime, std::uint64_t delta) {
  if (d < 0 || d_prime < 0)
    throw std::invalid_argument("degree bounds must be naturals");
  mpz_class sparse_side = ceil_log2(d + d_prime + 1);
  mpz_class block_side =
      (mpz_class(delta) * t + 1) * ceil_log2(d + mpz_class(delta) * t + 1);
  mpz_class count = mpz_class(t + 1) * std::max(sparse_side, block_side);
  return to_u64(count, "prime count bound does not fit in 64 bits");
}

HittingSetSpec build_rou_hitting_set(std::size_t t, const mpz_class& d,
                                     const mpz_class& d_prime, const mpz_class& M,
                                     const GapConstant& C) {
  std::uint64_t delta = gap_delta(t, M, C);
  // The bound can be 0 for degenerate parameters; one prime keeps the spec usable.
  std::uint64_t count = std::max<std::uint64_t>(1, prime_count_bound(t, d, d_prime, delta));
  mpz_class sparsity = mpz_class(t + 1) * (mpz_class(delta) * t + 1);
  std::uint64_t min_prime =
      std::max<std::uint64_t>(5, to_u64(sparsity, "sparsity bound overflow") + 1);
  HittingSetSpec spec;
  spec.kind = HittingSetKind::RootsOfUnity;
  spec.primes = primes_at_least(min_prime, count);
  spec.params = {t, d, d_prime, M, delta};
  return spec;
}

HittingSetSpec build_real_hitting_set(std::size_t t) {
  HittingSetSpec spec;
  spec.kind = HittingSetKind::RealPoints;
  // t+1 terms admit at most 6(t+1)-4 distinct real roots, so 6(t+1)-3
  // distinct points always contain a non-root.
  std::size_t count = 6 * t + 3;
  spec.points.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) spec.points.emplace_back(i);
  spec.params = {t, 0, 0, 1, 0};
  return spec;
}

std::string serialize_spec(const HittingSetSpec& spec) {
  std::ostringstream out;
  out << (spec.kind == HittingSetKind::RootsOfUnity ? "rou" : "real") << ' '
      << spec.params.t << ' ' << spec.params.d << ' ' << spec.params.d_prime << ' '
      << spec.params.height_bound << ' ' << spec.params.delta << '\n';
  if (spec.kind == HittingSetKind::RootsOfUnity) {
    for (std::uint64_t p : spec.primes) out << p << '\n';
  } else {
    for (const auto& x : spec.points) out << x << '\n';
  }
  return out.str();
}

HittingSetSpec parse_spec(const std::string& text) {
  std::istringstream in(text);
  std::string kind;
  HittingSetSpec spec;
  long long t_in = -1;
  if (!(in >> kind >> t_in >> spec.params.d >> spec.params.d_prime >>
        spec.params.height_bound >> spec.params.delta) ||
      t_in < 0)
    throw std::invalid_argument("malformed hitting set header");
  spec.params.t = static_cast<std::size_t>(t_in);
  if (kind == "rou") {
    spec.kind = HittingSetKind::RootsOfUnity;
    std::uint64_t p;
    while (in >> p) spec.primes.push_back(p);
  } else if (kind == "real") {
    spec.kind = HittingSetKind::RealPoints;
    std::string token;
    while (in >> token) {
      mpq_class x;
      if (x.set_str(token, 10) != 0 || x.get_den() == 0)
        throw std::invalid_argument("malformed rational point: " + token);
      x.canonicalize();
      spec.points.push_back(std::move(x));
    }
  } else {
    throw std::invalid_argument("unknown hitting set kind: " + kind);
  }
  if (!in.eof()) throw std::invalid_argument("malformed hitting set entry");
  validate_spec(spec);
  return spec;
}

void validate_spec(const HittingSetSpec& spec) {
  if (spec.kind == HittingSetKind::RootsOfUnity) {
    if (!spec.points.empty())
      throw std::invalid_argument("roots-of-unity spec must not carry points");
    std::uint64_t prev = 0;
    for (std::uint64_t p : spec.primes) {
      if (p < 5) throw std::invalid_argument("hitting set primes must be >= 5");
      if (p <= prev)
        throw std::invalid_argument("hitting set primes must be strictly increasing");
      if (!is_prime(p))
        throw std::invalid_argument("hitting set entry is not prime");
      prev = p;
    }
    std::uint64_t required = prime_count_bound(spec.params.t, spec.params.d,
                                               spec.params.d_prime, spec.params.delta);
    if (spec.primes.size() < required)
      throw std::invalid_argument("hitting set has fewer primes than its parameters require");
  } else {
    if (!spec.primes.empty())
      throw std::invalid_argument("real-point spec must not carry primes");
    std::set<mpq_class> distinct(spec.points.begin(), spec.points.end());
    if (distinct.size() != spec.points.size())
      throw std::invalid_argument("real hitting set points must be pairwise distinct");
    std::size_t required = 6 * spec.params.t + 3;
    if (spec.points.size() < required)
      throw std::invalid_argument("real hitting set has fewer points than 6(t+1)-3");
  }
}

}  // namespace lacunary
