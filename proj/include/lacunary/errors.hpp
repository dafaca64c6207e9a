#pragma once

#include <stdexcept>
#include <string>

namespace lacunary {

/// Raised when an exact computation would exceed a configured size guard
/// (e.g. a shifted-power exponent whose bit length makes coefficient
/// expansion infeasible). Distinct from input errors so callers can map it
/// to a dedicated exit code.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Default bound on the bit length of exponents entering exact expansion or
// exact ring exponentiation. Permits exponents up to 2^20; beyond that the
// structural tester is the intended path.
inline constexpr unsigned kDefaultSizeGuard = 21;

// Default feasibility bound for full monomial expansion.
inline constexpr unsigned long kDefaultTermLimit = 1ul << 20;

}  // namespace lacunary
