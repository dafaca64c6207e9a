#pragma once

#include <string>

#include <gmpxx.h>
#include <json.hpp>

#include "lacunary/expression.hpp"

namespace lacunary {

/// Parses `-?digits(/digits)?` with nonzero denominator; canonical result.
mpq_class parse_rational(const std::string& text);
std::string rational_to_string(const mpq_class& x);

/// Unbounded-length decimal natural.
mpz_class parse_natural(const std::string& text);

/// Document form: {"a": "...", "b": "...",
///                 "terms": [{"c": "...", "alpha": "...", "beta": "..."}]}.
/// Exponents travel as decimal strings, never native numbers.
Expression expression_from_json(const nlohmann::json& doc);
nlohmann::json expression_to_json(const Expression& expr);

}  // namespace lacunary
