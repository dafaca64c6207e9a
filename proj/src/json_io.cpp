#include "lacunary/json_io.hpp"

#include <regex>
#include <stdexcept>

namespace lacunary {

mpq_class parse_rational(const std::string& text) {
  static const std::regex pattern(R"(-?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(text, pattern))
    throw std::invalid_argument("malformed rational: " + text);
  mpq_class x;
  if (x.set_str(text, 10) != 0 || x.get_den() == 0)
    throw std::invalid_argument("malformed rational: " + text);
  x.canonicalize();
  return x;
}

std::string rational_to_string(const mpq_class& x) { return x.get_str(); }

mpz_class parse_natural(const std::string& text) {
  static const std::regex pattern(R"([0-9]+)");
  if (!std::regex_match(text, pattern))
    throw std::invalid_argument("malformed natural: " + text);
  return mpz_class(text);
}

Expression expression_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("a") || !doc.contains("b") ||
      !doc.contains("terms") || !doc["terms"].is_array())
    throw std::invalid_argument("expression document needs a, b and a terms array");
  Expression expr;
  expr.a = parse_rational(doc["a"].get<std::string>());
  expr.b = parse_rational(doc["b"].get<std::string>());
  for (const auto& item : doc["terms"]) {
    if (!item.is_object() || !item.contains("c") || !item.contains("alpha") ||
        !item.contains("beta"))
      throw std::invalid_argument("each term needs c, alpha and beta");
    Term term;
    term.c = parse_rational(item["c"].get<std::string>());
    term.alpha = parse_natural(item["alpha"].get<std::string>());
    term.beta = parse_natural(item["beta"].get<std::string>());
    expr.terms.push_back(std::move(term));
  }
  if (expr.terms.empty())
    throw std::invalid_argument("expression document has no terms");
  return expr;
}

nlohmann::json expression_to_json(const Expression& expr) {
  nlohmann::json doc;
  doc["a"] = rational_to_string(expr.a);
  doc["b"] = rational_to_string(expr.b);
  doc["terms"] = nlohmann::json::array();
  for (const auto& term : expr.terms) {
    doc["terms"].push_back({{"c", rational_to_string(term.c)},
                            {"alpha", term.alpha.get_str()},
                            {"beta", term.beta.get_str()}});
  }
  return doc;
}

}  // namespace lacunary
