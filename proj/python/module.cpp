#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "lacunary/heights.hpp"
#include "lacunary/hitting.hpp"
#include "lacunary/json_io.hpp"
#include "lacunary/oracle.hpp"
#include "lacunary/tester.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace lacunary;

namespace {

// Bignums cross the boundary as decimal strings; JSON documents as strings.

Expression expr_from_string(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw std::invalid_argument("input is not valid JSON");
  return expression_from_json(doc);
}

std::string verdict_to_string(const Verdict& v) {
  json out;
  out["verdict"] = v.result == ZeroResult::Zero ? "zero" : "nonzero";
  if (v.witness_prime) out["witness"] = {{"prime", *v.witness_prime}};
  if (v.witness_point) out["witness"] = {{"point", rational_to_string(*v.witness_point)}};
  return out.dump();
}

std::string py_zero_test(const std::string& expr_json, const std::string& mode) {
  Expression expr = expr_from_string(expr_json);
  if (mode == "structural") return verdict_to_string(structural_zero_test(expr));
  ExpressionParams p = expression_params(expr);
  if (mode == "blackbox") {
    HittingSetSpec spec = build_rou_hitting_set(p.t, p.d, p.d_prime, p.height);
    return verdict_to_string(blackbox_zero_test(expr, spec));
  }
  if (mode == "real") {
    return verdict_to_string(real_point_zero_test(expr, build_real_hitting_set(p.t)));
  }
  if (mode == "oracle") {
    json out;
    out["verdict"] = expand_to_sparse(expr).empty() ? "zero" : "nonzero";
    return out.dump();
  }
  throw std::invalid_argument("unknown mode: " + mode);
}

std::string py_expand(const std::string& expr_json) {
  json out = json::object();
  for (const auto& [e, c] : expand_to_sparse(expr_from_string(expr_json)))
    out[e.get_str()] = rational_to_string(c);
  return out.dump();
}

std::string py_hitset(std::size_t t, const std::string& d, const std::string& d_prime,
                      const std::string& M, const std::string& kind) {
  if (kind == "real") return serialize_spec(build_real_hitting_set(t));
  if (kind != "rou") throw std::invalid_argument("unknown hitting set kind: " + kind);
  return serialize_spec(build_rou_hitting_set(t, parse_natural(d),
                                              parse_natural(d_prime), parse_natural(M)));
}

std::uint64_t py_gap_delta(std::size_t t, const std::string& M) {
  return gap_delta(t, parse_natural(M));
}

std::uint64_t py_prime_count_bound(std::size_t t, const std::string& d,
                                   const std::string& d_prime, std::uint64_t delta) {
  return prime_count_bound(t, parse_natural(d), parse_natural(d_prime), delta);
}

std::string py_projective_height(const std::vector<std::string>& tuple) {
  std::vector<mpq_class> c;
  for (const auto& s : tuple) c.push_back(parse_rational(s));
  return projective_height(c).get_str();
}

std::string py_refute(const std::string& expr_json,
                      const std::vector<std::uint64_t>& targets,
                      std::size_t extra_primes) {
  Refutation r = refute_representation(expr_from_string(expr_json), targets,
                                       kDefaultSizeGuard, extra_primes);
  json out;
  out["status"] = r.status == RefutationStatus::Refuted ? "refuted" : "not_refuted";
  out["oracle_confirmed_equality"] = r.oracle_confirmed_equality;
  if (r.witness_prime)
    out["witness"] = {{"prime", *r.witness_prime}, {"is_target", r.witness_is_target}};
  return out.dump();
}

double py_algebraic_height(const std::string& a, const std::string& b, std::uint64_t n) {
  return algebraic_height_numeric(parse_rational(a), parse_rational(b), n);
}

std::uint64_t py_real_root_count(const std::string& poly_json) {
  json doc = json::parse(poly_json, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw std::invalid_argument("expected a JSON object {exponent: coefficient}");
  SparsePoly poly;
  for (const auto& [key, value] : doc.items())
    poly[parse_natural(key)] = parse_rational(value.get<std::string>());
  return real_root_count(poly);
}

}  // namespace

PYBIND11_MODULE(_lacunary, m) {
  m.doc() = "identity testing for lacunary shifted-power expressions";
  py::register_exception<GuardError>(m, "GuardError");
  m.def("zero_test", &py_zero_test, py::arg("expression_json"),
        py::arg("mode") = "structural");
  m.def("expand", &py_expand, py::arg("expression_json"));
  m.def("hitset", &py_hitset, py::arg("t"), py::arg("d") = "1",
        py::arg("d_prime") = "1", py::arg("M") = "1", py::arg("kind") = "rou");
  m.def("gap_delta", &py_gap_delta, py::arg("t"), py::arg("M"));
  m.def("prime_count_bound", &py_prime_count_bound, py::arg("t"), py::arg("d"),
        py::arg("d_prime"), py::arg("delta"));
  m.def("projective_height", &py_projective_height, py::arg("tuple"));
  m.def("refute", &py_refute, py::arg("expression_json"), py::arg("targets"),
        py::arg("extra_primes") = 3);
  m.def("algebraic_height", &py_algebraic_height, py::arg("a"), py::arg("b"),
        py::arg("n"));
  m.def("real_root_count", &py_real_root_count, py::arg("poly_json"));
}
