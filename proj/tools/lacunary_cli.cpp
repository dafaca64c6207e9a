#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lacunary/heights.hpp"
#include "lacunary/hitting.hpp"
#include "lacunary/json_io.hpp"
#include "lacunary/numtheory.hpp"
#include "lacunary/oracle.hpp"
#include "lacunary/tester.hpp"

using nlohmann::json;
using namespace lacunary;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

std::string read_input(const std::string& path) {
  if (path == "-" || path.empty()) {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json parse_document(const std::string& path) {
  json doc = json::parse(read_input(path), nullptr, false);
  if (doc.is_discarded()) throw std::invalid_argument("input is not valid JSON");
  return doc;
}

GapConstant gap_constant(const std::string& log2_lower) {
  GapConstant C = GapConstant::defaults();
  if (!log2_lower.empty()) {
    C.c_log2_lower = parse_rational(log2_lower);
    C.provenance = "caller-supplied lower bound on log2(C)";
  }
  return C;
}

json params_json(const ExpressionParams& params, std::uint64_t delta) {
  return {{"t", params.t},
          {"d", params.d.get_str()},
          {"d_prime", params.d_prime.get_str()},
          {"M", params.height.get_str()},
          {"delta", delta}};
}

void emit(const json& doc) { std::cout << doc.dump() << '\n'; }

std::vector<std::uint64_t> parse_prime_list(const std::string& csv) {
  std::vector<std::uint64_t> out;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = std::stoull(item, &used);
    if (used != item.size()) throw std::invalid_argument("malformed list entry: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

int cmd_zero_test(const std::string& file, const std::string& mode,
                  const std::string& log2_lower, unsigned size_guard) {
  Expression expr = expression_from_json(parse_document(file));
  GapConstant C = gap_constant(log2_lower);
  ExpressionParams params = expression_params(expr);
  std::uint64_t delta = gap_delta(params.t, params.height, C);

  json out;
  Verdict verdict;
  if (mode == "structural") {
    verdict = structural_zero_test(expr, C);
    out["mode"] = "structural";
  } else if (mode == "blackbox") {
    HittingSetSpec spec =
        build_rou_hitting_set(params.t, params.d, params.d_prime, params.height, C);
    verdict = blackbox_zero_test(expr, spec, size_guard);
    out["mode"] = "blackbox";
  } else if (mode == "real") {
    HittingSetSpec spec = build_real_hitting_set(params.t);
    verdict = real_point_zero_test(expr, spec, size_guard);
    out["mode"] = "real";
  } else if (mode == "oracle") {
    SparsePoly poly = expand_to_sparse(expr);
    verdict.result = poly.empty() ? ZeroResult::Zero : ZeroResult::Nonzero;
    out["mode"] = "oracle";
  } else {
    throw std::invalid_argument("unknown mode: " + mode);
  }

  out["verdict"] = verdict.result == ZeroResult::Zero ? "zero" : "nonzero";
  out["params"] = params_json(params, delta);
  if (verdict.witness_prime) out["witness"] = {{"prime", *verdict.witness_prime}};
  if (verdict.witness_point)
    out["witness"] = {{"point", rational_to_string(*verdict.witness_point)}};
  emit(out);
  return kExitOk;
}

int cmd_hitset(std::size_t t, const std::string& d, const std::string& d_prime,
               const std::string& M, const std::string& kind,
               const std::string& log2_lower) {
  if (kind == "rou") {
    HittingSetSpec spec = build_rou_hitting_set(t, parse_natural(d),
                                                parse_natural(d_prime),
                                                parse_natural(M),
                                                gap_constant(log2_lower));
    std::cout << serialize_spec(spec);
  } else if (kind == "real") {
    std::cout << serialize_spec(build_real_hitting_set(t));
  } else {
    throw std::invalid_argument("unknown hitting set kind: " + kind);
  }
  return kExitOk;
}

int cmd_gaps(const std::string& file, const std::string& log2_lower) {
  Expression expr = expression_from_json(parse_document(file));
  GapConstant C = gap_constant(log2_lower);
  NormalizationReport rep;
  Expression norm = normalize(expr, &rep);
  json out;
  out["collapsed_to_zero"] = rep.collapsed_to_zero;
  out["rewritten_monomial"] = rep.rewritten_monomial;
  out["normalized"] = expression_to_json(norm.terms.empty() ? expr : norm);
  if (norm.terms.empty() || rep.rewritten_monomial) {
    out["blocks"] = json::array();
    out["delta"] = 0;
    out["stripped_beta"] = "0";
    emit(out);
    return kExitOk;
  }
  ExpressionParams params = expression_params(norm);
  std::uint64_t delta = gap_delta(params.t, params.height, C);
  GapDecomposition gd = gap_split(norm, delta, rep.stripped_beta);
  out["delta"] = gd.delta;
  out["stripped_beta"] = gd.stripped_beta.get_str();
  out["blocks"] = json::array();
  for (const auto& [first, last] : gd.blocks)
    out["blocks"].push_back({{"first", first}, {"last", last}});
  emit(out);
  return kExitOk;
}

int cmd_height(const std::string& file) {
  json doc = parse_document(file);
  json out;
  if (doc.is_object() && doc.contains("tuple")) {
    std::vector<mpq_class> tuple;
    for (const auto& item : doc["tuple"])
      tuple.push_back(parse_rational(item.get<std::string>()));
    out["H"] = projective_height(tuple).get_str();
  } else {
    Expression expr = expression_from_json(doc);
    ExpressionParams params = expression_params(expr);
    out["H"] = params.height.get_str();
    out["t"] = params.t;
    out["per_term"] = json::array();
    for (const auto& term : expr.terms)
      out["per_term"].push_back(rational_height(term.c).get_str());
  }
  emit(out);
  return kExitOk;
}

int cmd_refute(const std::string& file, const std::string& targets,
               std::size_t extra_primes, unsigned size_guard) {
  Expression expr = expression_from_json(parse_document(file));
  Refutation ref =
      refute_representation(expr, parse_prime_list(targets), size_guard, extra_primes);
  json out;
  out["status"] = ref.status == RefutationStatus::Refuted ? "refuted" : "not_refuted";
  out["oracle_confirmed_equality"] = ref.oracle_confirmed_equality;
  out["required_prime_count"] = ref.required_prime_count;
  if (ref.witness_prime) {
    out["witness"] = {{"prime", *ref.witness_prime},
                      {"is_target", ref.witness_is_target}};
    out["residue_summary"] = ref.residue_summary;
  }
  emit(out);
  return kExitOk;
}

int cmd_verify_heights(const std::string& orders, long max_num) {
  if (max_num < 1) throw std::invalid_argument("--max-num must be >= 1");
  json out;
  out["orders"] = json::array();
  double global_min = -1;
  for (std::uint64_t n : parse_prime_list(orders)) {
    if (n < 2) throw std::invalid_argument("orders must be >= 2");
    double order_min = -1;
    for (long an = -max_num; an <= max_num; ++an) {
      for (long ad = 1; ad <= max_num; ++ad) {
        for (long bn = -max_num; bn <= max_num; ++bn) {
          for (long bd = 1; bd <= max_num; ++bd) {
            mpq_class a(an, ad), b(bn, bd);
            a.canonicalize();
            b.canonicalize();
            if (is_excluded_pair(a, b)) continue;
            double h = algebraic_height_numeric(a, b, n);
            if (order_min < 0 || h < order_min) order_min = h;
          }
        }
      }
    }
    out["orders"].push_back({{"n", n}, {"min_height", order_min}});
    if (global_min < 0 || order_min < global_min) global_min = order_min;
  }
  out["min_height"] = global_min;
  out["threshold"] = 1.1434931131313738;  // 5^(1/12)
  out["all_above_threshold"] = global_min >= 1.1434931131313738 - 1e-9;
  emit(out);
  return kExitOk;
}

int cmd_bench(const std::string& suite) {
  using clock = std::chrono::steady_clock;
  json out;
  out["suite"] = suite;
  out["timings_ms"] = json::array();
  auto time_case = [&](const std::string& name, auto&& fn) {
    auto start = clock::now();
    fn();
    double ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
    out["timings_ms"].push_back({{"case", name}, {"ms", ms}});
  };
  if (suite == "structural") {
    for (std::size_t t : {10, 25, 50}) {
      time_case("t=" + std::to_string(t), [t] {
        Expression expr;
        expr.a = 1;
        expr.b = 1;
        mpz_class big = mpz_class(1) << 2048;
        for (std::size_t j = 0; j <= t; ++j)
          expr.terms.push_back({mpq_class(j + 1), big + j, big * (j + 1)});
        structural_zero_test(expr);
      });
    }
  } else if (suite == "blackbox") {
    for (std::size_t t : {1, 2, 3}) {
      time_case("t=" + std::to_string(t), [t] {
        Expression expr;
        expr.a = 1;
        expr.b = 1;
        for (std::size_t j = 0; j <= t; ++j)
          expr.terms.push_back({mpq_class(1), mpz_class(j), mpz_class(j)});
        HittingSetSpec spec = build_rou_hitting_set(t, 16, 16, 2);
        blackbox_zero_test(expr, spec);
      });
    }
  } else {
    throw std::invalid_argument("unknown bench suite: " + suite);
  }
  emit(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"identity testing for lacunary shifted-power expressions"};
  app.require_subcommand(1);

  std::string file = "-";
  std::string mode = "structural";
  std::string log2_lower;
  unsigned size_guard = kDefaultSizeGuard;

  auto* zero = app.add_subcommand("zero-test", "deterministic zero test");
  zero->add_option("file", file, "expression document (JSON), - for stdin");
  zero->add_option("--mode", mode)->check(CLI::IsMember({"structural", "blackbox", "real", "oracle"}));
  zero->add_option("--constant-log2-lower", log2_lower, "rational lower bound on log2(C)");
  zero->add_option("--size-guard", size_guard, "exponent bit-length guard");

  std::size_t t = 0;
  std::string d = "1", d_prime = "1", height = "1", kind = "rou";
  auto* hitset = app.add_subcommand("hitset", "emit a hitting set spec");
  hitset->add_option("t", t)->required();
  hitset->add_option("d", d);
  hitset->add_option("dprime", d_prime);
  hitset->add_option("M", height);
  hitset->add_option("--kind", kind)->check(CLI::IsMember({"rou", "real"}));
  hitset->add_option("--constant-log2-lower", log2_lower);

  auto* gaps = app.add_subcommand("gaps", "normalize and list gap blocks");
  gaps->add_option("file", file);
  gaps->add_option("--constant-log2-lower", log2_lower);

  auto* heightc = app.add_subcommand("height", "projective height of the coefficients");
  heightc->add_option("file", file);

  std::string targets;
  std::size_t extra_primes = 3;
  auto* refute = app.add_subcommand("refute", "refute a claimed product representation");
  refute->add_option("file", file);
  refute->add_option("--targets", targets, "comma-separated target primes")->required();
  refute->add_option("--extra-primes", extra_primes);
  refute->add_option("--size-guard", size_guard);

  std::string orders;
  long max_num = 5;
  auto* verify = app.add_subcommand("verify-heights", "height lower-bound sweep");
  verify->add_option("--orders", orders, "comma-separated root orders")->required();
  verify->add_option("--max-num", max_num);

  std::string suite = "structural";
  auto* bench = app.add_subcommand("bench", "timing table");
  bench->add_option("--suite", suite);

  CLI11_PARSE(app, argc, argv);

  try {
    if (zero->parsed()) return cmd_zero_test(file, mode, log2_lower, size_guard);
    if (hitset->parsed()) return cmd_hitset(t, d, d_prime, height, kind, log2_lower);
    if (gaps->parsed()) return cmd_gaps(file, log2_lower);
    if (heightc->parsed()) return cmd_height(file);
    if (refute->parsed()) return cmd_refute(file, targets, extra_primes, size_guard);
    if (verify->parsed()) return cmd_verify_heights(orders, max_num);
    if (bench->parsed()) return cmd_bench(suite);
  } catch (const GuardError& e) {
    std::cout << json{{"error", e.what()}, {"kind", "guard"}}.dump() << '\n';
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cout << json{{"error", e.what()}, {"kind", "input"}}.dump() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
