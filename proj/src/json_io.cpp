#include "rlct/json_io.hpp"

#include <cmath>
#include <fstream>

namespace rlct {

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& message) {
  throw SchemaError(path + ": " + message);
}

const Json& require_field(const Json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) {
    schema_fail(path, "expected object");
  }
  const auto it = obj.find(key);
  if (it == obj.end()) {
    schema_fail(path + "." + key, "missing required field");
  }
  return *it;
}

long require_integer(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) {
    schema_fail(path, "expected integer");
  }
  return v.get<long>();
}

Rational require_rational(const Json& v, const std::string& path) {
  if (!v.is_string()) {
    schema_fail(path, "expected \"p/q\" string");
  }
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    schema_fail(path, e.what());
  }
}

Json threshold_json(const Threshold& t) { return to_string(t); }

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json to_json(const Monomial& m) { return Json(m.exponents); }

Json to_json(const SparsePolynomial& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    terms.push_back({{"c", to_string(t.coefficient)}, {"e", to_json(t.exponents)}});
  }
  return {{"n", p.n()}, {"terms", terms}};
}

SparsePolynomial polynomial_from_json(const Json& j) {
  const long n = require_integer(require_field(j, "$", "n"), "$.n");
  if (n < 1) {
    schema_fail("$.n", "must be >= 1");
  }
  const Json& terms = require_field(j, "$", "terms");
  if (!terms.is_array()) {
    schema_fail("$.terms", "expected array");
  }
  std::vector<Term> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string path = "$.terms[" + std::to_string(i) + "]";
    const Rational c = require_rational(require_field(terms[i], path, "c"), path + ".c");
    const Json& e = require_field(terms[i], path, "e");
    if (!e.is_array() || e.size() != static_cast<std::size_t>(n)) {
      schema_fail(path + ".e", "expected array of " + std::to_string(n) + " integers");
    }
    std::vector<int> exps;
    for (std::size_t k = 0; k < e.size(); ++k) {
      const long v = require_integer(e[k], path + ".e[" + std::to_string(k) + "]");
      if (v < 0) {
        schema_fail(path + ".e[" + std::to_string(k) + "]", "exponent must be nonnegative");
      }
      exps.push_back(static_cast<int>(v));
    }
    out.push_back(Term{c, Monomial(std::move(exps))});
  }
  return SparsePolynomial(static_cast<int>(n), std::move(out));
}

Json to_json(const DivisorRecord& d) {
  Json j = {{"id", d.id}, {"m", d.m}, {"a", d.a}, {"real", d.real}};
  if (d.weights) {
    j["weights"] = *d.weights;
  }
  return j;
}

Json to_json(const ResolutionModel& model) {
  Json divisors = Json::array();
  for (const auto& d : model.divisors) {
    divisors.push_back(to_json(d));
  }
  return {{"n", model.n}, {"label", model.label}, {"lct_exact", model.lct_exact}, {"divisors", divisors}};
}

ResolutionModel model_from_json(const Json& j) {
  ResolutionModel model;
  model.n = static_cast<int>(require_integer(require_field(j, "$", "n"), "$.n"));
  if (model.n < 1) {
    schema_fail("$.n", "must be >= 1");
  }
  if (const auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) {
      schema_fail("$.label", "expected string");
    }
    model.label = it->get<std::string>();
  }
  if (const auto it = j.find("lct_exact"); it != j.end()) {
    if (!it->is_boolean()) {
      schema_fail("$.lct_exact", "expected boolean");
    }
    model.lct_exact = it->get<bool>();
  }
  const Json& divisors = require_field(j, "$", "divisors");
  if (!divisors.is_array()) {
    schema_fail("$.divisors", "expected array");
  }
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    const std::string path = "$.divisors[" + std::to_string(i) + "]";
    const Json& dj = divisors[i];
    DivisorRecord d;
    const Json& id = require_field(dj, path, "id");
    if (!id.is_string()) {
      schema_fail(path + ".id", "expected string");
    }
    d.id = id.get<std::string>();
    d.m = require_integer(require_field(dj, path, "m"), path + ".m");
    if (d.m < 1) {
      schema_fail(path + ".m", "must be >= 1");
    }
    d.a = require_integer(require_field(dj, path, "a"), path + ".a");
    if (d.a < 0) {
      schema_fail(path + ".a", "must be >= 0");
    }
    const Json& real = require_field(dj, path, "real");
    if (!real.is_boolean()) {
      schema_fail(path + ".real", "expected boolean");
    }
    d.real = real.get<bool>();
    if (const auto it = dj.find("weights"); it != dj.end() && !it->is_null()) {
      if (!it->is_array() || it->size() != static_cast<std::size_t>(model.n)) {
        schema_fail(path + ".weights", "expected array of " + std::to_string(model.n) + " integers");
      }
      std::vector<long> w;
      for (std::size_t k = 0; k < it->size(); ++k) {
        const long v = require_integer((*it)[k], path + ".weights[" + std::to_string(k) + "]");
        if (v < 0) {
          schema_fail(path + ".weights[" + std::to_string(k) + "]", "must be nonnegative");
        }
        w.push_back(v);
      }
      if (std::all_of(w.begin(), w.end(), [](long v) { return v == 0; })) {
        schema_fail(path + ".weights", "must not be the zero vector");
      }
      d.weights = std::move(w);
    }
    model.divisors.push_back(std::move(d));
  }
  try {
    validate(model);
  } catch (const std::invalid_argument& e) {
    schema_fail("$.divisors", e.what());
  }
  return model;
}

Json to_json(const JumpReport& report) {
  Json jumps = Json::array();
  for (const auto& jump : report.jumps) {
    jumps.push_back({{"value", to_string(jump.value)}, {"witness", to_json(jump.witness)}});
  }
  return {{"jumps", jumps},
          {"bound", to_string(report.bound)},
          {"rlct", threshold_json(report.rlct)},
          {"box_bound", report.box_bound}};
}

Json to_json(const ThresholdComparison& c) {
  return {{"rlct", threshold_json(c.rlct)},
          {"lct", to_string(c.lct)},
          {"ordered", c.ordered},
          {"lct_exact", c.lct_exact}};
}

Json to_json(const JumpRule& rule) {
  Json out = Json::array();
  for (const auto& p : rule.progressions) {
    out.push_back({{"denominator", p.denominator}, {"k_min", p.k_min}});
  }
  return out;
}

Json to_json(const PeriodicJumpSet& set) {
  return {{"denominator", set.denominator}, {"numerators", set.numerators}};
}

Json bundle_to_json(const FamilyFixture& fixture) {
  Json expected = {{"rlct", threshold_json(fixture.expected_rlct)}};
  if (fixture.expected_lct) {
    expected["lct"] = to_string(*fixture.expected_lct);
    expected["lct_exact"] = fixture.model.lct_exact;
  }
  if (fixture.expected_rjn) {
    expected["rjn"] = to_json(*fixture.expected_rjn);
  }
  if (fixture.complex_jn_superset) {
    expected["complex_jn_superset"] = to_json(*fixture.complex_jn_superset);
  }
  return {{"name", fixture.name},
          {"poly", fixture.f ? to_json(*fixture.f) : Json(nullptr)},
          {"model", to_json(fixture.model)},
          {"expected", expected},
          {"notes", fixture.notes}};
}

Json to_json(const SimpleTypeVerdict& v) {
  Json j = {{"status", to_string(v.status)}, {"min_found", finite_or_null(v.min_found)}};
  if (v.witness) {
    j["witness"] = std::vector<double>(v.witness->data(), v.witness->data() + v.witness->size());
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const McEstimate& e) {
  Json levels = Json::array();
  for (const auto& l : e.levels) {
    levels.push_back(
        {{"k", l.k}, {"eps", l.eps}, {"volume", l.volume}, {"hits", l.hits}, {"used", l.used}});
  }
  return {{"lambda_hat", finite_or_null(e.lambda_hat)},
          {"log_exponent_hat", finite_or_null(e.log_exponent_hat)},
          {"stderr", finite_or_null(e.std_error)},
          {"levels_used", e.levels_used},
          {"r_squared", finite_or_null(e.r_squared)},
          {"seed", e.seed},
          {"conclusive", e.conclusive},
          {"levels", levels},
          {"warnings", e.warnings}};
}

Json to_json(const IntegrabilityVerdict& v) {
  Json contributions = Json::array();
  for (double c : v.shell_contributions) {
    contributions.push_back(finite_or_null(c));
  }
  return {{"status", to_string(v.status)},
          {"shell_contributions", contributions},
          {"shell_hits", v.shell_hits},
          {"decay_ratio", finite_or_null(v.decay_ratio)},
          {"slope", finite_or_null(v.slope)},
          {"slope_stderr", finite_or_null(v.slope_stderr)},
          {"shells_used", v.shells_used}};
}

Json to_json(const Cor2Check& c) {
  return {{"p_hat", finite_or_null(c.estimate.lambda_hat)},
          {"estimate", to_json(c.estimate)},
          {"rlct_exact", threshold_json(c.rlct)},
          {"lct_exact", to_string(c.lct)},
          {"lct_is_exact", c.lct_exact},
          {"tolerance", c.tolerance},
          {"chain_ok", c.chain_ok},
          {"covers_origin", c.covers_origin},
          {"equality_ok", c.equality_ok}};
}

std::string canonical_dump(const Json& j) { return j.dump(); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path + ": cannot open file");
  }
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace rlct
