#include "rlct/cli.hpp"

#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>

namespace rlct::cli {

namespace {

CommandResult error_result(std::string message) {
  CommandResult r;
  r.status = Status::Error;
  r.payload = nullptr;
  r.diagnostics.push_back(std::move(message));
  return r;
}

// Runs `body`, mapping the library's exception types onto error results.
template <typename Body>
CommandResult guarded(Body body) {
  try {
    return body();
  } catch (const UnsupportedModel& e) {
    return error_result(std::string("UnsupportedModel: ") + e.what());
  } catch (const SchemaError& e) {
    return error_result(std::string("schema: ") + e.what());
  } catch (const ParseError& e) {
    return error_result(std::string("parse: ") + e.what());
  } catch (const DimensionError& e) {
    return error_result(std::string("dimension: ") + e.what());
  } catch (const PreconditionError& e) {
    return error_result(std::string("precondition: ") + e.what());
  } catch (const std::exception& e) {
    return error_result(e.what());
  }
}

// Accepts a bare document or the output envelope of another command; a
// bundle contributes its `field` member.
Json unwrap(Json j, const char* field) {
  if (j.is_object() && j.contains("status") && j.contains("payload")) {
    j = j.at("payload");
  }
  if (j.is_object() && j.contains(field) && j.contains("name")) {
    j = j.at(field);
  }
  return j;
}

SparsePolynomial load_polynomial(const std::string& path) {
  try {
    return polynomial_from_json(unwrap(read_json_file(path), "poly"));
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

ResolutionModel load_model(const std::string& path) {
  try {
    return model_from_json(unwrap(read_json_file(path), "model"));
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

template <typename T>
T require_param(const std::optional<T>& v, const char* flag) {
  if (!v) {
    throw PreconditionError(std::string("missing family parameter ") + flag);
  }
  return *v;
}

FamilyFixture build_fixture(const std::string& name, const FamilyParams& p) {
  if (name == "monomial") {
    if (p.m.empty()) {
      throw PreconditionError("missing family parameter --m");
    }
    return monomial_family(p.m);
  }
  if (name == "simple-type") {
    return simple_type_family(require_param(p.n, "--n"), require_param(p.d, "--d"));
  }
  if (name == "ge-plus-h") {
    return ge_plus_h_family(require_param(p.n, "--n"), require_param(p.d1, "--d1"),
                            require_param(p.e, "--e"), require_param(p.c, "--c"));
  }
  if (name == "example-3.5") {
    return example_3_5_fixture();
  }
  throw PreconditionError("unknown family \"" + name +
                          "\" (expected monomial, simple-type, ge-plus-h, example-3.5)");
}

SampleRegion build_region(const RegionFlags& flags, int n, RegionKind default_kind) {
  RegionKind kind = default_kind;
  if (flags.kind) {
    if (*flags.kind == "ball") {
      kind = RegionKind::Ball;
    } else if (*flags.kind == "box") {
      kind = RegionKind::Box;
    } else {
      throw PreconditionError("--region must be ball or box");
    }
  }
  SampleRegion region = kind == RegionKind::Ball ? SampleRegion::ball(n, flags.radius)
                                                 : SampleRegion::box(n, flags.radius);
  if (!flags.center.empty()) {
    if (flags.center.size() != static_cast<std::size_t>(n)) {
      throw DimensionError("--center needs " + std::to_string(n) + " coordinates");
    }
    region.center = Eigen::Map<const Eigen::VectorXd>(flags.center.data(), n);
  }
  return region;
}

SampleConfig build_config(const SamplingFlags& flags) {
  SampleConfig config;
  config.samples_per_level = flags.samples;
  config.seed = resolve_seed(flags.seed);
  config.ladder_depth = flags.depth;
  config.shards = flags.shards;
  return config;
}

}  // namespace

int CommandResult::exit_code() const {
  switch (status) {
    case Status::Ok:
      return 0;
    case Status::Inconclusive:
      return 2;
    case Status::Error:
      return 1;
  }
  return 1;
}

Json CommandResult::to_json() const {
  const char* name = status == Status::Ok ? "ok" : status == Status::Inconclusive ? "inconclusive" : "error";
  return {{"status", name}, {"payload", payload}, {"diagnostics", diagnostics}};
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
  if (flag) {
    return *flag;
  }
  if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used, 10);
      if (used == std::string(env).size()) {
        return v;
      }
    } catch (const std::exception&) {
    }
    throw PreconditionError(std::string(kSeedEnv) + " is not an unsigned integer");
  }
  return kDefaultSeed;
}

CommandResult cmd_rlct(const std::string& model_path) {
  return guarded([&] {
    const ResolutionModel model = load_model(model_path);
    CommandResult r;
    if (model.divisors.empty()) {
      r.payload = {{"rlct", to_string(rlct(model))}, {"lct", nullptr}, {"ordered", true},
                   {"lct_exact", model.lct_exact}};
      r.diagnostics.push_back("model has no divisors; lct undefined");
      return r;
    }
    const ThresholdComparison c = compare(model);
    r.payload = to_json(c);
    if (!c.lct_exact) {
      r.diagnostics.push_back("lct is an upper bound: model not asserted to be a full complex resolution");
    }
    return r;
  });
}

CommandResult cmd_jumps(const std::string& model_path, const std::string& bound,
                        std::optional<int> box_bound) {
  return guarded([&] {
    const ResolutionModel model = load_model(model_path);
    CommandResult r;
    r.payload = to_json(real_jumping_numbers(model, parse_rational(bound), box_bound));
    return r;
  });
}

CommandResult cmd_family(const std::string& name, const FamilyParams& params, const std::string& emit) {
  return guarded([&] {
    const FamilyFixture fx = build_fixture(name, params);
    CommandResult r;
    if (emit == "model") {
      r.payload = to_json(fx.model);
    } else if (emit == "poly") {
      if (!fx.f) {
        return error_result("family has no polynomial instance for these parameters");
      }
      r.payload = to_json(*fx.f);
    } else if (emit == "bundle") {
      r.payload = bundle_to_json(fx);
    } else {
      return error_result("--emit must be model, poly or bundle");
    }
    return r;
  });
}

CommandResult cmd_estimate(const std::string& poly_path, const RegionFlags& region,
                           const SamplingFlags& sampling) {
  return guarded([&] {
    const SparsePolynomial f = load_polynomial(poly_path);
    const McEstimate est =
        estimate_rlct(f, build_region(region, f.n(), RegionKind::Ball), build_config(sampling));
    CommandResult r;
    r.payload = to_json(est);
    r.diagnostics = est.warnings;
    if (!est.conclusive) {
      r.status = Status::Inconclusive;
    }
    return r;
  });
}

CommandResult cmd_check(const std::string& g_path, const std::string& poly_path, const std::string& alpha,
                        const RegionFlags& region, const SamplingFlags& sampling) {
  return guarded([&] {
    const SparsePolynomial g = load_polynomial(g_path);
    const SparsePolynomial f = load_polynomial(poly_path);
    const SampleConfig config = build_config(sampling);
    const IntegrabilityVerdict v = check_integrability(
        g, f, parse_rational(alpha), build_region(region, f.n(), RegionKind::Ball), config);
    CommandResult r;
    r.payload = to_json(v);
    r.payload["seed"] = config.seed;
    r.payload["alpha"] = to_string(parse_rational(alpha));
    if (v.status == Integrability::Inconclusive) {
      r.status = Status::Inconclusive;
    }
    return r;
  });
}

CommandResult cmd_reduce(const std::vector<std::string>& ideal_paths) {
  return guarded([&] {
    std::vector<SparsePolynomial> generators;
    for (const auto& path : ideal_paths) {
      generators.push_back(load_polynomial(path));
    }
    CommandResult r;
    r.payload = {{"poly", to_json(sum_of_squares(generators))},
                 {"threshold_scale", "2/1"},
                 {"contract", "J(I^alpha) = J(f^(alpha/2)); thresholds of the ideal are 2x those of poly"}};
    return r;
  });
}

CommandResult cmd_verify(const std::string& fixture_name, const FamilyParams& params,
                         const RegionFlags& region, const SamplingFlags& sampling) {
  return guarded([&] {
    const FamilyFixture fx = build_fixture(fixture_name, params);
    if (!fx.f) {
      return error_result("fixture has no polynomial instance to sample");
    }
    const RegionKind default_kind = fx.name == "monomial" ? RegionKind::Box : RegionKind::Ball;
    const Cor2Check check =
        verify_cor2(*fx.f, fx.model, build_region(region, fx.f->n(), default_kind), build_config(sampling));
    CommandResult r;
    r.payload = to_json(check);
    r.diagnostics = check.estimate.warnings;
    if (!check.lct_exact) {
      r.diagnostics.push_back("lct is an upper bound from a partial model");
    }
    if (!check.estimate.conclusive) {
      r.status = Status::Inconclusive;
    } else if (!check.chain_ok || (check.covers_origin && !check.equality_ok)) {
      r.status = Status::Error;
      r.diagnostics.push_back("threshold chain p_hat >= rlct >= lct not confirmed within tolerance");
    }
    return r;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real log canonical thresholds, jumping numbers and zeta-pole estimates", "rlct"};
  app.require_subcommand(1);

  std::string model_path;
  std::string poly_path;
  std::string g_path;
  std::string alpha;
  std::string bound;
  std::optional<int> box_bound;
  std::string emit = "bundle";
  std::string family_name;
  std::vector<std::string> ideal_paths;
  FamilyParams family;
  RegionFlags region;
  SamplingFlags sampling;

  const auto add_family_flags = [&](CLI::App* sub) {
    sub->add_option("--n", family.n, "ambient dimension");
    sub->add_option("--d", family.d, "degree (simple-type)");
    sub->add_option("--d1", family.d1, "degree of g^e (ge-plus-h)");
    sub->add_option("--e", family.e, "power e (ge-plus-h)");
    sub->add_option("--c", family.c, "degree gap d2 - d1 (ge-plus-h)");
    sub->add_option("--m", family.m, "exponent vector (monomial)")->delimiter(',');
  };
  const auto add_sampling_flags = [&](CLI::App* sub) {
    sub->add_option("--region", region.kind, "ball or box");
    sub->add_option("--radius", region.radius, "ball radius or box half-width")->check(CLI::PositiveNumber);
    sub->add_option("--center", region.center, "region center, comma separated")->delimiter(',');
    sub->add_option("--samples", sampling.samples, "samples per level")->check(CLI::PositiveNumber);
    sub->add_option("--seed", sampling.seed, std::string("seed (default: $") + kSeedEnv + " or built-in)");
    sub->add_option("--depth", sampling.depth, "ladder depth K (eps_k = 2^-k)")->check(CLI::PositiveNumber);
    sub->add_option("--shards", sampling.shards, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* rlct_cmd = app.add_subcommand("rlct", "rlct and lct of a resolution model");
  rlct_cmd->add_option("--model", model_path, "model JSON")->required();

  auto* jumps_cmd = app.add_subcommand("jumps", "real jumping numbers up to a bound");
  jumps_cmd->add_option("--model", model_path, "model JSON")->required();
  jumps_cmd->add_option("--bound", bound, "upper bound p/q")->required();
  jumps_cmd->add_option("--box-bound", box_bound, "exponent box for witnesses");

  auto* family_cmd = app.add_subcommand("family", "emit a built-in family fixture");
  family_cmd->add_option("name", family_name, "monomial | simple-type | ge-plus-h | example-3.5")->required();
  family_cmd->add_option("--emit", emit, "model | poly | bundle");
  add_family_flags(family_cmd);

  auto* estimate_cmd = app.add_subcommand("estimate", "Monte-Carlo estimate of the largest zeta pole");
  estimate_cmd->add_option("--poly", poly_path, "polynomial JSON")->required();
  add_sampling_flags(estimate_cmd);

  auto* check_cmd = app.add_subcommand("check", "numerical local integrability of |g| / |f|^alpha");
  check_cmd->add_option("--g", g_path, "test function JSON")->required();
  check_cmd->add_option("--poly", poly_path, "polynomial JSON")->required();
  check_cmd->add_option("--alpha", alpha, "exponent p/q")->required();
  add_sampling_flags(check_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "sum of squares of ideal generators");
  reduce_cmd->add_option("ideal", ideal_paths, "generator polynomial JSON files")->required();

  auto* verify_cmd = app.add_subcommand("verify", "numerical vs exact threshold chain on a fixture");
  verify_cmd->add_option("name", family_name, "fixture name")->required();
  add_family_flags(verify_cmd);
  add_sampling_flags(verify_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    const CommandResult r = error_result(std::string("usage: ") + e.what());
    out << canonical_dump(r.to_json()) << "\n";
    err << app.help();
    return r.exit_code();
  }

  CommandResult result;
  if (rlct_cmd->parsed()) {
    result = cmd_rlct(model_path);
  } else if (jumps_cmd->parsed()) {
    result = cmd_jumps(model_path, bound, box_bound);
  } else if (family_cmd->parsed()) {
    result = cmd_family(family_name, family, emit);
  } else if (estimate_cmd->parsed()) {
    result = cmd_estimate(poly_path, region, sampling);
  } else if (check_cmd->parsed()) {
    result = cmd_check(g_path, poly_path, alpha, region, sampling);
  } else if (reduce_cmd->parsed()) {
    result = cmd_reduce(ideal_paths);
  } else {
    result = cmd_verify(family_name, family, region, sampling);
  }
  out << canonical_dump(result.to_json()) << "\n";
  return result.exit_code();
}

}  // namespace rlct::cli
