// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "rlct/families.hpp"
#include "rlct/resolution.hpp"
#include "rlct/zeta_oracle.hpp"
#include "test_support.hpp"

using namespace rlct;
using rlct::test::for_each_exponent;
using rlct::test::rationals_up_to;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::ostringstream detail;

  bool ok() const { return failures.empty(); }
  void require(bool cond, const std::string& what) {
    if (!cond && std::find(failures.begin(), failures.end(), what) == failures.end()) {
      failures.push_back(what);
    }
  }
};

std::vector<Rational> jump_values(const JumpReport& r) {
  std::vector<Rational> v;
  for (const auto& j : r.jumps) {
    v.push_back(j.value);
  }
  return v;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

void simple_type_closed_forms(Outcome& out) {
  for (auto [n, d] : {std::pair{3, 2}, std::pair{3, 4}, std::pair{4, 2}, std::pair{2, 4}}) {
    const auto fx = simple_type_family(n, d);
    const std::string tag = fx.model.label + ": ";
    out.require(rlct::rlct(fx.model) == Threshold(Rational(n, d)), tag + "rlct != n/d");
    // The first five jumps lie below (n + 4) / d.
    const auto jumps = jump_values(real_jumping_numbers(fx.model, Rational(n + 4, d)));
    std::vector<Rational> expected;
    for (int k = n; k <= n + 4; ++k) {
      expected.push_back(Rational(k, d));
    }
    out.require(jumps == expected, tag + "first five jumps differ from k/d, n <= k <= n+4");
  }
}

void exceptional_chain(Outcome& out) {
  const auto ge = ge_plus_h_family(3, 4, 2, 2);
  const auto r = rlct::rlct(ge.model);
  const auto l = lct(ge.model);
  out.require(r == Threshold(Rational(3, 4)), "rlct != 3/4");
  out.require(l == Rational(2, 3), "lct != 2/3");
  out.require(!r.is_infinite() && r.value() > l, "rlct not > lct");

  const auto ex = example_3_5_fixture();
  const Rational bound(4);
  const auto real = jump_values(real_jumping_numbers(ex.model, bound));
  out.require(real == JumpRule{{JumpProgression{4, 3}}}.values_up_to(bound), "real jumps != {k/4 : k >= 3}");
  // {k/6 + j : k = 4, 5, 6} built here from scratch, not from the fixture.
  for (long j = 0; j <= 4; ++j) {
    for (long k : {4L, 5L, 6L}) {
      const Rational v = Rational(k, 6) + j;
      if (v > bound || is_integer(v)) {
        continue;
      }
      out.require(std::find(real.begin(), real.end(), v) == real.end(),
                  "real jump " + to_string(v) + " lies in the complex candidate set");
    }
  }
}

void theorem_phenomena(Outcome& out) {
  const auto fx = simple_type_family(4, 2);
  const auto r = rlct::rlct(fx.model);
  out.require(r == Threshold(Rational(2)), "rlct(simple_type(4,2)) != 2");
  out.require(!r.is_infinite() && r.value() > 1, "rlct not > 1");
  const auto cmp = compare(ge_plus_h_family(3, 4, 2, 2).model);
  out.require(cmp.rlct.value() > cmp.lct, "no fixture with rlct > lct");
  out.detail << "rlct(simple_type(4,2)) = " << to_string(r) << ", ge-plus-h rlct " << to_string(cmp.rlct)
             << " > lct " << to_string(cmp.lct);
}

void monomial_oracle(Outcome& out) {
  const auto alphas = rationals_up_to(Rational(4), 12);
  long cases = 0;
  long mismatches = 0;
  for (int n = 1; n <= 3; ++n) {
    for_each_exponent(n, 4, [&](const std::vector<int>& m) {
      if (std::all_of(m.begin(), m.end(), [](int v) { return v == 0; })) {
        return;
      }
      const auto model = monomial_family(m).model;
      for_each_exponent(n, 6, [&](const std::vector<int>& nu) {
        const Monomial g(nu);
        for (const auto& alpha : alphas) {
          ++cases;
          if (member(model, g, alpha) != oracle::monomial_integrable(m, nu, alpha)) {
            ++mismatches;
          }
        }
      });
    });
  }
  out.require(mismatches == 0, "member disagrees with the per-axis criterion");
  out.detail << cases << " cases, " << mismatches << " mismatches";
}

void numeric_consistency(Outcome& out) {
  SampleConfig cfg;
  cfg.samples_per_level = 1'000'000;
  cfg.ladder_depth = 12;
  struct Item {
    const char* name;
    SparsePolynomial f;
    SampleRegion region;
    double lo;
    double hi;
  };
  const std::vector<Item> items = {
      {"x^2+y^2+z^2", test::power_sum(3, 2), SampleRegion::ball(3), 1.4, 1.6},
      {"(x^2+y^2+z^2)^2+x^6+y^6+z^6", *example_3_5_fixture().f, SampleRegion::ball(3), 0.65, 0.85},
      {"x^2 y^3", test::poly(2, {{1, {2, 3}}}), SampleRegion::box(2), 0.23, 0.43},
  };
  for (const auto& it : items) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto e = estimate_rlct(it.f, it.region, cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.require(e.conclusive, std::string(it.name) + " inconclusive");
    out.require(e.lambda_hat >= it.lo && e.lambda_hat <= it.hi,
                std::string(it.name) + " lambda_hat " + fmt(e.lambda_hat) + " outside [" + fmt(it.lo) + ", " +
                    fmt(it.hi) + "]");
    out.require(secs < 60.0, std::string(it.name) + " took " + fmt(secs) + " s");
    out.detail << it.name << " " << fmt(e.lambda_hat) << " +/- " << fmt(e.std_error) << " (" << fmt(secs) << " s); ";
  }
}

void integrability_verdicts(Outcome& out) {
  const SampleConfig cfg;
  const auto f = test::power_sum(3, 2);
  const auto one = SparsePolynomial::constant(3, Rational(1));
  const auto x = SparsePolynomial::variable(3, 0);
  const auto ball = SampleRegion::ball(3);
  struct Item {
    const char* name;
    const SparsePolynomial* g;
    Rational alpha;
    Integrability expected;
  };
  const std::vector<Item> items = {
      {"g=1 alpha=7/5", &one, Rational(7, 5), Integrability::Integrable},
      {"g=1 alpha=8/5", &one, Rational(8, 5), Integrability::Divergent},
      {"g=x alpha=2", &x, Rational(2), Integrability::Divergent},
  };
  for (const auto& it : items) {
    const auto v = check_integrability(*it.g, f, it.alpha, ball, cfg);
    out.require(v.status == it.expected, std::string(it.name) + " gave " + to_string(v.status));
    out.detail << it.name << " " << to_string(v.status) << " (ratio " << fmt(v.decay_ratio) << "); ";
  }
}

void property_suites(Outcome& out) {
  std::mt19937_64 rng(20070725);

  // Antitone membership in alpha.
  const auto coarse = rationals_up_to(Rational(3), 6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto model = test::random_model(rng);
    for_each_exponent(model.n, 2, [&](const std::vector<int>& e) {
      const Monomial nu(e);
      bool previous = true;
      for (const auto& alpha : coarse) {
        const bool now = member(model, nu, alpha);
        out.require(previous || !now, "membership not antitone in alpha");
        previous = now;
      }
    });
  }

  // Shift containment on monomial models.
  const auto fine = rationals_up_to(Rational(2), 12);
  for (int n = 1; n <= 3; ++n) {
    for_each_exponent(n, 4, [&](const std::vector<int>& m) {
      if (std::all_of(m.begin(), m.end(), [](int v) { return v == 0; })) {
        return;
      }
      const auto model = monomial_family(m).model;
      const Monomial shift(m);
      for_each_exponent(n, 4, [&](const std::vector<int>& e) {
        const Monomial nu(e);
        for (const auto& alpha : fine) {
          if (member(model, nu, alpha) != member(model, nu + shift, alpha + 1)) {
            out.require(false, "shift containment broken");
          }
        }
      });
    });
  }

  // lct <= rlct on random valid models.
  for (int trial = 0; trial < 200; ++trial) {
    const auto model = test::random_model(rng);
    const auto r = rlct::rlct(model);
    out.require(r.is_infinite() || lct(model) <= r.value(), "lct > rlct on a random model");
  }

  // Shard determinism of Monte-Carlo estimates.
  SampleConfig cfg;
  cfg.samples_per_level = 100'000;
  const auto f = *example_3_5_fixture().f;
  const auto base = estimate_rlct(f, SampleRegion::ball(3), cfg);
  for (int shards : {2, 4}) {
    cfg.shards = shards;
    const auto other = estimate_rlct(f, SampleRegion::ball(3), cfg);
    out.require(other.lambda_hat == base.lambda_hat && other.std_error == base.std_error,
                "estimate changed with " + std::to_string(shards) + " shards");
  }
}

void ideal_reduction(Outcome& out) {
  SampleConfig cfg;
  const auto abs_sum = [](const Eigen::VectorXd& p) { return std::abs(p(0)) + std::abs(p(1)); };
  const auto e = estimate_rlct(abs_sum, SampleRegion::box(2), cfg);
  const auto r = rlct::rlct(simple_type_family(2, 2).model);
  const double twice = 2.0 * to_double(r.value());
  out.require(e.conclusive, "inconclusive");
  out.require(std::abs(e.lambda_hat - 2.0) <= 0.15, "threshold " + fmt(e.lambda_hat) + " not within 2.0 +/- 0.15");
  out.require(r.value() * 2 == 2, "2 * rlct(x^2+y^2) != 2");
  out.require(std::abs(e.lambda_hat - twice) <= 0.15, "threshold differs from 2 * rlct");
  out.detail << "threshold(|x|+|y|) = " << fmt(e.lambda_hat) << ", 2 * rlct(x^2+y^2) = " << to_string(r.value() * 2);
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Outcome&)> body;
  double time_limit;  ///< seconds; <= 0 means unlimited
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "simple-type closed forms", simple_type_closed_forms, 1.0},
      {2, "exceptional-type exact chain", exceptional_chain, 1.0},
      {3, "rlct > 1 and rlct > lct exhibited", theorem_phenomena, 0.0},
      {4, "monomial oracle equivalence", monomial_oracle, 10.0},
      {5, "numerical-exact consistency", numeric_consistency, 0.0},
      {6, "integrability verdicts", integrability_verdicts, 0.0},
      {7, "property suites", property_suites, 0.0},
      {8, "ideal reduction threshold", ideal_reduction, 0.0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit > 0 && secs >= c.time_limit) {
      out.require(false, "runtime " + fmt(secs) + " s exceeds " + fmt(c.time_limit) + " s");
    }
    std::string failed;
    for (const auto& f : out.failures) {
      failed += (failed.empty() ? " | failed: " : "; ") + f;
    }
    failures += out.ok() ? 0 : 1;
    std::printf("%s [%d] %s (%.2f s) %s%s\n", out.ok() ? "PASS" : "FAIL", c.id, c.name, secs,
                out.detail.str().c_str(), failed.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
