#include <doctest.h>

#include <complex>
#include <random>
#include <set>

#include "oracles.hpp"
#include "rlct/families.hpp"
#include "rlct/resolution.hpp"
#include "test_support.hpp"

using namespace rlct;
using rlct::test::for_each_exponent;
using rlct::test::random_model;
using rlct::test::rationals_up_to;

namespace {

ResolutionModel simple_type_model(int n, int d) {
  ResolutionModel m;
  m.n = n;
  m.label = "simple-type";
  m.divisors.push_back(DivisorRecord{"E1", d, n - 1, true, std::vector<long>(static_cast<std::size_t>(n), 1)});
  return m;
}

ResolutionModel ge_plus_h_model() {
  ResolutionModel m = simple_type_model(3, 4);
  m.divisors.push_back(DivisorRecord{"E2", 6, 3, false, std::nullopt});
  return m;
}

}  // namespace

TEST_CASE("rlct") {
  CHECK(rlct::rlct(simple_type_model(3, 2)) == Threshold(Rational(3, 2)));
  CHECK(rlct::rlct(ge_plus_h_model()) == Threshold(Rational(3, 4)));

  ResolutionModel complex_only = ge_plus_h_model();
  for (auto& d : complex_only.divisors) {
    d.real = false;
  }
  CHECK(rlct::rlct(complex_only).is_infinite());

  ResolutionModel empty;
  empty.n = 2;
  CHECK(rlct::rlct(empty).is_infinite());
}

TEST_CASE("lct") {
  CHECK(lct(ge_plus_h_model()) == Rational(2, 3));
  CHECK(lct(simple_type_model(3, 2)) == Rational(3, 2));

  // x^2 y^3: smallest alpha where 1 / |x^2 y^3|^alpha stops being integrable
  // by the per-axis 1-D criterion, scanned over alpha = k/60.
  Rational oracle_threshold = 0;
  for (long k = 1; k <= 120; ++k) {
    if (!oracle::monomial_integrable({2, 3}, {0, 0}, Rational(k, 60))) {
      oracle_threshold = Rational(k, 60);
      break;
    }
  }
  REQUIRE(oracle_threshold == Rational(1, 3));
  CHECK(lct(monomial_family({2, 3}).model) == oracle_threshold);

  ResolutionModel empty;
  empty.n = 1;
  CHECK_THROWS_AS(lct(empty), PreconditionError);
}

TEST_CASE("member follows the divisor-order inequality") {
  const auto st = simple_type_model(3, 2);
  CHECK(member(st, Monomial{0, 0, 0}, Rational(1)));
  CHECK_FALSE(member(st, Monomial{0, 0, 0}, Rational(3, 2)));
  CHECK_FALSE(member(st, Monomial{1, 0, 0}, Rational(2)));
  CHECK(member(st, Monomial{2, 0, 0}, Rational(2)));

  CHECK_THROWS_AS(member(st, Monomial{0, 0}, Rational(1)), DimensionError);
  CHECK_THROWS_AS(member(st, Monomial{0, 0, 0}, Rational(0)), PreconditionError);

  ResolutionModel no_weights = st;
  no_weights.divisors[0].weights.reset();
  CHECK_THROWS_AS(member(no_weights, Monomial{0, 0, 0}, Rational(1)), UnsupportedModel);
  // Complex-only divisors never need weights.
  CHECK(member(ge_plus_h_model(), Monomial{0, 0, 0}, Rational(1, 2)));
}

TEST_CASE("member_left takes the exact left limit") {
  const auto st = simple_type_model(3, 2);
  CHECK(member_left(st, Monomial{0, 0, 0}, Rational(3, 2)));
  CHECK(member_left(st, Monomial{0, 0, 0}, Rational(7, 5)));

  const auto x_squared = monomial_family({2}).model;
  REQUIRE(oracle::monomial_integrable_left({2}, {1}, Rational(1)));
  REQUIRE_FALSE(oracle::monomial_integrable({2}, {1}, Rational(1)));
  CHECK(member_left(x_squared, Monomial{1}, Rational(1)));
  CHECK_FALSE(member(x_squared, Monomial{1}, Rational(1)));
}

TEST_CASE("graded pieces") {
  const auto st = simple_type_model(3, 2);
  const auto w2 = graded_piece_nonempty(st, Rational(2), 8);
  REQUIRE(w2.has_value());
  CHECK(*w2 == Monomial{1, 0, 0});
  CHECK_FALSE(graded_piece_nonempty(st, Rational(19, 10), 8).has_value());
  const auto w32 = graded_piece_nonempty(st, Rational(3, 2), 8);
  REQUIRE(w32.has_value());
  CHECK(*w32 == Monomial{0, 0, 0});

  ResolutionModel no_weights = st;
  no_weights.divisors[0].weights.reset();
  CHECK_THROWS_AS(graded_piece_nonempty(no_weights, Rational(1), 2), UnsupportedModel);
}

TEST_CASE("real jumping numbers") {
  const auto values = [](const JumpReport& r) {
    std::vector<Rational> v;
    for (const auto& j : r.jumps) {
      v.push_back(j.value);
    }
    return v;
  };

  const auto st = real_jumping_numbers(simple_type_model(3, 2), Rational(3));
  CHECK(values(st) == std::vector<Rational>{Rational(3, 2), Rational(2), Rational(5, 2), Rational(3)});
  CHECK(st.rlct == Threshold(Rational(3, 2)));
  CHECK(st.box_bound == 6);

  const auto smooth = real_jumping_numbers(monomial_family({1}).model, Rational(3));
  CHECK(values(smooth) == std::vector<Rational>{Rational(1), Rational(2), Rational(3)});

  SUBCASE("x^2 y^3 against a brute-force monomial oracle") {
    std::vector<Rational> expected;
    for (const auto& alpha : rationals_up_to(Rational(1), 12)) {
      bool jump = false;
      for_each_exponent(2, 4, [&](const std::vector<int>& nu) {
        jump = jump || (oracle::monomial_integrable_left({2, 3}, nu, alpha) &&
                        !oracle::monomial_integrable({2, 3}, nu, alpha));
      });
      if (jump) {
        expected.push_back(alpha);
      }
    }
    REQUIRE(expected == std::vector<Rational>{Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)});
    CHECK(values(real_jumping_numbers(monomial_family({2, 3}).model, Rational(1))) == expected);
  }

  SUBCASE("witnesses realize nonzero graded pieces") {
    const auto model = ge_plus_h_model();
    const auto report = real_jumping_numbers(model, Rational(4));
    for (const auto& j : report.jumps) {
      CHECK(member_left(model, j.witness, j.value));
      CHECK_FALSE(member(model, j.witness, j.value));
    }
    for (std::size_t i = 1; i < report.jumps.size(); ++i) {
      CHECK(report.jumps[i - 1].value < report.jumps[i].value);
    }
  }

  SUBCASE("empty J_R") {
    ResolutionModel complex_only = ge_plus_h_model();
    complex_only.divisors[0].real = false;
    const auto r = real_jumping_numbers(complex_only, Rational(3));
    CHECK(r.rlct.is_infinite());
    CHECK(r.jumps.empty());
  }

  CHECK_THROWS_AS(real_jumping_numbers(simple_type_model(3, 2), Rational(0)), PreconditionError);
}

TEST_CASE("compare") {
  const auto c = compare(ge_plus_h_model());
  CHECK(c.rlct == Threshold(Rational(3, 4)));
  CHECK(c.lct == Rational(2, 3));
  CHECK(c.ordered);

  const auto mono = compare(monomial_family({2, 3}).model);
  CHECK(mono.rlct == Threshold(Rational(1, 3)));
  CHECK(mono.lct == Rational(1, 3));
  CHECK(mono.ordered);
  CHECK(mono.lct_exact);

  const auto st = compare(simple_type_model(3, 4));
  CHECK(st.rlct == Threshold(Rational(3, 4)));
  CHECK(st.lct == Rational(3, 4));
  CHECK(st.ordered);
  CHECK_FALSE(st.lct_exact);
}

TEST_CASE("model validation") {
  ResolutionModel m = simple_type_model(2, 2);
  m.divisors.push_back(m.divisors[0]);
  CHECK_THROWS_AS(validate(m), PreconditionError);
  m = simple_type_model(2, 2);
  m.divisors[0].m = 0;
  CHECK_THROWS_AS(validate(m), PreconditionError);
  m = simple_type_model(2, 2);
  m.divisors[0].a = -1;
  CHECK_THROWS_AS(validate(m), PreconditionError);
  m = simple_type_model(2, 2);
  m.divisors[0].weights = std::vector<long>{0, 0};
  CHECK_THROWS_AS(validate(m), PreconditionError);
  m.divisors[0].weights = std::vector<long>{1, 1, 1};
  CHECK_THROWS_AS(validate(m), DimensionError);
}

TEST_CASE("property: membership is antitone in alpha") {
  std::mt19937_64 rng(2024);
  const auto alphas = rationals_up_to(Rational(3), 6);
  for (int trial = 0; trial < 60; ++trial) {
    const auto model = random_model(rng);
    for_each_exponent(model.n, 2, [&](const std::vector<int>& e) {
      const Monomial nu(e);
      bool previous = true;
      for (const auto& alpha : alphas) {
        const bool now = member(model, nu, alpha);
        CHECK((previous || !now));
        CHECK((!now || member_left(model, nu, alpha)));
        previous = now;
      }
    });
  }
}

TEST_CASE("property: shift containment on monomial models") {
  const auto alphas = rationals_up_to(Rational(2), 12);
  long checked = 0;
  for (int n = 1; n <= 3; ++n) {
    for_each_exponent(n, 4, [&](const std::vector<int>& m) {
      if (std::all_of(m.begin(), m.end(), [](int v) { return v == 0; })) {
        return;
      }
      const auto model = monomial_family(m).model;
      const Monomial shift(m);
      for_each_exponent(n, 4, [&](const std::vector<int>& e) {
        const Monomial nu(e);
        for (const auto& alpha : alphas) {
          if (member(model, nu, alpha) != member(model, nu + shift, alpha + 1)) {
            FAIL("shift containment broken");
          }
          ++checked;
        }
      });
    });
  }
  CHECK(checked > 0);
}

TEST_CASE("exceptional type: f J(f^a) is strictly smaller than J(f^(a+1))") {
  const auto st = simple_type_model(3, 2);
  // x^3 lies in J(f^(5/2)) ...
  CHECK(member(st, Monomial{3, 0, 0}, Rational(5, 2)));
  // ... but f = x^2 + y^2 + z^2 does not divide x^3 as germs: f vanishes on
  // the complex curve (t, i t, 0) through the origin where x^3 does not.
  const NumericPolynomial<std::complex<double>> f(test::power_sum(3, 2));
  const NumericPolynomial<std::complex<double>> x3(test::poly(3, {{1, {3, 0, 0}}}));
  const std::complex<double> i(0.0, 1.0);
  for (double t : {1e-1, 1e-2, 1e-3}) {
    Eigen::Vector3cd p(t, i * t, 0.0);
    CHECK(std::abs(f(p)) < 1e-15);
    CHECK(std::abs(x3(p)) > 0.0);
  }
}

TEST_CASE("property: rlct is the first jump, lct <= rlct") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto model = random_model(rng);
    const auto c = compare(model);
    CHECK(c.ordered);
    if (c.rlct.is_infinite()) {
      continue;
    }
    if (trial % 4 == 0) {
      const auto report = real_jumping_numbers(model, c.rlct.value() + 1);
      REQUIRE_FALSE(report.jumps.empty());
      CHECK(report.jumps.front().value == c.rlct.value());
    }
  }
}

TEST_CASE("simple type: J(f^alpha) = m^([alpha d] - n + 1)") {
  for (auto [n, d] : {std::pair{3, 2}, std::pair{3, 4}, std::pair{2, 4}, std::pair{4, 2}}) {
    const auto model = simple_type_model(n, d);
    for (const auto& alpha : rationals_up_to(Rational(3), 8)) {
      const long power = floor_of(alpha * d).convert_to<long>() - n + 1;
      for_each_exponent(n, 4, [&](const std::vector<int>& e) {
        const Monomial nu(e);
        if (member(model, nu, alpha) != (nu.degree() >= power)) {
          FAIL("ideal formula mismatch");
        }
      });
    }
  }
}
