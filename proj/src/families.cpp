#include "rlct/families.hpp"

#include <algorithm>
#include <set>

namespace rlct {

namespace {

std::vector<long> ones(int n) { return std::vector<long>(static_cast<std::size_t>(n), 1); }

SparsePolynomial power_sum(int n, int d) {
  SparsePolynomial s(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = d;
    s += SparsePolynomial::monomial(Rational(1), Monomial(std::move(e)));
  }
  return s;
}

}  // namespace

std::vector<Rational> JumpRule::values_up_to(const Rational& bound) const {
  std::set<Rational> values;
  for (const auto& p : progressions) {
    const long k_max = floor_of(bound * p.denominator).convert_to<long>();
    for (long k = std::max(1L, p.k_min); k <= k_max; ++k) {
      values.insert(Rational(k, p.denominator));
    }
  }
  return {values.begin(), values.end()};
}

std::vector<Rational> PeriodicJumpSet::values_up_to(const Rational& bound) const {
  std::set<Rational> values;
  for (long j = 0; Rational(j) <= bound; ++j) {
    for (long k : numerators) {
      const Rational v = Rational(k, denominator) + j;
      if (v > 0 && v <= bound) {
        values.insert(v);
      }
    }
  }
  return {values.begin(), values.end()};
}

FamilyFixture monomial_family(const std::vector<int>& exponents) {
  const int n = static_cast<int>(exponents.size());
  if (n < 1 || std::none_of(exponents.begin(), exponents.end(), [](int m) { return m >= 1; })) {
    throw PreconditionError("monomial_family: need some exponent >= 1");
  }
  if (std::any_of(exponents.begin(), exponents.end(), [](int m) { return m < 0; })) {
    throw PreconditionError("monomial_family: exponents must be nonnegative");
  }
  FamilyFixture fx;
  fx.name = "monomial";
  fx.f = SparsePolynomial::monomial(Rational(1), Monomial(exponents));
  fx.model.n = n;
  fx.model.lct_exact = true;
  fx.model.label = "monomial(";
  JumpRule rule;
  Rational best = 2;  // any value > 1
  for (int i = 0; i < n; ++i) {
    const int m = exponents[static_cast<std::size_t>(i)];
    fx.model.label += (i ? "," : "") + std::to_string(m);
    if (m == 0) {
      continue;
    }
    std::vector<long> w(static_cast<std::size_t>(n), 0);
    w[static_cast<std::size_t>(i)] = 1;
    fx.model.divisors.push_back(DivisorRecord{"x" + std::to_string(i + 1), m, 0, true, std::move(w)});
    rule.progressions.push_back(JumpProgression{m, 1});
    best = std::min(best, Rational(1, m));
  }
  fx.model.label += ")";
  fx.expected_rlct = Threshold(best);
  fx.expected_lct = best;
  fx.expected_rjn = rule;
  fx.notes = "f is already normal crossing; the resolution is the identity.";
  return fx;
}

FamilyFixture simple_type_family(int n, int d) {
  if (n < 1 || d < 2) {
    throw PreconditionError("simple_type_family: need n >= 1 and d >= 2");
  }
  if (d % 2 != 0) {
    throw PreconditionError("simple_type_family: d must be even so that sum x_i^d is of simple type");
  }
  FamilyFixture fx;
  fx.name = "simple-type";
  fx.f = power_sum(n, d);
  fx.model.n = n;
  fx.model.label = "simple-type(" + std::to_string(n) + "," + std::to_string(d) + ")";
  fx.model.divisors.push_back(DivisorRecord{"E1", d, n - 1, true, ones(n)});
  fx.expected_rlct = Threshold(Rational(n, d));
  fx.expected_lct = Rational(n, d);
  fx.expected_rjn = JumpRule{{JumpProgression{d, n}}};
  fx.notes =
      "Blow-up of the origin; the exceptional divisor is the only divisor with real points. "
      "The model omits the strict transform (no real points), so lct is an upper bound.";
  return fx;
}

FamilyFixture ge_plus_h_family(int n, int d1, int e, int c) {
  if (e < 2 || c < e) {
    throw PreconditionError("ge_plus_h_family: need c >= e >= 2");
  }
  if (d1 < 1 || d1 % e != 0) {
    throw PreconditionError("ge_plus_h_family: e must divide d1");
  }
  const int d = d1 / e;
  if (n <= d) {
    throw PreconditionError("ge_plus_h_family: need n > d1 / e");
  }
  FamilyFixture fx;
  fx.name = "ge-plus-h";
  fx.model.n = n;
  fx.model.label = "ge-plus-h(" + std::to_string(n) + "," + std::to_string(d1) + "," +
                   std::to_string(e) + "," + std::to_string(c) + ")";
  fx.model.divisors.push_back(DivisorRecord{"E1", d1, n - 1, true, ones(n)});
  fx.model.divisors.push_back(DivisorRecord{"E2", d1 + e, n, false, std::nullopt});
  fx.model.lct_exact = (n == 3 && d1 == 4 && e == 2 && c == 2);
  fx.expected_rlct = Threshold(Rational(n, d1));
  fx.expected_lct = Rational(n + 1, d1 + e);
  fx.expected_rjn = JumpRule{{JumpProgression{d1, n}}};
  fx.notes =
      "E1: strict transform of the exceptional divisor of the blow-up at the origin. "
      "E2: exceptional divisor over the strict transform of Y = {g = 0}, which has no real points. ";
  if (d % 2 == 0) {
    // g = sum x_i^d has no real projective zeros for even d.
    fx.f = pow(power_sum(n, d), static_cast<unsigned>(e)) + power_sum(n, d1 + c);
    fx.notes += "Instance g = sum x_i^" + std::to_string(d) + ", h = sum x_i^" +
                std::to_string(d1 + c) + "; genericity of h is assumed, not checked.";
  } else {
    fx.notes += "No polynomial instance: deg g is odd, so no g with empty real zero set exists.";
  }
  if (!fx.model.lct_exact) {
    fx.notes += " lct from this two-divisor model is an upper bound.";
  }
  return fx;
}

FamilyFixture example_3_5_fixture() {
  FamilyFixture fx = ge_plus_h_family(3, 4, 2, 2);
  fx.name = "example-3.5";
  fx.model.label = "example-3.5";
  fx.complex_jn_superset = PeriodicJumpSet{6, {4, 5, 6}};
  fx.notes =
      "f = (x^2+y^2+z^2)^2 + x^6+y^6+z^6. g = x^2+y^2+z^2 is irreducible with no real projective "
      "zeros, Y_C = {g = 0} is a smooth conic, Z_C = {x^6+y^6+z^6 = 0} is smooth and meets Y_C at "
      "smooth points of Z_C (verified by hand, not at runtime); the two blow-ups give a full "
      "resolution, so lct = 2/3 is exact. The complex jumping numbers lie in "
      "{k/6 + j : k = 4,5,6; j >= 0}.";
  return fx;
}

}  // namespace rlct
