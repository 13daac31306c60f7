#ifndef RLCT_FAMILIES_HPP
#define RLCT_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "rlct/polynomial.hpp"
#include "rlct/resolution.hpp"

namespace rlct {

/// {k / denominator : k >= k_min}
struct JumpProgression {
  long denominator;
  long k_min;
};

/// Closed-form jump set: a union of arithmetic progressions.
struct JumpRule {
  std::vector<JumpProgression> progressions;

  /// Sorted, duplicate-free members in (0, bound].
  std::vector<Rational> values_up_to(const Rational& bound) const;
};

/// {k / denominator + j : k in numerators, j = 0, 1, 2, ...}
struct PeriodicJumpSet {
  long denominator;
  std::vector<long> numerators;

  std::vector<Rational> values_up_to(const Rational& bound) const;
};

struct FamilyFixture {
  std::string name;
  /// Concrete polynomial instance, when the family fixes one.
  std::optional<SparsePolynomial> f;
  ResolutionModel model;
  Threshold expected_rlct;
  std::optional<Rational> expected_lct;
  std::optional<JumpRule> expected_rjn;
  /// Superset of the jumping numbers of the complexification, carried as data.
  std::optional<PeriodicJumpSet> complex_jn_superset;
  std::string notes;
};

/// f = prod x_i^{m_i}, already normal crossing; identity resolution.
FamilyFixture monomial_family(const std::vector<int>& exponents);

/// f = sum x_i^d with d even: isolated zero of simple type, one blow-up.
FamilyFixture simple_type_family(int n, int d);

/// f = g^e + h with deg g^e = d1, deg h = d1 + c, and an empty real
/// projective zero set of g; two blow-ups, only the first has real points.
FamilyFixture ge_plus_h_family(int n, int d1, int e, int c);

/// (x^2 + y^2 + z^2)^2 + x^6 + y^6 + z^6.
FamilyFixture example_3_5_fixture();

}  // namespace rlct

#endif  // RLCT_FAMILIES_HPP
