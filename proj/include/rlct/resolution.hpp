#ifndef RLCT_RESOLUTION_HPP
#define RLCT_RESOLUTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "rlct/polynomial.hpp"
#include "rlct/rational.hpp"

namespace rlct {

/// One normal-crossing divisor D'_j of a resolution pi: X' -> X.
struct DivisorRecord {
  std::string id;
  long m = 1;  ///< order of pi^* f along D'_j
  long a = 0;  ///< order of the Jacobian of pi along D'_j
  bool real = true;  ///< D'_j has real points (j in J_R)
  /// Linear order functional: ord_{D'_j}(pi^* x^nu) = <weights, nu>.
  std::optional<std::vector<long>> weights;

  friend bool operator==(const DivisorRecord&, const DivisorRecord&) = default;
};

struct ResolutionModel {
  int n = 1;
  std::vector<DivisorRecord> divisors;
  std::string label;
  /// Caller asserts the divisor list is a complete complex resolution, so
  /// lct() is exact rather than an upper bound.
  bool lct_exact = false;

  friend bool operator==(const ResolutionModel&, const ResolutionModel&) = default;
};

/// Throws PreconditionError / DimensionError if the model breaks an invariant
/// (m >= 1, a >= 0, unique ids, weights of length n, nonnegative, nonzero).
void validate(const ResolutionModel& model);

/// min (a_j + 1) / m_j over real divisors; infinite when J_R is empty.
Threshold rlct(const ResolutionModel& model);

/// min (a_j + 1) / m_j over all divisors. Throws on an empty divisor list.
Rational lct(const ResolutionModel& model);

/// x^nu in J(f^alpha) at the origin: a_j + <w_j, nu> >= floor(alpha m_j) for
/// every real divisor.
bool member(const ResolutionModel& model, const Monomial& nu, const Rational& alpha);

/// x^nu in J(f^(alpha - eps)) for all small eps > 0. Exact: the floor is
/// replaced by alpha m_j - 1 when alpha m_j is an integer.
bool member_left(const ResolutionModel& model, const Monomial& nu, const Rational& alpha);

/// First nu in the box [0, box_bound]^n with member_left(nu, alpha) and not
/// member(nu, alpha), i.e. a monomial whose class is nonzero in the graded
/// piece at alpha. "First" is reverse-lexicographic: exponent vectors are
/// compared from the last variable to the first, so x1 precedes x2.
std::optional<Monomial> graded_piece_nonempty(const ResolutionModel& model, const Rational& alpha,
                                              int box_bound);

struct Jump {
  Rational value;
  Monomial witness;

  friend bool operator==(const Jump&, const Jump&) = default;
};

struct JumpReport {
  std::vector<Jump> jumps;  ///< strictly increasing values
  Rational bound;
  Threshold rlct;
  int box_bound = 0;
};

/// ceil(bound * max_j m_j) over real divisors (at least 1). Sufficient for
/// weight vectors whose entries are all >= 1.
int default_box_bound(const ResolutionModel& model, const Rational& bound);

/// Real jumping numbers in (0, bound] with monomial witnesses.
///
/// Candidates are k/m_j for real divisors j; each is kept iff the graded
/// piece has a witness inside the exponent box. A jump all of whose
/// witnesses lie outside the box is missed.
JumpReport real_jumping_numbers(const ResolutionModel& model, const Rational& bound,
                                std::optional<int> box_bound = std::nullopt);

struct ThresholdComparison {
  Threshold rlct;
  Rational lct;
  bool ordered;    ///< rlct >= lct
  bool lct_exact;  ///< false: lct is only an upper bound from a partial model
};

ThresholdComparison compare(const ResolutionModel& model);

}  // namespace rlct

#endif  // RLCT_RESOLUTION_HPP
