#ifndef RLCT_SIMPLE_TYPE_HPP
#define RLCT_SIMPLE_TYPE_HPP

#include <optional>

#include <Eigen/Core>

#include "rlct/polynomial.hpp"

namespace rlct {

enum class SimpleTypeStatus { SimpleType, NotSimpleType, Inconclusive };

const char* to_string(SimpleTypeStatus status);

struct SimpleTypeVerdict {
  SimpleTypeStatus status;
  /// Point on the unit sphere with f_d(witness) <= tolerance. Present iff
  /// status is NotSimpleType.
  std::optional<Eigen::VectorXd> witness;
  double min_found;
};

/// Upper bound on the number of sphere grid points. In high dimension the
/// per-angle density is reduced so the grid stays within this budget.
inline constexpr long kSphereGridBudget = 1'000'000;

/// Screens whether a homogeneous form has no real zero on the unit sphere
/// (an isolated zero of simple type at the origin).
///
/// Minimizes f_d over a deterministic hyperspherical-angle grid followed by
/// one pass of local pattern-search refinement from the best grid points.
/// A minimum above `tolerance` gives SimpleType; a value <= 0 gives
/// NotSimpleType with a near-zero witness; anything in between is
/// Inconclusive. This is a numerical screen, not a decision procedure: a
/// positive answer can be wrong for forms whose zeros fall between grid
/// points and escape refinement.
SimpleTypeVerdict screen_simple_type(const SparsePolynomial& f_d, int grid_density = 50,
                                     double tolerance = 1e-6);

}  // namespace rlct

#endif  // RLCT_SIMPLE_TYPE_HPP
