#ifndef RLCT_ZETA_ORACLE_HPP
#define RLCT_ZETA_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rlct/polynomial.hpp"
#include "rlct/resolution.hpp"

namespace rlct {

enum class RegionKind { Ball, Box };

/// Support of the weight omega: the indicator of a ball or an axis box.
struct SampleRegion {
  RegionKind kind = RegionKind::Ball;
  Eigen::VectorXd center;
  double radius = 1.0;  ///< radius for a ball, half-width for a box

  static SampleRegion ball(int n, double radius = 1.0);
  static SampleRegion box(int n, double half_width = 1.0);

  int dim() const { return static_cast<int>(center.size()); }
  double volume() const;
  bool contains(const Eigen::VectorXd& x) const;
};

inline constexpr std::uint64_t kDefaultSeed = 20070725;

struct SampleConfig {
  long samples_per_level = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
  int ladder_depth = 12;  ///< levels eps_k = 2^-k, k = 1..ladder_depth
  int shards = 1;
};

/// Samples are drawn in fixed-size blocks; block b of stream s uses its own
/// generator seeded from (seed, s, b). Shards only partition the blocks, so
/// every estimate is independent of the shard count.
inline constexpr long kSampleBlockSize = 16384;

/// Levels and shells with fewer hits than this are not used in fits.
inline constexpr long kMinHits = 100;

using ScalarField = std::function<double(const Eigen::VectorXd&)>;

struct VolumeEstimate {
  double volume;
  double std_error;
  long hits;
  long samples;
};

/// Monte-Carlo estimate of vol{x in region : |f(x)| < eps} with binomial
/// standard error. `stream` selects an independent random stream.
VolumeEstimate mc_volume(const ScalarField& f, const SampleRegion& region, double eps,
                         const SampleConfig& config, std::uint64_t stream = 0);
VolumeEstimate mc_volume(const SparsePolynomial& f, const SampleRegion& region, double eps,
                         const SampleConfig& config, std::uint64_t stream = 0);

struct LevelRecord {
  int k;
  double eps;
  double volume;
  long hits;
  bool used;
};

struct McEstimate {
  double lambda_hat = 0.0;        ///< exponent of eps in V(eps) ~ C eps^lambda |log eps|^(theta-1)
  double log_exponent_hat = 0.0;  ///< theta - 1
  double std_error = 0.0;
  int levels_used = 0;
  double r_squared = 0.0;
  bool conclusive = false;
  std::uint64_t seed = 0;
  std::vector<LevelRecord> levels;
  std::vector<std::string> warnings;
};

/// Estimates the largest pole -lambda of the zeta function of |f| with
/// weight the indicator of `region` from the small-eps law of the sublevel
/// volume. Weighted least squares of log V(eps_k) on (1, log eps_k,
/// log|log eps_k|) with inverse binomial variances as weights.
McEstimate estimate_rlct(const ScalarField& f, const SampleRegion& region, const SampleConfig& config);
McEstimate estimate_rlct(const SparsePolynomial& f, const SampleRegion& region,
                         const SampleConfig& config);

enum class Integrability { Integrable, Divergent, Inconclusive };

const char* to_string(Integrability status);

struct IntegrabilityVerdict {
  Integrability status = Integrability::Inconclusive;
  /// c_k = integral of |g| |f|^-alpha over 2^-(k+1) <= |f| < 2^-k, k = 1..depth.
  std::vector<double> shell_contributions;
  std::vector<long> shell_hits;
  /// Fitted ratio c_last / c_(last-3) across the last four usable shells.
  double decay_ratio = 0.0;
  double slope = 0.0;  ///< fitted d log c_k / dk over the tail window
  double slope_stderr = 0.0;
  int shells_used = 0;
};

/// Tail classification of the dyadic shell integrals of |g| / |f|^alpha.
///
/// The log-contributions of the last (up to six) shells with at least
/// kMinHits samples are fitted linearly in k. Integrable: the fitted
/// four-shell ratio is below 0.9 and the decay is significant (slope plus
/// two standard errors below zero). Divergent: a non-decreasing trend is
/// not rejected (slope >= -2 standard errors). Otherwise, or with fewer
/// than four usable shells, Inconclusive. Uses samples_per_level *
/// ladder_depth samples in a single pass.
IntegrabilityVerdict check_integrability(const SparsePolynomial& g, const SparsePolynomial& f,
                                         const Rational& alpha, const SampleRegion& region,
                                         const SampleConfig& config);

struct Cor2Check {
  McEstimate estimate;
  Threshold rlct;
  Rational lct;
  bool lct_exact;
  double tolerance;  ///< max(0.1, 3 std_error)
  bool chain_ok;     ///< p_hat >= rlct - tol and rlct >= lct
  bool covers_origin;
  bool equality_ok;  ///< |p_hat - rlct| <= tol
};

/// Checks p(f, omega) >= rlct(f) >= lct(f_C) numerically against a model the
/// caller asserts belongs to f.
Cor2Check verify_cor2(const SparsePolynomial& f, const ResolutionModel& model,
                      const SampleRegion& region, const SampleConfig& config);

}  // namespace rlct

#endif  // RLCT_ZETA_ORACLE_HPP
