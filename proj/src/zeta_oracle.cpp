#include "rlct/zeta_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include <Eigen/Dense>

namespace rlct {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t block_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t block) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ block);
}

// Uniform in [-1, 1), built from raw generator bits so the stream does not
// depend on the standard library's distribution implementation.
double uniform_pm1(std::mt19937_64& rng) {
  return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
}

void draw_point(const SampleRegion& region, std::mt19937_64& rng, VectorXd& x) {
  const int n = region.dim();
  if (region.kind == RegionKind::Box) {
    for (int i = 0; i < n; ++i) {
      x(i) = uniform_pm1(rng);
    }
  } else {
    do {
      for (int i = 0; i < n; ++i) {
        x(i) = uniform_pm1(rng);
      }
    } while (x.squaredNorm() > 1.0);
  }
  x = region.center + region.radius * x;
}

// Runs `visit(acc, x)` over `total` samples split into fixed blocks and
// returns one accumulator per block, in block order.
template <typename Acc, typename Visit>
std::vector<Acc> sample_blocks(const SampleRegion& region, long total, std::uint64_t seed,
                               std::uint64_t stream, int shards, const Acc& init, Visit visit) {
  const long blocks = (total + kSampleBlockSize - 1) / kSampleBlockSize;
  std::vector<Acc> results(static_cast<std::size_t>(blocks), init);
  const auto run_shard = [&](long shard, long shard_count) {
    VectorXd x(region.dim());
    for (long b = shard; b < blocks; b += shard_count) {
      std::mt19937_64 rng(block_seed(seed, stream, static_cast<std::uint64_t>(b)));
      const long count = std::min(kSampleBlockSize, total - b * kSampleBlockSize);
      Acc& acc = results[static_cast<std::size_t>(b)];
      for (long s = 0; s < count; ++s) {
        draw_point(region, rng, x);
        visit(acc, x);
      }
    }
  };
  const long shard_count = std::clamp<long>(shards, 1, std::max<long>(1, blocks));
  if (shard_count == 1) {
    run_shard(0, 1);
  } else {
    std::vector<std::jthread> workers;
    for (long s = 0; s < shard_count; ++s) {
      workers.emplace_back(run_shard, s, shard_count);
    }
  }
  return results;
}

void require_config(const SampleConfig& config) {
  if (config.samples_per_level < 1 || config.ladder_depth < 1 || config.shards < 1) {
    throw PreconditionError("sample config: samples, depth and shards must be positive");
  }
}

void require_region(const SampleRegion& region, int n) {
  if (region.dim() != n) {
    throw DimensionError("region dimension " + std::to_string(region.dim()) +
                         " does not match polynomial dimension " + std::to_string(n));
  }
  if (!(region.radius > 0.0)) {
    throw PreconditionError("region radius must be positive");
  }
}

ScalarField as_field(const SparsePolynomial& f) {
  return [poly = NumericPolynomial<double>(f)](const VectorXd& x) { return poly(x); };
}

struct WeightedFit {
  VectorXd beta;
  MatrixXd covariance;
  double r_squared;
};

WeightedFit weighted_least_squares(const MatrixXd& design, const VectorXd& y, const VectorXd& w) {
  const MatrixXd normal = design.transpose() * w.asDiagonal() * design;
  const VectorXd rhs = design.transpose() * w.asDiagonal() * y;
  Eigen::LDLT<MatrixXd> ldlt(normal);
  WeightedFit fit;
  fit.beta = ldlt.solve(rhs);
  const VectorXd residual = y - design * fit.beta;
  const double chi2 = residual.dot(w.asDiagonal() * residual);
  const double ybar = y.dot(w) / w.sum();
  const double total = (y.array() - ybar).square().matrix().dot(w);
  fit.r_squared = total > 0.0 ? 1.0 - chi2 / total : 1.0;
  const Eigen::Index dof = design.rows() - design.cols();
  // Weights are inverse variances; inflate only when the scatter exceeds them.
  const double scale = dof > 0 ? std::max(1.0, chi2 / static_cast<double>(dof)) : 1.0;
  fit.covariance = ldlt.solve(MatrixXd::Identity(normal.rows(), normal.cols())) * scale;
  return fit;
}

}  // namespace

SampleRegion SampleRegion::ball(int n, double radius) {
  return SampleRegion{RegionKind::Ball, VectorXd::Zero(n), radius};
}

SampleRegion SampleRegion::box(int n, double half_width) {
  return SampleRegion{RegionKind::Box, VectorXd::Zero(n), half_width};
}

double SampleRegion::volume() const {
  const double n = dim();
  if (kind == RegionKind::Box) {
    return std::pow(2.0 * radius, n);
  }
  return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0) * std::pow(radius, n);
}

bool SampleRegion::contains(const VectorXd& x) const {
  if (x.size() != center.size()) {
    throw DimensionError("point dimension does not match region");
  }
  if (kind == RegionKind::Box) {
    return ((x - center).cwiseAbs().array() <= radius).all();
  }
  return (x - center).norm() <= radius;
}

VolumeEstimate mc_volume(const ScalarField& f, const SampleRegion& region, double eps,
                         const SampleConfig& config, std::uint64_t stream) {
  require_config(config);
  if (!(eps > 0.0)) {
    throw PreconditionError("mc_volume: eps must be positive");
  }
  const auto per_block = sample_blocks(region, config.samples_per_level, config.seed, stream,
                                       config.shards, 0L, [&](long& hits, const VectorXd& x) {
                                         if (std::abs(f(x)) < eps) {
                                           ++hits;
                                         }
                                       });
  long hits = 0;
  for (long h : per_block) {
    hits += h;
  }
  const double n = static_cast<double>(config.samples_per_level);
  const double p = hits / n;
  const double vol = region.volume();
  return VolumeEstimate{vol * p, vol * std::sqrt(p * (1.0 - p) / n), hits, config.samples_per_level};
}

VolumeEstimate mc_volume(const SparsePolynomial& f, const SampleRegion& region, double eps,
                         const SampleConfig& config, std::uint64_t stream) {
  require_region(region, f.n());
  return mc_volume(as_field(f), region, eps, config, stream);
}

McEstimate estimate_rlct(const ScalarField& f, const SampleRegion& region, const SampleConfig& config) {
  require_config(config);
  McEstimate est;
  est.seed = config.seed;
  const double n = static_cast<double>(config.samples_per_level);

  std::vector<double> log_eps;
  std::vector<double> log_vol;
  std::vector<double> weights;
  for (int k = 1; k <= config.ladder_depth; ++k) {
    const double eps = std::ldexp(1.0, -k);
    const VolumeEstimate v = mc_volume(f, region, eps, config, static_cast<std::uint64_t>(k));
    const bool used = v.hits >= kMinHits;
    est.levels.push_back(LevelRecord{k, eps, v.volume, v.hits, used});
    if (!used) {
      continue;
    }
    const double p = std::min(v.hits / n, 1.0 - 1.0 / n);
    log_eps.push_back(std::log(eps));
    log_vol.push_back(std::log(v.volume));
    weights.push_back(v.hits / (1.0 - p));  // 1 / Var(log V) to first order
  }
  est.levels_used = static_cast<int>(log_eps.size());
  if (est.levels_used < 3) {
    est.lambda_hat = std::numeric_limits<double>::quiet_NaN();
    est.log_exponent_hat = std::numeric_limits<double>::quiet_NaN();
    est.std_error = std::numeric_limits<double>::quiet_NaN();
    est.warnings.push_back(est.levels_used == 0
                               ? "no sublevel hits at any level; f may not vanish in the region"
                               : "fewer than 3 levels with enough hits");
    return est;
  }

  MatrixXd design(est.levels_used, 3);
  VectorXd y(est.levels_used);
  VectorXd w(est.levels_used);
  for (int i = 0; i < est.levels_used; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    design(i, 0) = 1.0;
    design(i, 1) = log_eps[ui];
    design(i, 2) = std::log(-log_eps[ui]);
    y(i) = log_vol[ui];
    w(i) = weights[ui];
  }
  const WeightedFit fit = weighted_least_squares(design, y, w);
  est.lambda_hat = fit.beta(1);
  est.log_exponent_hat = fit.beta(2);
  est.std_error = std::sqrt(fit.covariance(1, 1));
  est.r_squared = fit.r_squared;
  est.conclusive = true;
  if (est.levels_used < config.ladder_depth / 2) {
    est.warnings.push_back("fewer than half of the ladder levels had enough hits");
  }
  return est;
}

McEstimate estimate_rlct(const SparsePolynomial& f, const SampleRegion& region,
                         const SampleConfig& config) {
  require_region(region, f.n());
  return estimate_rlct(as_field(f), region, config);
}

const char* to_string(Integrability status) {
  switch (status) {
    case Integrability::Integrable:
      return "Integrable";
    case Integrability::Divergent:
      return "Divergent";
    case Integrability::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

IntegrabilityVerdict check_integrability(const SparsePolynomial& g, const SparsePolynomial& f,
                                         const Rational& alpha, const SampleRegion& region,
                                         const SampleConfig& config) {
  require_config(config);
  if (g.n() != f.n()) {
    throw DimensionError("check_integrability: g and f dimensions differ");
  }
  require_region(region, f.n());
  if (alpha <= 0) {
    throw PreconditionError("check_integrability: alpha must be positive");
  }
  const int depth = config.ladder_depth;
  const double a = to_double(alpha);
  const NumericPolynomial<double> fn(f);
  const NumericPolynomial<double> gn(g);

  struct Shells {
    std::vector<double> sum;
    std::vector<double> sum_sq;
    std::vector<long> hits;
  };
  const auto slots = static_cast<std::size_t>(depth + 1);
  const Shells empty{std::vector<double>(slots, 0.0), std::vector<double>(slots, 0.0),
                     std::vector<long>(slots, 0)};
  const long total = config.samples_per_level * depth;
  constexpr std::uint64_t kShellStream = 0x5e11;
  const auto per_block =
      sample_blocks(region, total, config.seed, kShellStream, config.shards, empty,
                    [&](Shells& acc, const VectorXd& x) {
                      const double fx = std::abs(fn(x));
                      if (fx == 0.0 || fx >= 0.5) {
                        return;
                      }
                      int e = 0;
                      std::frexp(fx, &e);  // fx in [2^(e-1), 2^e)
                      const int k = -e;
                      if (k < 1 || k > depth) {
                        return;
                      }
                      const double v = std::abs(gn(x)) * std::pow(fx, -a);
                      const auto uk = static_cast<std::size_t>(k);
                      acc.sum[uk] += v;
                      acc.sum_sq[uk] += v * v;
                      acc.hits[uk] += 1;
                    });
  Shells all = empty;
  for (const auto& b : per_block) {
    for (std::size_t k = 0; k < slots; ++k) {
      all.sum[k] += b.sum[k];
      all.sum_sq[k] += b.sum_sq[k];
      all.hits[k] += b.hits[k];
    }
  }

  IntegrabilityVerdict verdict;
  const double n = static_cast<double>(total);
  const double vol = region.volume();
  std::vector<int> usable;
  std::vector<double> log_c;
  std::vector<double> inv_var;
  for (int k = 1; k <= depth; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const double mean = all.sum[uk] / n;
    const double c = vol * mean;
    verdict.shell_contributions.push_back(c);
    verdict.shell_hits.push_back(all.hits[uk]);
    if (all.hits[uk] < kMinHits || c <= 0.0) {
      continue;
    }
    const double var = std::max(all.sum_sq[uk] / n - mean * mean, 0.0) / n;
    const double rel = std::sqrt(var) / mean;  // standard error of log c_k
    usable.push_back(k);
    log_c.push_back(std::log(c));
    inv_var.push_back(1.0 / std::max(rel * rel, 1e-300));
  }
  if (usable.size() < 4) {
    return verdict;
  }
  constexpr std::size_t kTailWindow = 6;
  const std::size_t start = usable.size() > kTailWindow ? usable.size() - kTailWindow : 0;
  const auto rows = static_cast<Eigen::Index>(usable.size() - start);
  MatrixXd design(rows, 2);
  VectorXd y(rows);
  VectorXd w(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const std::size_t src = start + static_cast<std::size_t>(i);
    design(i, 0) = 1.0;
    design(i, 1) = usable[src];
    y(i) = log_c[src];
    w(i) = inv_var[src];
  }
  const WeightedFit fit = weighted_least_squares(design, y, w);
  verdict.shells_used = static_cast<int>(rows);
  verdict.slope = fit.beta(1);
  verdict.slope_stderr = std::sqrt(fit.covariance(1, 1));
  verdict.decay_ratio = std::exp(3.0 * verdict.slope);

  const double upper = verdict.slope + 2.0 * verdict.slope_stderr;
  if (verdict.decay_ratio < 0.9 && upper < 0.0) {
    verdict.status = Integrability::Integrable;
  } else if (verdict.slope >= -2.0 * verdict.slope_stderr) {
    verdict.status = Integrability::Divergent;
  }
  return verdict;
}

Cor2Check verify_cor2(const SparsePolynomial& f, const ResolutionModel& model,
                      const SampleRegion& region, const SampleConfig& config) {
  if (model.n != f.n()) {
    throw DimensionError("verify_cor2: model and polynomial dimensions differ");
  }
  Cor2Check out{estimate_rlct(f, region, config), rlct(model), lct(model), model.lct_exact, 0.1,
                false, region.contains(VectorXd::Zero(f.n())), false};
  const McEstimate& est = out.estimate;
  if (!est.conclusive || out.rlct.is_infinite()) {
    return out;
  }
  out.tolerance = std::max(0.1, 3.0 * est.std_error);
  const double r = to_double(out.rlct.value());
  out.chain_ok = est.lambda_hat >= r - out.tolerance && out.rlct.value() >= out.lct;
  out.equality_ok = std::abs(est.lambda_hat - r) <= out.tolerance;
  return out;
}

}  // namespace rlct
