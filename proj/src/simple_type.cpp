#include "rlct/simple_type.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace rlct {

namespace {

using Eigen::VectorXd;

// Hyperspherical coordinates: angles[0..n-3] in [0, pi], angles[n-2] in [0, 2pi).
VectorXd sphere_point(const VectorXd& angles, int n) {
  VectorXd x(n);
  double sin_prod = 1.0;
  for (int i = 0; i < n - 1; ++i) {
    x(i) = sin_prod * std::cos(angles(i));
    sin_prod *= std::sin(angles(i));
  }
  x(n - 1) = sin_prod;
  return x;
}

struct Candidate {
  double value;
  VectorXd angles;
};

double pattern_search(const NumericPolynomial<double>& f, VectorXd& angles, double step, int n) {
  double best = f(sphere_point(angles, n));
  for (int iter = 0; iter < 400 && step > 1e-12; ++iter) {
    bool improved = false;
    for (Eigen::Index i = 0; i < angles.size(); ++i) {
      for (double sign : {1.0, -1.0}) {
        VectorXd trial = angles;
        trial(i) += sign * step;
        const double v = f(sphere_point(trial, n));
        if (v < best) {
          best = v;
          angles = trial;
          improved = true;
        }
      }
    }
    if (!improved) {
      step *= 0.5;
    }
  }
  return best;
}

// Bisects along the chord from a (f > 0) to b (f <= 0), projected onto the
// sphere, and returns a point with f <= 0 next to the sign change.
VectorXd locate_zero(const NumericPolynomial<double>& f, const VectorXd& a, const VectorXd& b) {
  if ((a + b).norm() < 1e-9) {
    return b;
  }
  double lo = 0.0;
  double hi = 1.0;
  auto point_at = [&](double t) {
    VectorXd p = (1.0 - t) * a + t * b;
    return VectorXd(p / p.norm());
  };
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (f(point_at(mid)) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return point_at(hi);
}

}  // namespace

const char* to_string(SimpleTypeStatus status) {
  switch (status) {
    case SimpleTypeStatus::SimpleType:
      return "SimpleType";
    case SimpleTypeStatus::NotSimpleType:
      return "NotSimpleType";
    case SimpleTypeStatus::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

SimpleTypeVerdict screen_simple_type(const SparsePolynomial& f_d, int grid_density,
                                     double tolerance) {
  if (f_d.is_zero()) {
    throw PreconditionError("screen_simple_type: zero form");
  }
  if (!f_d.is_homogeneous()) {
    throw PreconditionError("screen_simple_type: input is not homogeneous");
  }
  if (grid_density < 2 || !(tolerance > 0.0)) {
    throw PreconditionError("screen_simple_type: grid_density >= 2 and tolerance > 0 required");
  }
  const int n = f_d.n();
  const NumericPolynomial<double> f(f_d);

  VectorXd min_point;
  VectorXd max_point;
  double min_value = std::numeric_limits<double>::infinity();
  double max_value = -std::numeric_limits<double>::infinity();
  auto record = [&](const VectorXd& x, double v) {
    if (v < min_value) {
      min_value = v;
      min_point = x;
    }
    if (v > max_value) {
      max_value = v;
      max_point = x;
    }
  };

  if (n == 1) {
    for (double s : {1.0, -1.0}) {
      VectorXd x(1);
      x(0) = s;
      record(x, f(x));
    }
  } else {
    const int angle_dims = n - 1;
    int density = grid_density;
    const double cap = std::floor(std::pow(static_cast<double>(kSphereGridBudget), 1.0 / angle_dims));
    density = std::max(4, std::min(density, static_cast<int>(cap)));

    const double polar_step = std::numbers::pi / (density - 1);
    const double azimuth_step = 2.0 * std::numbers::pi / density;
    constexpr std::size_t kStarts = 8;
    std::vector<Candidate> best;  // kept sorted ascending by value

    std::vector<int> index(static_cast<std::size_t>(angle_dims), 0);
    VectorXd angles(angle_dims);
    while (true) {
      for (int i = 0; i < angle_dims; ++i) {
        angles(i) = (i < angle_dims - 1 ? polar_step : azimuth_step) * index[static_cast<std::size_t>(i)];
      }
      const VectorXd x = sphere_point(angles, n);
      const double v = f(x);
      record(x, v);
      if (best.size() < kStarts || v < best.back().value) {
        auto pos = std::upper_bound(best.begin(), best.end(), v,
                                    [](double val, const Candidate& c) { return val < c.value; });
        best.insert(pos, Candidate{v, angles});
        if (best.size() > kStarts) {
          best.pop_back();
        }
      }
      int d = angle_dims - 1;
      while (d >= 0 && ++index[static_cast<std::size_t>(d)] == density) {
        index[static_cast<std::size_t>(d)] = 0;
        --d;
      }
      if (d < 0) {
        break;
      }
    }

    for (auto& c : best) {
      VectorXd a = c.angles;
      const double v = pattern_search(f, a, polar_step, n);
      record(sphere_point(a, n), v);
    }
  }

  SimpleTypeVerdict verdict{SimpleTypeStatus::Inconclusive, std::nullopt, min_value};
  if (min_value > tolerance) {
    verdict.status = SimpleTypeStatus::SimpleType;
  } else if (min_value <= 0.0) {
    verdict.status = SimpleTypeStatus::NotSimpleType;
    verdict.witness = max_value > 0.0 ? locate_zero(f, max_point, min_point) : min_point;
  }
  return verdict;
}

}  // namespace rlct
