#include "rlct/resolution.hpp"

#include <algorithm>
#include <set>

namespace rlct {

namespace {

void require_alpha(const Rational& alpha) {
  if (alpha <= 0) {
    throw PreconditionError("alpha must be positive, got " + to_string(alpha));
  }
}

void require_dimension(const ResolutionModel& model, const Monomial& nu) {
  if (nu.size() != static_cast<std::size_t>(model.n)) {
    throw DimensionError("monomial has " + std::to_string(nu.size()) + " exponents, model n = " +
                         std::to_string(model.n));
  }
}

BigInt divisor_order(const DivisorRecord& d, const Monomial& nu) {
  if (!d.weights) {
    throw UnsupportedModel("real divisor \"" + d.id +
                           "\" has no weight vector; membership needs monomial order functionals");
  }
  BigInt order = d.a;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    order += BigInt((*d.weights)[i]) * nu[i];
  }
  return order;
}

__int128 divisor_order_fast(const DivisorRecord& d, const Monomial& nu) {
  if (!d.weights) {
    throw UnsupportedModel("real divisor \"" + d.id +
                           "\" has no weight vector; membership needs monomial order functionals");
  }
  __int128 order = d.a;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    order += static_cast<__int128>((*d.weights)[i]) * nu[i];
  }
  return order;
}

bool member_impl_exact(const ResolutionModel& model, const Monomial& nu, const Rational& alpha, bool left);

// Shared core of member / member_left; `left` selects the left-limit threshold.
bool member_impl(const ResolutionModel& model, const Monomial& nu, const Rational& alpha, bool left) {
  require_alpha(alpha);
  require_dimension(model, nu);
  // Fast path in machine integers; exhaustive property checks call this millions of times.
  const BigInt& p = boost::multiprecision::numerator(alpha);
  const BigInt& q = boost::multiprecision::denominator(alpha);
  constexpr long kSmall = 1L << 30;
  if (p < kSmall && q < kSmall) {
    const long pl = p.convert_to<long>();
    const long ql = q.convert_to<long>();
    for (const auto& d : model.divisors) {
      if (!d.real) {
        continue;
      }
      if (d.m >= kSmall) {
        return member_impl_exact(model, nu, alpha, left);
      }
      const long scaled = pl * d.m;
      long threshold = scaled / ql;
      if (left && scaled % ql == 0) {
        threshold -= 1;
      }
      if (divisor_order_fast(d, nu) < threshold) {
        return false;
      }
    }
    return true;
  }
  return member_impl_exact(model, nu, alpha, left);
}

bool member_impl_exact(const ResolutionModel& model, const Monomial& nu, const Rational& alpha, bool left) {
  for (const auto& d : model.divisors) {
    if (!d.real) {
      continue;
    }
    const Rational scaled = alpha * d.m;
    BigInt threshold = floor_of(scaled);
    if (left && is_integer(scaled)) {
      threshold -= 1;
    }
    if (divisor_order(d, nu) < threshold) {
      return false;
    }
  }
  return true;
}

}  // namespace

void validate(const ResolutionModel& model) {
  if (model.n < 1) {
    throw DimensionError("model dimension must be >= 1");
  }
  std::set<std::string> ids;
  for (const auto& d : model.divisors) {
    if (!ids.insert(d.id).second) {
      throw PreconditionError("duplicate divisor id \"" + d.id + "\"");
    }
    if (d.m < 1) {
      throw PreconditionError("divisor \"" + d.id + "\": m must be >= 1");
    }
    if (d.a < 0) {
      throw PreconditionError("divisor \"" + d.id + "\": a must be >= 0");
    }
    if (d.weights) {
      if (d.weights->size() != static_cast<std::size_t>(model.n)) {
        throw DimensionError("divisor \"" + d.id + "\": weights length must equal n");
      }
      if (std::any_of(d.weights->begin(), d.weights->end(), [](long w) { return w < 0; })) {
        throw PreconditionError("divisor \"" + d.id + "\": weights must be nonnegative");
      }
      if (std::all_of(d.weights->begin(), d.weights->end(), [](long w) { return w == 0; })) {
        throw PreconditionError("divisor \"" + d.id + "\": weights must not be the zero vector");
      }
    }
  }
}

Threshold rlct(const ResolutionModel& model) {
  validate(model);
  Threshold best = Threshold::infinity();
  for (const auto& d : model.divisors) {
    if (d.real) {
      const Threshold candidate{Rational(d.a + 1, d.m)};
      if (candidate < best) {
        best = candidate;
      }
    }
  }
  return best;
}

Rational lct(const ResolutionModel& model) {
  validate(model);
  if (model.divisors.empty()) {
    throw PreconditionError("lct of a model without divisors");
  }
  Rational best(model.divisors.front().a + 1, model.divisors.front().m);
  for (const auto& d : model.divisors) {
    best = std::min(best, Rational(d.a + 1, d.m));
  }
  return best;
}

bool member(const ResolutionModel& model, const Monomial& nu, const Rational& alpha) {
  return member_impl(model, nu, alpha, false);
}

bool member_left(const ResolutionModel& model, const Monomial& nu, const Rational& alpha) {
  return member_impl(model, nu, alpha, true);
}

std::optional<Monomial> graded_piece_nonempty(const ResolutionModel& model, const Rational& alpha,
                                              int box_bound) {
  require_alpha(alpha);
  if (box_bound < 0) {
    throw PreconditionError("box_bound must be nonnegative");
  }
  // Surface missing weights even when no divisor would reject nu = 0.
  for (const auto& d : model.divisors) {
    if (d.real && !d.weights) {
      throw UnsupportedModel("real divisor \"" + d.id + "\" has no weight vector");
    }
  }
  Monomial nu(std::vector<int>(static_cast<std::size_t>(model.n), 0));
  while (true) {
    if (member_left(model, nu, alpha) && !member(model, nu, alpha)) {
      return nu;
    }
    // Odometer with the first coordinate varying fastest.
    int i = 0;
    while (i < model.n && ++nu.exponents[static_cast<std::size_t>(i)] > box_bound) {
      nu.exponents[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == model.n) {
      return std::nullopt;
    }
  }
}

int default_box_bound(const ResolutionModel& model, const Rational& bound) {
  long max_m = 0;
  for (const auto& d : model.divisors) {
    if (d.real) {
      max_m = std::max(max_m, d.m);
    }
  }
  const BigInt box = ceil_of(bound * max_m);
  return std::max(1, box.convert_to<int>());
}

JumpReport real_jumping_numbers(const ResolutionModel& model, const Rational& bound,
                                std::optional<int> box_bound) {
  validate(model);
  if (bound <= 0) {
    throw PreconditionError("bound must be positive");
  }
  JumpReport report;
  report.bound = bound;
  report.rlct = rlct(model);
  report.box_bound = box_bound.value_or(default_box_bound(model, bound));

  std::set<Rational> candidates;  // merges values shared between divisors
  for (const auto& d : model.divisors) {
    if (!d.real) {
      continue;
    }
    const long k_max = floor_of(bound * d.m).convert_to<long>();
    for (long k = 1; k <= k_max; ++k) {
      candidates.insert(Rational(k, d.m));
    }
  }
  for (const auto& alpha : candidates) {
    if (auto witness = graded_piece_nonempty(model, alpha, report.box_bound)) {
      report.jumps.push_back(Jump{alpha, std::move(*witness)});
    }
  }
  return report;
}

ThresholdComparison compare(const ResolutionModel& model) {
  ThresholdComparison out{rlct(model), lct(model), true, model.lct_exact};
  out.ordered = out.rlct.is_infinite() || out.rlct.value() >= out.lct;
  return out;
}

}  // namespace rlct
