#include "rlct/polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace rlct {

namespace {

void check_dimension(int expected, std::size_t actual, const char* what) {
  if (static_cast<std::size_t>(expected) != actual) {
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(expected) +
                         ", got " + std::to_string(actual));
  }
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  const long da = a.degree();
  const long db = b.degree();
  if (da != db) {
    return da < db;
  }
  return a < b;
}

}  // namespace

long Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0L);
}

Monomial operator+(const Monomial& a, const Monomial& b) {
  check_dimension(static_cast<int>(a.size()), b.size(), "monomial product");
  Monomial out = a;
  for (std::size_t i = 0; i < b.size(); ++i) {
    out.exponents[i] += b.exponents[i];
  }
  return out;
}

SparsePolynomial::SparsePolynomial(int n) : n_(n) {
  if (n < 1) {
    throw DimensionError("polynomial dimension must be >= 1");
  }
}

SparsePolynomial::SparsePolynomial(int n, std::vector<Term> terms) : SparsePolynomial(n) {
  for (const auto& t : terms) {
    check_dimension(n, t.exponents.size(), "polynomial term");
    if (std::any_of(t.exponents.exponents.begin(), t.exponents.exponents.end(),
                    [](int e) { return e < 0; })) {
      throw PreconditionError("negative exponent in polynomial term");
    }
  }
  terms_ = std::move(terms);
  canonicalize();
}

SparsePolynomial SparsePolynomial::constant(int n, const Rational& c) {
  return SparsePolynomial(n, {Term{c, Monomial(std::vector<int>(static_cast<std::size_t>(n), 0))}});
}

SparsePolynomial SparsePolynomial::variable(int n, int index) {
  if (index < 0 || index >= n) {
    throw DimensionError("variable index out of range");
  }
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(index)] = 1;
  return SparsePolynomial(n, {Term{Rational(1), Monomial(std::move(e))}});
}

SparsePolynomial SparsePolynomial::monomial(const Rational& c, Monomial exponents) {
  const int n = static_cast<int>(exponents.size());
  return SparsePolynomial(n, {Term{c, std::move(exponents)}});
}

void SparsePolynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return canonical_less(a.exponents, b.exponents); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exponents == t.exponents) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coefficient == 0; });
  terms_ = std::move(merged);
}

bool SparsePolynomial::is_homogeneous() const {
  return terms_.empty() || min_degree() == max_degree();
}

long SparsePolynomial::min_degree() const {
  if (terms_.empty()) {
    throw PreconditionError("degree of the zero polynomial");
  }
  return terms_.front().exponents.degree();
}

long SparsePolynomial::max_degree() const {
  if (terms_.empty()) {
    throw PreconditionError("degree of the zero polynomial");
  }
  return terms_.back().exponents.degree();
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  check_dimension(n_, static_cast<std::size_t>(other.n_), "polynomial sum");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  canonicalize();
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
  return *this += other * Rational(-1);
}

SparsePolynomial& SparsePolynomial::operator*=(const Rational& c) {
  for (auto& t : terms_) {
    t.coefficient *= c;
  }
  canonicalize();
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  check_dimension(a.n_, static_cast<std::size_t>(b.n_), "polynomial product");
  std::map<Monomial, Rational> acc;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      acc[s.exponents + t.exponents] += s.coefficient * t.coefficient;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc) {
    terms.push_back(Term{std::move(c), e});
  }
  return SparsePolynomial(a.n_, std::move(terms));
}

SparsePolynomial pow(const SparsePolynomial& p, unsigned exponent) {
  SparsePolynomial result = SparsePolynomial::constant(p.n(), Rational(1));
  SparsePolynomial base = p;
  while (exponent > 0) {
    if (exponent & 1U) {
      result = result * base;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      base = base * base;
    }
  }
  return result;
}

double evaluate(const SparsePolynomial& p, std::span<const double> x) {
  check_dimension(p.n(), x.size(), "evaluate");
  std::vector<Rational> point;
  point.reserve(x.size());
  for (double xi : x) {
    point.push_back(from_double(xi));
  }
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational term = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int e = 0; e < t.exponents[i]; ++e) {
        term *= point[i];
      }
    }
    sum += term;
  }
  return to_double(sum);
}

LeadingForm leading_form(const SparsePolynomial& p) {
  if (p.is_zero()) {
    throw PreconditionError("leading form of the zero polynomial");
  }
  const long d = p.min_degree();
  std::vector<Term> lowest;
  for (const auto& t : p.terms()) {
    if (t.exponents.degree() != d) {
      break;  // canonical order is by ascending degree
    }
    lowest.push_back(t);
  }
  return LeadingForm{d, SparsePolynomial(p.n(), std::move(lowest))};
}

SparsePolynomial sum_of_squares(std::span<const SparsePolynomial> generators) {
  if (generators.empty()) {
    throw PreconditionError("sum_of_squares needs at least one generator");
  }
  const int n = generators.front().n();
  SparsePolynomial result(n);
  bool any_nonzero = false;
  for (const auto& g : generators) {
    check_dimension(n, static_cast<std::size_t>(g.n()), "sum_of_squares");
    any_nonzero = any_nonzero || !g.is_zero();
    result += g * g;
  }
  if (!any_nonzero) {
    throw PreconditionError("sum_of_squares needs a nonzero generator");
  }
  return result;
}

}  // namespace rlct
