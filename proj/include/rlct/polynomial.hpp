#ifndef RLCT_POLYNOMIAL_HPP
#define RLCT_POLYNOMIAL_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "rlct/rational.hpp"

namespace rlct {

/// Exponent vector of a monomial x^nu.
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
  Monomial(std::initializer_list<int> e) : exponents(e) {}

  std::size_t size() const { return exponents.size(); }
  int operator[](std::size_t i) const { return exponents[i]; }
  long degree() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

Monomial operator+(const Monomial& a, const Monomial& b);

struct Term {
  Rational coefficient;
  Monomial exponents;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in n variables with exact rational coefficients.
///
/// Terms are kept in canonical order (ascending total degree, then
/// lexicographic exponent order) with duplicates merged and zero
/// coefficients removed, so structural equality is mathematical equality.
class SparsePolynomial {
 public:
  explicit SparsePolynomial(int n);
  SparsePolynomial(int n, std::vector<Term> terms);

  static SparsePolynomial constant(int n, const Rational& c);
  static SparsePolynomial variable(int n, int index);
  static SparsePolynomial monomial(const Rational& c, Monomial exponents);

  int n() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  long min_degree() const;
  long max_degree() const;

  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial& operator-=(const SparsePolynomial& other);
  SparsePolynomial& operator*=(const Rational& c);

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(SparsePolynomial a, const Rational& c) { return a *= c; }

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

 private:
  void canonicalize();

  int n_;
  std::vector<Term> terms_;
};

SparsePolynomial pow(const SparsePolynomial& p, unsigned exponent);

/// Exact evaluation at a double point: the point is converted exactly to
/// rationals, the sum is accumulated exactly and rounded once at the end.
double evaluate(const SparsePolynomial& p, std::span<const double> x);

struct LeadingForm {
  long degree;
  SparsePolynomial form;
};

/// Lowest-degree homogeneous part f_d of p (the initial form at the origin,
/// not the top-degree part).
LeadingForm leading_form(const SparsePolynomial& p);

/// Returns sum_i f_i^2. Multiplier ideals of the ideal (f_1..f_r) at
/// exponent alpha equal those of the returned f at alpha/2, so ideal
/// thresholds are twice the thresholds of the returned polynomial.
SparsePolynomial sum_of_squares(std::span<const SparsePolynomial> generators);

/// Floating-point image of a SparsePolynomial for hot evaluation loops
/// (sampling, sphere search). Evaluation is generic in the scalar type.
template <typename Scalar>
class NumericPolynomial {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit NumericPolynomial(const SparsePolynomial& p)
      : n_(p.n()),
        coefficients_(static_cast<Eigen::Index>(p.terms().size())),
        exponents_(static_cast<Eigen::Index>(p.terms().size()), p.n()) {
    for (std::size_t t = 0; t < p.terms().size(); ++t) {
      const auto row = static_cast<Eigen::Index>(t);
      coefficients_(row) = static_cast<Scalar>(to_double(p.terms()[t].coefficient));
      for (int i = 0; i < n_; ++i) {
        exponents_(row, i) = p.terms()[t].exponents[static_cast<std::size_t>(i)];
      }
    }
  }

  int n() const { return n_; }

  static Scalar int_power(Scalar base, int e) {
    Scalar result(1);
    while (e > 0) {
      if (e & 1) {
        result *= base;
      }
      base *= base;
      e >>= 1;
    }
    return result;
  }

  template <typename Derived>
  Scalar operator()(const Eigen::MatrixBase<Derived>& x) const {
    eigen_assert(x.size() == n_);
    Scalar sum(0);
    for (Eigen::Index t = 0; t < coefficients_.size(); ++t) {
      Scalar term = coefficients_(t);
      for (int i = 0; i < n_; ++i) {
        term *= int_power(static_cast<Scalar>(x(i)), exponents_(t, i));
      }
      sum += term;
    }
    return sum;
  }

 private:
  int n_;
  Vector coefficients_;
  Eigen::MatrixXi exponents_;
};

}  // namespace rlct

#endif  // RLCT_POLYNOMIAL_HPP
