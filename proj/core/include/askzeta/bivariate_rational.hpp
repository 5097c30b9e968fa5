#ifndef ASKZETA_BIVARIATE_RATIONAL_HPP
#define ASKZETA_BIVARIATE_RATIONAL_HPP

#include <vector>

#include "askzeta/xtpoly.hpp"

namespace askzeta {

/// Rational function N(X,T) / prod_i (1 - X^{a_i} T) with integer-coefficient
/// numerator, Laurent in X.  The only denominators this library ever needs are
/// products of factors of this shape; the representation keeps normalisation
/// (exact divisibility tests) and Hadamard-product bounds exact.
class BivariateRational {
public:
  BivariateRational() : num_(XTPoly::constant(0)) {}
  explicit BivariateRational(XTPoly num) : num_(std::move(num)) {}
  BivariateRational(XTPoly num, std::vector<int> den);

  static BivariateRational one() { return BivariateRational(XTPoly::one()); }
  static BivariateRational zero() { return BivariateRational(); }
  /// 1 / (1 - X^a T)
  static BivariateRational geometric(int a);

  const XTPoly& num() const { return num_; }
  /// Denominator exponents a, one per factor (1 - X^a T), sorted descending.
  const std::vector<int>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  BivariateRational operator+(const BivariateRational& o) const;
  BivariateRational operator-(const BivariateRational& o) const;
  BivariateRational operator*(const BivariateRational& o) const;

  /// Multiply by the polynomial (1 - X^a T).
  BivariateRational mul_by_factor(int a) const;
  /// Divide by (1 - X^a T): cancels a numerator factor if exact, otherwise
  /// appends a denominator factor.
  BivariateRational div_by_factor(int a) const;
  /// Multiply by c * X^x * T^t.
  BivariateRational scale_by_monomial(const Int& c, int x, int t) const;

  /// T <- X^c T
  BivariateRational subst_t_scale(int c) const;
  /// X <- X^{-1}
  BivariateRational subst_x_inverse() const;

  /// Coefficientwise product of the T-series (Hadamard product in T).
  BivariateRational hadamard_t(const BivariateRational& o) const;

  /// Series coefficients of T^0..T^N.
  std::vector<XPoly> series_prefix(int n) const;
  XPoly coefficient(int k) const;

  /// Exact value at (X,T) = (q,t); throws on a pole.
  Rat evaluate_qt(const Rat& q, const Rat& t) const;

  /// Denominator exponents of the normalised form.
  std::vector<int> local_poles() const;
  /// Multiplicity of the factor (1 - T), i.e. the pole order at T = 1.
  int pole_order_at_t1() const;

  /// Cancel every denominator factor dividing the numerator.  Idempotent.
  BivariateRational normalized() const;

  /// Structural equality of normalised forms (the representation is unique).
  bool operator==(const BivariateRational& o) const;

private:
  XTPoly num_;
  std::vector<int> den_;  // sorted descending
  void sort_den();
};

}  // namespace askzeta

#endif
