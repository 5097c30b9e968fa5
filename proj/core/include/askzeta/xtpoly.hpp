#ifndef ASKZETA_XTPOLY_HPP
#define ASKZETA_XTPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace askzeta {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Laurent polynomial in X over the integers.
/// Keys are X-exponents (may be negative).
using XPoly = std::map<int, Int>;

XPoly xpoly_mul(const XPoly& a, const XPoly& b);
XPoly xpoly_add(const XPoly& a, const XPoly& b);
Rat xpoly_eval(const XPoly& a, const Rat& q);
bool xpoly_is_zero(const XPoly& a);
std::string xpoly_to_string(const XPoly& a);

/// Polynomial in T with Laurent-in-X coefficients.  The workhorse for
/// numerators of the rational functions attached to (hyper)graphs.
/// Term key is (t_exponent, x_exponent); t >= 0, x in Z.
class XTPoly {
public:
  using Key = std::pair<int, int>;  // (t, x)

  XTPoly() = default;
  static XTPoly one() { return constant(1); }
  static XTPoly constant(Int c);
  /// c * X^x * T^t
  static XTPoly term(Int c, int x, int t);
  /// 1 - X^a T
  static XTPoly one_minus_xa_t(int a);

  bool is_zero() const { return terms_.empty(); }
  int deg_t() const;  // -1 for zero polynomial
  const std::map<Key, Int>& terms() const { return terms_; }

  void add_term(int t, int x, const Int& c);

  XTPoly operator+(const XTPoly& o) const;
  XTPoly operator-(const XTPoly& o) const;
  XTPoly operator*(const XTPoly& o) const;
  XTPoly operator-() const;
  bool operator==(const XTPoly& o) const { return terms_ == o.terms_; }

  /// Coefficient of T^k, as a Laurent polynomial in X.
  XPoly coeff_t(int k) const;

  /// T <- X^c * T
  XTPoly subst_t_scale(int c) const;
  /// X <- X^{-1}
  XTPoly subst_x_inverse() const;

  /// Exact division by (1 - X^a T); nullopt if the division has a remainder.
  std::optional<XTPoly> divide_by_factor(int a) const;

  /// Quotient and remainder of division by d in T (leading T-coefficient of d
  /// must be a monomial in X with coefficient +-1).
  std::pair<XTPoly, XTPoly> divmod_t(const XTPoly& d) const;

  Rat eval(const Rat& q, const Rat& t) const;

private:
  std::map<Key, Int> terms_;
};

}  // namespace askzeta

#endif
