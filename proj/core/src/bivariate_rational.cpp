#include "askzeta/bivariate_rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace askzeta {

namespace {

std::map<int, int> multiset_of(const std::vector<int>& v) {
  std::map<int, int> m;
  for (int a : v) m[a]++;
  return m;
}

XTPoly expand_factors(const std::vector<int>& den) {
  XTPoly d = XTPoly::one();
  for (int a : den) d = d * XTPoly::one_minus_xa_t(a);
  return d;
}

}  // namespace

BivariateRational::BivariateRational(XTPoly num, std::vector<int> den)
    : num_(std::move(num)), den_(std::move(den)) {
  sort_den();
}

void BivariateRational::sort_den() {
  std::sort(den_.begin(), den_.end(), std::greater<int>());
}

BivariateRational BivariateRational::geometric(int a) {
  return BivariateRational(XTPoly::one(), {a});
}

BivariateRational BivariateRational::operator+(const BivariateRational& o) const {
  // Common denominator: multiset max of the two factor multisets.
  auto m1 = multiset_of(den_), m2 = multiset_of(o.den_);
  std::map<int, int> mu = m1;
  for (const auto& [a, c] : m2) mu[a] = std::max(mu[a], c);
  XTPoly n1 = num_, n2 = o.num_;
  std::vector<int> den;
  for (const auto& [a, c] : mu) {
    for (int i = m1[a]; i < c; ++i) n1 = n1 * XTPoly::one_minus_xa_t(a);
    for (int i = m2[a]; i < c; ++i) n2 = n2 * XTPoly::one_minus_xa_t(a);
    for (int i = 0; i < c; ++i) den.push_back(a);
  }
  return BivariateRational(n1 + n2, std::move(den));
}

BivariateRational BivariateRational::operator-(const BivariateRational& o) const {
  return *this + BivariateRational(-o.num_, o.den_);
}

BivariateRational BivariateRational::operator*(const BivariateRational& o) const {
  std::vector<int> den = den_;
  den.insert(den.end(), o.den_.begin(), o.den_.end());
  return BivariateRational(num_ * o.num_, std::move(den));
}

BivariateRational BivariateRational::mul_by_factor(int a) const {
  // Cancel a matching denominator factor if present.
  auto it = std::find(den_.begin(), den_.end(), a);
  if (it != den_.end()) {
    std::vector<int> den = den_;
    den.erase(den.begin() + (it - den_.begin()));
    return BivariateRational(num_, std::move(den));
  }
  return BivariateRational(num_ * XTPoly::one_minus_xa_t(a), den_);
}

BivariateRational BivariateRational::div_by_factor(int a) const {
  if (auto q = num_.divide_by_factor(a)) return BivariateRational(*q, den_);
  std::vector<int> den = den_;
  den.push_back(a);
  return BivariateRational(num_, std::move(den));
}

BivariateRational BivariateRational::scale_by_monomial(const Int& c, int x, int t) const {
  return BivariateRational(num_ * XTPoly::term(c, x, t), den_);
}

BivariateRational BivariateRational::subst_t_scale(int c) const {
  std::vector<int> den;
  den.reserve(den_.size());
  for (int a : den_) den.push_back(a + c);
  return BivariateRational(num_.subst_t_scale(c), std::move(den));
}

BivariateRational BivariateRational::subst_x_inverse() const {
  std::vector<int> den;
  den.reserve(den_.size());
  for (int a : den_) den.push_back(-a);
  return BivariateRational(num_.subst_x_inverse(), std::move(den));
}

std::vector<XPoly> BivariateRational::series_prefix(int n) const {
  XTPoly d = expand_factors(den_);
  const int dd = d.deg_t();
  std::vector<XPoly> c(n + 1);
  for (int k = 0; k <= n; ++k) {
    XPoly ck = num_.coeff_t(k);
    for (int j = 1; j <= std::min(k, dd); ++j) {
      XPoly sub = xpoly_mul(d.coeff_t(j), c[k - j]);
      for (auto& [x, v] : sub) v = -v;
      ck = xpoly_add(ck, sub);
    }
    c[k] = std::move(ck);
  }
  return c;
}

XPoly BivariateRational::coefficient(int k) const {
  return series_prefix(k)[k];
}

Rat BivariateRational::evaluate_qt(const Rat& q, const Rat& t) const {
  if (q == 0) throw std::domain_error("evaluate_qt: q must be nonzero");
  Rat d = 1;
  for (int a : den_) {
    Rat qa = 1;
    const Rat base = (a >= 0) ? q : Rat(1) / q;
    for (int i = 0; i < std::abs(a); ++i) qa *= base;
    Rat f = 1 - qa * t;
    if (f == 0) throw std::domain_error("evaluate_qt: evaluation at a pole");
    d *= f;
  }
  return num_.eval(q, t) / d;
}

std::vector<int> BivariateRational::local_poles() const { return normalized().den_; }

int BivariateRational::pole_order_at_t1() const {
  auto poles = local_poles();
  return static_cast<int>(std::count(poles.begin(), poles.end(), 0));
}

BivariateRational BivariateRational::normalized() const {
  XTPoly n = num_;
  std::vector<int> den;
  den.reserve(den_.size());
  for (int a : den_) {
    if (auto q = n.divide_by_factor(a))
      n = *q;
    else
      den.push_back(a);
  }
  return BivariateRational(std::move(n), std::move(den));
}

bool BivariateRational::operator==(const BivariateRational& o) const {
  BivariateRational a = normalized(), b = o.normalized();
  return a.den_ == b.den_ && a.num_ == b.num_;
}

BivariateRational BivariateRational::hadamard_t(const BivariateRational& o) const {
  BivariateRational f = normalized(), g = o.normalized();

  // Split off polynomial parts so the proper parts have a denominator bound.
  auto split = [](const BivariateRational& r) {
    XTPoly d = expand_factors(r.den());
    if (d.deg_t() == 0 || r.num().deg_t() < d.deg_t())
      return std::pair<XTPoly, BivariateRational>{XTPoly{}, r};
    auto [q, rem] = r.num().divmod_t(d);
    return std::pair<XTPoly, BivariateRational>{q, BivariateRational(rem, r.den())};
  };
  auto [pf, rf] = split(f);
  auto [pg, rg] = split(g);

  BivariateRational result;

  // Finite pieces: P_f (*) g and R_f (*) P_g.
  auto finite_piece = [](const XTPoly& p, const BivariateRational& whole) {
    XTPoly acc;
    const int d = p.deg_t();
    if (d < 0) return BivariateRational();
    auto series = whole.series_prefix(d);
    for (int k = 0; k <= d; ++k) {
      XPoly prod = xpoly_mul(p.coeff_t(k), series[k]);
      for (const auto& [x, c] : prod) acc.add_term(k, x, c);
    }
    return BivariateRational(acc);
  };
  result = result + finite_piece(pf, g) + finite_piece(pg, rf);

  // Proper (*) proper: denominator divides prod_{i,j} (1 - X^{a_i+b_j} T).
  if (!rf.is_zero() && !rg.is_zero()) {
    std::vector<int> den;
    for (int a : rf.den())
      for (int b : rg.den()) den.push_back(a + b);
    const int dd = static_cast<int>(den.size());
    auto sf = rf.series_prefix(dd);
    auto sg = rg.series_prefix(dd);
    XTPoly hs;  // truncated Hadamard series
    for (int k = 0; k < dd; ++k)
      for (const auto& [x, c] : xpoly_mul(sf[k], sg[k])) hs.add_term(k, x, c);
    XTPoly d = expand_factors(den);
    XTPoly hd = hs * d;
    XTPoly numr;
    for (const auto& [key, c] : hd.terms())
      if (key.first < dd) numr.add_term(key.first, key.second, c);
    result = result + BivariateRational(numr, den);
  }

  result = result.normalized();

  // Hard assertion from the contract: the series of the result must agree
  // with the pointwise coefficient products.
  const int check = 2 * static_cast<int>(result.den().size()) + 4;
  auto sr = result.series_prefix(check);
  auto sf = f.series_prefix(check);
  auto sg = g.series_prefix(check);
  for (int k = 0; k <= check; ++k)
    if (sr[k] != xpoly_mul(sf[k], sg[k]))
      throw std::logic_error("hadamard_t: series verification failed");
  return result;
}

}  // namespace askzeta
