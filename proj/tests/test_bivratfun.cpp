#include "doctest.h"

#include "askzeta/bivariate_rational.hpp"

using namespace askzeta;

namespace {

BivariateRational geom(int a) { return BivariateRational::geometric(a); }

}  // namespace

TEST_CASE("normalization cancels matching factors") {
  // (1-T)/((1-T)(1-XT)) -> 1/(1-XT)
  BivariateRational f(XTPoly::one_minus_xa_t(0), {0, 1});
  BivariateRational n = f.normalized();
  CHECK(n.den() == std::vector<int>{1});
  CHECK(n.num() == XTPoly::one());
  CHECK(n == geom(1));
  CHECK(n.normalized() == n);
}

TEST_CASE("mul then div by the same factor is the identity") {
  BivariateRational f = geom(1) + geom(0).scale_by_monomial(2, -1, 1);
  CHECK(f.mul_by_factor(0).div_by_factor(0) == f);
  CHECK(f.div_by_factor(2).mul_by_factor(2) == f);
}

TEST_CASE("series of geometric series") {
  auto c = geom(1).series_prefix(5);
  for (int k = 0; k <= 5; ++k) {
    XPoly expect{{k, 1}};
    CHECK(c[k] == expect);
  }
}

TEST_CASE("arithmetic identity via cross multiplication") {
  // 1/(1-T) + (X-1)T/((1-XT)(1-T)) = 1/(1-XT)
  XTPoly num = XTPoly::term(1, 1, 1) - XTPoly::term(1, 0, 1);
  BivariateRational f = geom(0) + BivariateRational(num, {1, 0});
  CHECK(f == geom(1));
}

TEST_CASE("hadamard of two geometric series") {
  CHECK(geom(1).hadamard_t(geom(1)) == geom(2));
  CHECK(geom(2).hadamard_t(geom(-1)) == geom(1));
}

TEST_CASE("hadamard with 1/(1-T) is the identity on proper parts") {
  BivariateRational f(XTPoly::one() - XTPoly::term(1, -1, 1), {0, 1});
  CHECK(f.hadamard_t(geom(0)) == f);
}

TEST_CASE("substitutions") {
  // W- of a single vertex is 1/(1-XT); T -> X^-1 T gives 1/(1-T)
  CHECK(geom(1).subst_t_scale(-1) == geom(0));
  BivariateRational f(XTPoly::one() - XTPoly::term(3, -2, 1), {1, 1, 0});
  CHECK(f.subst_t_scale(5).subst_t_scale(-5) == f);
  CHECK(f.subst_x_inverse().subst_x_inverse() == f);
}

TEST_CASE("K2 coefficient and evaluation") {
  // (1 - X^-1 T)/((1-T)(1-XT))
  BivariateRational w(XTPoly::one() - XTPoly::term(1, -1, 1), {1, 0});
  XPoly c1 = w.coefficient(1);
  XPoly expect{{1, 1}, {0, 1}, {-1, -1}};  // X + 1 - X^-1
  CHECK(c1 == expect);
  CHECK(xpoly_eval(c1, Rat(3)) == Rat(11, 3));
  CHECK(w.coefficient(0) == XPoly{{0, 1}});
  // evaluate_qt at small t agrees with the series
  Rat q(3), t(1, 100);
  Rat direct = w.evaluate_qt(q, t);
  Rat partial = 0, tk = 1;
  auto cs = w.series_prefix(60);
  for (const auto& ck : cs) {
    partial += xpoly_eval(ck, q) * tk;
    tk *= t;
  }
  Rat diff = direct - partial;
  Rat bound(1, 1);
  for (int i = 0; i < 50; ++i) bound /= 10;
  CHECK(abs(numerator(diff)) * denominator(bound) <
        abs(denominator(diff)) * numerator(bound));
}

TEST_CASE("local poles and pole order") {
  BivariateRational f(XTPoly::one(), {0, 0, -1});
  CHECK(f.pole_order_at_t1() == 2);
  CHECK(f.local_poles() == std::vector<int>{0, 0, -1});
  CHECK(geom(1).pole_order_at_t1() == 0);
}

TEST_CASE("evaluation at a pole throws") {
  CHECK_THROWS(geom(0).evaluate_qt(Rat(3), Rat(1)));
}
