#include "doctest.h"

#include <random>

#include "askzeta/graph_gen.hpp"
#include "askzeta/oracle.hpp"
#include "askzeta/zeta.hpp"

using namespace askzeta;

namespace {

// direct count of x with xA = 0 over Z/p^k
Int brute_kernel(const std::vector<std::vector<Int>>& a, long long p, int k) {
  long long pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  const int n = static_cast<int>(a.size());
  const int m = n ? static_cast<int>(a[0].size()) : 0;
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= pk;
  Int count = 0;
  std::vector<long long> x(n);
  for (long long idx = 0; idx < total; ++idx) {
    long long t = idx;
    for (int i = 0; i < n; ++i) {
      x[i] = t % pk;
      t /= pk;
    }
    bool zero = true;
    for (int j = 0; j < m && zero; ++j) {
      Int s = 0;
      for (int i = 0; i < n; ++i) s += x[i] * a[i][j];
      if (s % pk != 0) zero = false;
    }
    if (zero) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("smith valuations") {
  ElementaryDivisorProfile d = smith_valuations({{1, 0, 0}, {0, 3, 0}, {0, 0, 0}}, 3);
  CHECK(d.rank == 2);
  CHECK(d.valuations == std::vector<int>{0, 1});

  ElementaryDivisorProfile r = smith_valuations({{0, 1}, {-1, 0}}, 5);
  CHECK(r.rank == 2);
  CHECK(r.valuations == std::vector<int>{0, 0});

  ElementaryDivisorProfile s = smith_valuations({{2, 4}, {6, 8}}, 2);
  CHECK(s.rank == 2);
  CHECK(s.valuations == std::vector<int>{1, 2});  // divisors 2 and 4
}

TEST_CASE("kernel sizes") {
  CHECK(kernel_size({{0, 0}, {0, 0}}, 3, 2) == 81);
  CHECK(kernel_size({{1, 0}, {0, 1}}, 3, 2) == 1);
  CHECK(kernel_size({{3}}, 3, 2) == 3);
  CHECK(kernel_size({{6, 0}, {0, 1}}, 2, 3) == 2);
}

TEST_CASE("kernel size agrees with direct counting") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 3, m = 1 + (trial / 3) % 3;
    std::vector<std::vector<Int>> a(n, std::vector<Int>(m));
    for (auto& row : a)
      for (auto& v : row) v = entry(rng);
    for (long long p : {2, 3})
      for (int k = 1; k <= 2; ++k) CHECK(kernel_size(a, p, k) == brute_kernel(a, p, k));
  }
}

TEST_CASE("average kernel size of small matrices") {
  LinearFormMatrix a = build_A_graph(Graph::complete(2), -1);
  CHECK(ask_average(a, 3, 1).value == Rat(11, 3));
  // threading must not change the exact value
  CHECK(ask_average(a, 3, 1, 100'000'000, 4).value == Rat(11, 3));
  CHECK(ask_average(a, 2, 2, 100'000'000, 4).value == ask_average(a, 2, 2).value);

  LinearFormMatrix single = build_A_hyper(Hypergraph(1, {{0}}));
  CHECK(ask_average(single, 2, 1).value == Rat(3, 2));
  CHECK(ask_average(single, 5, 1).value == Rat(9, 5));
}

TEST_CASE("budget guard") {
  LinearFormMatrix a = build_A_graph(Graph::complete(4), -1);  // six variables
  CHECK_THROWS(ask_average(a, 101, 2, 1000));
}

TEST_CASE("comparison verdicts") {
  Graph k2 = Graph::complete(2);
  auto w = wminus(k2);
  REQUIRE(w.has_value());
  LinearFormMatrix am = build_A_graph(k2, -1);
  CHECK(compare(am, w->value, 3, 1, -1).verdict == Verdict::Pass);
  CHECK(compare(am, w->value, 2, 2, -1).verdict == Verdict::Pass);

  Graph refl = k2.reflexive_closure();
  LinearFormMatrix ap = build_A_graph(refl, +1);
  BivariateRational ws = wsharp(k2).value;
  CHECK(compare(ap, ws, 3, 1, +1).verdict == Verdict::Pass);
  CHECK(compare(ap, ws, 2, 1, +1).verdict == Verdict::OutOfContract);

  // a deliberately wrong formula fails
  CHECK(compare(am, BivariateRational::geometric(0), 3, 1, -1).verdict == Verdict::Fail);
}
