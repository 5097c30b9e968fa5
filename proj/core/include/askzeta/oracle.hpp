#ifndef ASKZETA_ORACLE_HPP
#define ASKZETA_ORACLE_HPP

#include <vector>

#include "askzeta/bivariate_rational.hpp"
#include "askzeta/linear_form_matrix.hpp"

namespace askzeta {

struct ElementaryDivisorProfile {
  int rank = 0;
  std::vector<int> valuations;  // nondecreasing p-adic valuations, one per divisor
};

/// Smith normal form valuations of an integer matrix at the prime p.
ElementaryDivisorProfile smith_valuations(std::vector<std::vector<Int>> m, const Int& p);

/// Size of the kernel of x -> xA acting on (Z/p^k)^n, A given as an n x m
/// integer matrix.
Int kernel_size(const std::vector<std::vector<Int>>& m, long long p, int k);

struct AskAverage {
  long long p = 0;
  int k = 0;
  int ell = 0;  // number of variables
  Rat value;
};

/// Exact average kernel size over all specializations x in (Z/p^k)^ell.
AskAverage ask_average(const LinearFormMatrix& a, long long p, int k,
                       long long budget = 100'000'000, int jobs = 1);

enum class Verdict { Pass, Fail, OutOfContract };

struct CompareReport {
  Rat ask;
  Rat formula;
  Verdict verdict = Verdict::Fail;
};

/// Compares the brute-force average against the T^k series coefficient of w
/// at X = p.  sign > 0 marks the symmetric matrix case, which is outside the
/// formula's contract at p = 2.
CompareReport compare(const LinearFormMatrix& a, const BivariateRational& w,
                      long long p, int k, int sign = 0,
                      long long budget = 100'000'000, int jobs = 1);

}  // namespace askzeta

#endif
