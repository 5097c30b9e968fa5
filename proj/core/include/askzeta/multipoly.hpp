#ifndef ASKZETA_MULTIPOLY_HPP
#define ASKZETA_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "askzeta/xtpoly.hpp"

namespace askzeta {

/// Sparse polynomial over an ordered variable universe: exponent vector -> Z.
class MultiPoly {
public:
  using Expo = std::vector<int>;

  MultiPoly() = default;
  static MultiPoly constant(int nvars, Int c);
  static MultiPoly variable(int nvars, int idx);
  static MultiPoly monomial(Expo e, Int c);

  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  const std::map<Expo, Int>& terms() const { return terms_; }

  void add_term(const Expo& e, const Int& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  bool operator==(const MultiPoly& o) const = default;
  bool operator<(const MultiPoly& o) const { return terms_ < o.terms_; }

  /// If the polynomial is c * X^e with a single term, expose the pieces.
  bool is_term() const { return terms_.size() == 1; }
  const Expo& term_expo() const { return terms_.begin()->first; }
  const Int& term_coeff() const { return terms_.begin()->second; }

  /// Negate if the lexicographically largest term has negative coefficient.
  MultiPoly sign_normalized() const;

  Int eval(const std::vector<Int>& values) const;

  std::string to_string(const std::vector<std::string>& var_names) const;

private:
  std::map<Expo, Int> terms_;
};

/// Divisibility-minimal antichain of exponent vectors.
std::vector<std::vector<int>> minimal_monomials(std::vector<std::vector<int>> expos);

}  // namespace askzeta

#endif
