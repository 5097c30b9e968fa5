#ifndef ASKZETA_LINEAR_FORM_MATRIX_HPP
#define ASKZETA_LINEAR_FORM_MATRIX_HPP

#include <set>
#include <string>
#include <vector>

#include "askzeta/hypergraph.hpp"
#include "askzeta/multipoly.hpp"

namespace askzeta {

/// Matrix whose entries are 0 or (+-1) * variable over an ordered universe.
class LinearFormMatrix {
public:
  struct Entry {
    int var = -1;  // index into variable universe; -1 means zero
    int sign = 0;  // +1 or -1
  };

  LinearFormMatrix() = default;
  LinearFormMatrix(int rows, int cols, std::vector<std::string> var_names);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int num_vars() const { return static_cast<int>(var_names_.size()); }
  const std::vector<std::string>& var_names() const { return var_names_; }

  const Entry& at(int r, int c) const { return entries_[r * cols_ + c]; }
  void set(int r, int c, int var, int sign);

  MultiPoly entry_poly(int r, int c) const;

  /// Integer matrix obtained by substituting values for the variables.
  std::vector<std::vector<Int>> specialize(const std::vector<Int>& values) const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Entry> entries_;
  std::vector<std::string> var_names_;
};

/// A_H: n x m over flag variables X_{v,e}.
LinearFormMatrix build_A_hyper(const Hypergraph& h);
/// C_H: f x m over vertex variables; row (v,e), entry X_v in column of e.
LinearFormMatrix build_C_hyper(const Hypergraph& h);
/// A^pm: n x n over edge variables, (i,j) = X_e for e = {v_i,v_j}, i <= j,
/// and (j,i) = sign * X_e for i < j.
LinearFormMatrix build_A_graph(const Graph& g, int sign);
/// C^pm: m x n over vertex variables; row for e = {v_i,v_j} with i < j has
/// X_i in column j and sign * X_j in column i; a loop {v_i} has X_i in column i.
LinearFormMatrix build_C_graph(const Graph& g, int sign);

/// Exact determinant of the square submatrix M[rows | cols].
MultiPoly minor(const LinearFormMatrix& m, const std::vector<int>& rows,
                const std::vector<int>& cols);

/// All nonzero k x k minors.  Throws if C(rows,k)*C(cols,k) exceeds the guard.
std::set<MultiPoly> nonzero_minors(const LinearFormMatrix& m, int k,
                                   long long guard = 10'000'000);

struct MonomialIdeal {
  std::vector<std::vector<int>> generators;  // divisibility-minimal antichain
  int max_two_power = 0;  // largest 2-power stripped from a coefficient
};

/// Minimal monomial generators of the ideal of k x k minors.  Coefficients
/// must be +-2^j (j > 0 only occurs for the + sign); 2-powers are stripped
/// and the largest one recorded.
MonomialIdeal ideal_generators(const LinearFormMatrix& m, int k,
                               long long guard = 10'000'000);

/// Rank over the rational function field, via two independent random
/// prime specializations; disagreement is a hard error.
int symbolic_rank(const LinearFormMatrix& m);
int symbolic_rank(const LinearFormMatrix& m, unsigned seed);

enum class SquareShape { Degenerate, U1, U2, Disconnected };

struct SquareClassification {
  SquareShape shape;
  int num_parts = 1;  // for Disconnected
};

/// Shape of H[V'|E'] for h = Inc of a graph, |V'| = |E'|.
SquareClassification classify_square_subhypergraph(const Hypergraph& h,
                                                   const std::vector<int>& vs,
                                                   const std::vector<int>& es);

}  // namespace askzeta

#endif
