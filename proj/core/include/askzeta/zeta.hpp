#ifndef ASKZETA_ZETA_HPP
#define ASKZETA_ZETA_HPP

#include <optional>
#include <string>

#include "askzeta/bivariate_rational.hpp"
#include "askzeta/graph.hpp"
#include "askzeta/hypergraph.hpp"

namespace askzeta {

struct ZetaResult {
  BivariateRational value;
  std::string provenance;  // formula tag
  std::string digest;      // content hash of the inputs
};

/// W_H by the flag-sum formula, evaluated by subset-lattice DP.
ZetaResult master_W_H(const Hypergraph& h, int vertex_limit = 12);

/// W#_Gamma of the reflexive closure (closure applied internally).
ZetaResult wsharp(const Graph& g, int vertex_limit = 12);

/// W- for cographs via the modelling hypergraph; nullopt for non-cographs.
std::optional<ZetaResult> wminus(const Graph& g, int vertex_limit = 12);

/// W- of a join from the parts' W- values; n_i are the vertex counts.
ZetaResult join_wminus(const BivariateRational& w1, int n1,
                       const BivariateRational& w2, int n2);

/// Wb of the k-th join power from Wb of the base graph on n vertices.
ZetaResult join_power_flat(const BivariateRational& wflat, int n, int k);

ZetaResult wsharp_join(const BivariateRational& w1, int n1,
                       const BivariateRational& w2, int n2);
ZetaResult wsharp_disjoint(const BivariateRational& w1, const BivariateRational& w2);

/// Hypergraph operators at the rational-function level.  n_i / m_i are
/// vertex / hyperedge counts of the operands.
ZetaResult hyperop_disjoint(const BivariateRational& w1, const BivariateRational& w2);
ZetaResult hyperop_complete(const BivariateRational& w1, int n1, int m1,
                            const BivariateRational& w2, int n2, int m2);
ZetaResult hyperop_cover(const BivariateRational& w);  // H^1
ZetaResult hyperop_empty(const BivariateRational& w);  // H^0

/// Effect of a generic fresh-variable row / column on an n x m matrix's zeta.
ZetaResult add_generic_row(const BivariateRational& z, int n, int m);
ZetaResult add_generic_column(const BivariateRational& z, int n, int m);

/// Class-counting zeta of the graphical group: W-(X, X^m T), m = |E|.
std::optional<ZetaResult> class_counting(const Graph& g);

/// For reflexive g: the common value W+ = W- = W_Adj(g).
ZetaResult rgmt_values(const Graph& g, int vertex_limit = 12);

}  // namespace askzeta

#endif
