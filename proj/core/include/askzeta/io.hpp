#ifndef ASKZETA_IO_HPP
#define ASKZETA_IO_HPP

#include <string>

#include "askzeta/bivariate_rational.hpp"
#include "askzeta/graph.hpp"
#include "askzeta/hypergraph.hpp"

namespace askzeta {

/// Text format: first line "n <count>", then one "u v" line per edge.
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

/// JSON: {"vertices": n, "hyperedges": [[v,...],...]}
std::string hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const std::string& text);

/// Canonical form "num / (1 - X^a*T)^m * ...": numerator terms sorted by
/// (T-degree, X-degree), denominator factors by a descending.
std::string ratfun_to_string(const BivariateRational& f);
BivariateRational ratfun_from_string(const std::string& text);

std::string ratfun_to_latex(const BivariateRational& f);

}  // namespace askzeta

#endif
