#ifndef ASKZETA_HYPERGRAPH_HPP
#define ASKZETA_HYPERGRAPH_HPP

#include <utility>
#include <vector>

#include "askzeta/graph.hpp"

namespace askzeta {

/// Hypergraph on vertices 0..n-1 with positionally identified hyperedges.
/// Parallel and empty hyperedges are allowed.  A hyperedge is its support,
/// stored as a sorted vertex list.
class Hypergraph {
public:
  Hypergraph() = default;
  explicit Hypergraph(int n) : n_(n) {}
  Hypergraph(int n, std::vector<std::vector<int>> hyperedges);

  int num_vertices() const { return n_; }
  int num_hyperedges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::vector<int>>& hyperedges() const { return edges_; }
  const std::vector<int>& support(int e) const { return edges_[e]; }

  void add_hyperedge(std::vector<int> support);
  bool incident(int v, int e) const;

  /// Flags (v,e) with v incident to e, in lexicographic order.
  std::vector<std::pair<int, int>> flags() const;
  int num_flags() const;

  friend Hypergraph disjoint_union(const Hypergraph& h1, const Hypergraph& h2);
  /// Disjoint union, then every hyperedge is enlarged by all vertices of the
  /// opposite side.
  friend Hypergraph complete_union(const Hypergraph& h1, const Hypergraph& h2);

  Hypergraph add_covering_hyperedge() const;  // H^1
  Hypergraph add_empty_hyperedge() const;     // H^0

  bool operator==(const Hypergraph& o) const = default;

private:
  int n_ = 0;
  std::vector<std::vector<int>> edges_;
};

/// Adj(g): one hyperedge per vertex v with support N(v) (loops put v itself in).
Hypergraph adjacency_hypergraph(const Graph& g);
/// Inc(g): one hyperedge per graph edge with support = its endpoints.
Hypergraph incidence_hypergraph(const Graph& g);

/// The hypergraph H with W-(g) = W_H for a cograph g, built along the cotree.
Hypergraph modelling_hypergraph(const Cotree& t);

}  // namespace askzeta

#endif
