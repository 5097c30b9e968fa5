#ifndef ASKZETA_GRAPH_HPP
#define ASKZETA_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

namespace askzeta {

/// Finite graph on vertices 0..n-1.  Edges are stored sorted as pairs (u,v)
/// with u <= v; a loop is (u,u).  No parallel edges.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {}
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  /// Edges sorted lexicographically, loops included.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  bool has_loops() const;
  bool is_reflexive() const;

  /// Neighbors of v, loops contributing v itself.
  std::vector<int> neighbors(int v) const;

  static Graph complete(int n);
  static Graph edgeless(int n);
  static Graph path(int n);
  static Graph cycle(int n);

  Graph complement() const;  // loopless complement on the same vertex set
  Graph reflexive_closure() const;

  /// Left side keeps ids, right side shifts by n1.
  friend Graph disjoint_union(const Graph& g1, const Graph& g2);
  friend Graph join(const Graph& g1, const Graph& g2);

  /// Component index per vertex, 0-based contiguous.
  std::vector<int> component_labels() const;
  int num_components() const;
  std::vector<Graph> components() const;
  /// Per component: does it contain a loop / an odd cycle (loops count).
  std::vector<bool> component_has_loop() const;
  std::vector<bool> component_has_odd_cycle() const;

  /// |N[U] \ U|
  int neighborhood_excess(const std::vector<int>& u) const;

  Graph induced(const std::vector<int>& verts) const;

  bool operator==(const Graph& o) const = default;

private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

/// Cotree of a cograph: Leaf | Union(children) | Join(children).
struct Cotree {
  enum Kind { Leaf, Union, Join };
  Kind kind = Leaf;
  int vertex = -1;  // for Leaf: a vertex id of the original graph
  std::vector<Cotree> children;
};

/// Cotree via complement-connectivity recursion; nullopt iff g has an
/// induced path on four vertices.  Requires a loopless g.
std::optional<Cotree> cotree(const Graph& g);

bool has_induced_p4(const Graph& g);

}  // namespace askzeta

#endif
