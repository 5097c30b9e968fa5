#include "askzeta/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace askzeta {

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> hyperedges) : n_(n) {
  for (auto& e : hyperedges) add_hyperedge(std::move(e));
}

void Hypergraph::add_hyperedge(std::vector<int> support) {
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  for (int v : support)
    if (v < 0 || v >= n_)
      throw std::out_of_range("Hypergraph::add_hyperedge: vertex out of range");
  edges_.push_back(std::move(support));
}

bool Hypergraph::incident(int v, int e) const {
  const auto& s = edges_[e];
  return std::binary_search(s.begin(), s.end(), v);
}

std::vector<std::pair<int, int>> Hypergraph::flags() const {
  std::vector<std::pair<int, int>> f;
  for (int v = 0; v < n_; ++v)
    for (int e = 0; e < num_hyperedges(); ++e)
      if (incident(v, e)) f.emplace_back(v, e);
  return f;
}

int Hypergraph::num_flags() const { return static_cast<int>(flags().size()); }

Hypergraph disjoint_union(const Hypergraph& h1, const Hypergraph& h2) {
  Hypergraph h(h1.n_ + h2.n_);
  for (const auto& e : h1.edges_) h.edges_.push_back(e);
  for (const auto& e : h2.edges_) {
    std::vector<int> s;
    s.reserve(e.size());
    for (int v : e) s.push_back(v + h1.n_);
    h.edges_.push_back(std::move(s));
  }
  return h;
}

Hypergraph complete_union(const Hypergraph& h1, const Hypergraph& h2) {
  Hypergraph h = disjoint_union(h1, h2);
  for (int e = 0; e < h1.num_hyperedges(); ++e) {
    auto& s = h.edges_[e];
    for (int v = 0; v < h2.n_; ++v) s.push_back(h1.n_ + v);
    std::sort(s.begin(), s.end());
  }
  for (int e = 0; e < h2.num_hyperedges(); ++e) {
    auto& s = h.edges_[h1.num_hyperedges() + e];
    for (int v = 0; v < h1.n_; ++v) s.push_back(v);
    std::sort(s.begin(), s.end());
  }
  return h;
}

Hypergraph Hypergraph::add_covering_hyperedge() const {
  Hypergraph h = *this;
  std::vector<int> all(n_);
  for (int v = 0; v < n_; ++v) all[v] = v;
  h.edges_.push_back(std::move(all));
  return h;
}

Hypergraph Hypergraph::add_empty_hyperedge() const {
  Hypergraph h = *this;
  h.edges_.emplace_back();
  return h;
}

Hypergraph adjacency_hypergraph(const Graph& g) {
  Hypergraph h(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) h.add_hyperedge(g.neighbors(v));
  return h;
}

Hypergraph incidence_hypergraph(const Graph& g) {
  Hypergraph h(g.num_vertices());
  for (auto [u, v] : g.edges()) {
    if (u == v) h.add_hyperedge({u});
    else h.add_hyperedge({u, v});
  }
  return h;
}

Hypergraph modelling_hypergraph(const Cotree& t) {
  if (t.kind == Cotree::Leaf) return Hypergraph(1);
  Hypergraph h = modelling_hypergraph(t.children[0]);
  for (size_t i = 1; i < t.children.size(); ++i) {
    Hypergraph rhs = modelling_hypergraph(t.children[i]);
    if (t.kind == Cotree::Union)
      h = disjoint_union(h, rhs).add_empty_hyperedge();
    else
      h = complete_union(h, rhs).add_covering_hyperedge();
  }
  return h;
}

}  // namespace askzeta
