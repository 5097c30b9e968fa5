#include "askzeta/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace askzeta {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::out_of_range("Graph::add_edge: vertex out of range");
  if (u > v) std::swap(u, v);
  std::pair<int, int> e{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return;
  edges_.insert(it, e);
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::pair{u, v});
}

bool Graph::has_loops() const {
  for (auto [u, v] : edges_)
    if (u == v) return true;
  return false;
}

bool Graph::is_reflexive() const {
  for (int v = 0; v < n_; ++v)
    if (!has_edge(v, v)) return false;
  return true;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> r;
  for (auto [a, b] : edges_) {
    if (a == v) r.push_back(b);
    else if (b == v) r.push_back(a);
  }
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::edgeless(int n) { return Graph(n); }

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!has_edge(i, j)) g.add_edge(i, j);
  return g;
}

Graph Graph::reflexive_closure() const {
  Graph g = *this;
  for (int v = 0; v < n_; ++v) g.add_edge(v, v);
  return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  Graph g(g1.n_ + g2.n_);
  g.edges_ = g1.edges_;
  for (auto [u, v] : g2.edges_) g.add_edge(u + g1.n_, v + g1.n_);
  return g;
}

Graph join(const Graph& g1, const Graph& g2) {
  Graph g = disjoint_union(g1, g2);
  for (int u = 0; u < g1.n_; ++u)
    for (int v = 0; v < g2.n_; ++v) g.add_edge(u, g1.n_ + v);
  return g;
}

std::vector<int> Graph::component_labels() const {
  std::vector<int> label(n_, -1);
  int next = 0;
  for (int s = 0; s < n_; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : neighbors(v))
        if (label[w] == -1) {
          label[w] = next;
          q.push(w);
        }
    }
    ++next;
  }
  return label;
}

int Graph::num_components() const {
  auto l = component_labels();
  return l.empty() ? 0 : *std::max_element(l.begin(), l.end()) + 1;
}

std::vector<Graph> Graph::components() const {
  auto label = component_labels();
  int c = n_ == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<int>> verts(c);
  for (int v = 0; v < n_; ++v) verts[label[v]].push_back(v);
  std::vector<Graph> r;
  r.reserve(c);
  for (const auto& vs : verts) r.push_back(induced(vs));
  return r;
}

std::vector<bool> Graph::component_has_loop() const {
  auto label = component_labels();
  int c = n_ == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<bool> r(c, false);
  for (auto [u, v] : edges_)
    if (u == v) r[label[u]] = true;
  return r;
}

std::vector<bool> Graph::component_has_odd_cycle() const {
  // A component has an odd cycle iff it is not 2-colorable; loops count.
  auto label = component_labels();
  int c = n_ == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<bool> odd = component_has_loop();
  std::vector<int> color(n_, -1);
  for (int s = 0; s < n_; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : neighbors(v)) {
        if (w == v) continue;
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          odd[label[v]] = true;
        }
      }
    }
  }
  return odd;
}

int Graph::neighborhood_excess(const std::vector<int>& u) const {
  std::vector<bool> in(n_, false), closed(n_, false);
  for (int v : u) {
    if (v < 0 || v >= n_) throw std::out_of_range("neighborhood_excess: bad vertex");
    in[v] = true;
    closed[v] = true;
  }
  for (int v : u)
    for (int w : neighbors(v)) closed[w] = true;
  int excess = 0;
  for (int v = 0; v < n_; ++v)
    if (closed[v] && !in[v]) ++excess;
  return excess;
}

Graph Graph::induced(const std::vector<int>& verts) const {
  std::vector<int> pos(n_, -1);
  for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
  Graph g(static_cast<int>(verts.size()));
  for (auto [u, v] : edges_)
    if (pos[u] != -1 && pos[v] != -1) g.add_edge(pos[u], pos[v]);
  return g;
}

namespace {

std::optional<Cotree> cotree_rec(const Graph& h, const std::vector<int>& ids) {
  if (h.num_vertices() == 1) return Cotree{Cotree::Leaf, ids[0], {}};
  auto recurse_parts = [&](const Graph& shape, Cotree::Kind kind)
      -> std::optional<Cotree> {
    auto label = shape.component_labels();
    int c = *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<int>> parts(c);
    for (int v = 0; v < h.num_vertices(); ++v) parts[label[v]].push_back(v);
    Cotree node{kind, -1, {}};
    for (const auto& p : parts) {
      std::vector<int> sub_ids;
      for (int v : p) sub_ids.push_back(ids[v]);
      auto child = cotree_rec(h.induced(p), sub_ids);
      if (!child) return std::nullopt;
      node.children.push_back(std::move(*child));
    }
    return node;
  };
  if (h.num_components() > 1) return recurse_parts(h, Cotree::Union);
  Graph co = h.complement();
  if (co.num_components() > 1) return recurse_parts(co, Cotree::Join);
  return std::nullopt;  // connected with connected complement: contains P4
}

}  // namespace

std::optional<Cotree> cotree(const Graph& g) {
  if (g.has_loops()) throw std::invalid_argument("cotree: input has loops");
  if (g.num_vertices() == 0) return std::nullopt;
  std::vector<int> ids(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) ids[v] = v;
  return cotree_rec(g, ids);
}

bool has_induced_p4(const Graph& g) {
  const int n = g.num_vertices();
  // Ordered scan over the middle edge b-c with pendants a-b and c-d.
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      if (b == c || !g.has_edge(b, c)) continue;
      for (int a = 0; a < n; ++a) {
        if (a == b || a == c || !g.has_edge(a, b) || g.has_edge(a, c)) continue;
        for (int d = 0; d < n; ++d) {
          if (d == a || d == b || d == c) continue;
          if (g.has_edge(c, d) && !g.has_edge(b, d) && !g.has_edge(a, d))
            return true;
        }
      }
    }
  return false;
}

}  // namespace askzeta
