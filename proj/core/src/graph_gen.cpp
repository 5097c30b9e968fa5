#include "askzeta/graph_gen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace askzeta {

namespace {

// possible edges in a fixed order: loops first per vertex, then pairs
std::vector<std::pair<int, int>> slot_list(int n, bool loops) {
  std::vector<std::pair<int, int>> slots;
  if (loops)
    for (int v = 0; v < n; ++v) slots.emplace_back(v, v);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  return slots;
}

}  // namespace

std::vector<Graph> all_graphs(int n, bool loops) {
  auto slots = slot_list(n, loops);
  if (slots.size() > 24) throw std::runtime_error("all_graphs: too many edge slots");
  std::vector<Graph> out;
  out.reserve(1ull << slots.size());
  for (uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
    Graph g(n);
    for (size_t s = 0; s < slots.size(); ++s)
      if (mask & (1ull << s)) g.add_edge(slots[s].first, slots[s].second);
    out.push_back(std::move(g));
  }
  return out;
}

uint64_t canonical_code(const Graph& g) {
  const int n = g.num_vertices();
  auto slots = slot_list(n, true);
  if (slots.size() > 64) throw std::runtime_error("canonical_code: graph too large");
  std::map<std::pair<int, int>, int> slot_of;
  for (size_t s = 0; s < slots.size(); ++s) slot_of[slots[s]] = static_cast<int>(s);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~0ull;
  do {
    uint64_t code = 0;
    for (auto [u, v] : g.edges()) {
      int a = perm[u], b = perm[v];
      if (a > b) std::swap(a, b);
      code |= 1ull << slot_of[{a, b}];
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Graph> distinct_up_to_iso(const std::vector<Graph>& gs) {
  std::map<std::pair<int, uint64_t>, Graph> seen;
  for (const Graph& g : gs)
    seen.try_emplace({g.num_vertices(), canonical_code(g)}, g);
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [k, g] : seen) out.push_back(std::move(g));
  return out;
}

Graph random_graph(int n, std::mt19937& rng, bool loops, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (auto [u, v] : slot_list(n, loops))
    if (coin(rng)) g.add_edge(u, v);
  return g;
}

Hypergraph random_hypergraph(int n, int m, std::mt19937& rng, double p) {
  std::bernoulli_distribution coin(p);
  Hypergraph h(n);
  for (int e = 0; e < m; ++e) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (coin(rng)) s.push_back(v);
    h.add_hyperedge(std::move(s));
  }
  return h;
}

}  // namespace askzeta
