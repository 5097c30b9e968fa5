#ifndef ASKZETA_GRAPH_GEN_HPP
#define ASKZETA_GRAPH_GEN_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "askzeta/graph.hpp"
#include "askzeta/hypergraph.hpp"

namespace askzeta {

/// All labeled graphs on n vertices; loops optionally allowed.
std::vector<Graph> all_graphs(int n, bool loops);

/// Edge-set bitmask minimized over all vertex permutations.
uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class.
std::vector<Graph> distinct_up_to_iso(const std::vector<Graph>& gs);

Graph random_graph(int n, std::mt19937& rng, bool loops, double p = 0.5);
Hypergraph random_hypergraph(int n, int m, std::mt19937& rng, double p = 0.5);

}  // namespace askzeta

#endif
