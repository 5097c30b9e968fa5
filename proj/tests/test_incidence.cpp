#include "doctest.h"

#include "askzeta/graph.hpp"
#include "askzeta/hypergraph.hpp"

using namespace askzeta;

TEST_CASE("graph constructions") {
  Graph p4 = Graph::path(4);
  CHECK(p4.num_vertices() == 4);
  CHECK(p4.num_edges() == 3);
  CHECK(p4.has_edge(1, 2));
  CHECK(!p4.has_edge(0, 2));

  Graph c3 = Graph::cycle(3);
  CHECK(c3 == Graph::complete(3));
  CHECK(!c3.has_loops());
  CHECK(c3.reflexive_closure().is_reflexive());
  CHECK(c3.reflexive_closure().num_edges() == 6);

  Graph p3 = Graph::path(3);
  Graph co = p3.complement();
  CHECK(co.num_edges() == 1);
  CHECK(co.has_edge(0, 2));
  CHECK(!co.has_loops());

  CHECK(p3.neighbors(1) == std::vector<int>{0, 2});
  Graph loop(1, {{0, 0}});
  CHECK(loop.neighbors(0) == std::vector<int>{0});
}

TEST_CASE("disjoint union and join") {
  Graph g = disjoint_union(Graph::complete(3), Graph::complete(2));
  CHECK(g.num_vertices() == 5);
  CHECK(g.num_edges() == 4);
  CHECK(g.num_components() == 2);
  CHECK(g.component_has_odd_cycle() == std::vector<bool>{true, false});
  CHECK(g.has_edge(3, 4));
  CHECK(!g.has_edge(2, 3));

  Graph j = join(Graph::complete(2), Graph::edgeless(2));
  CHECK(j.num_vertices() == 4);
  CHECK(j.num_edges() == 5);  // the diamond
  CHECK(j.has_edge(0, 3));
  CHECK(!j.has_edge(2, 3));
}

TEST_CASE("neighborhood excess") {
  Graph p3 = Graph::path(3);
  CHECK(p3.neighborhood_excess({1}) == 2);
  CHECK(p3.neighborhood_excess({0}) == 1);
  CHECK(p3.neighborhood_excess({0, 1, 2}) == 0);
  CHECK(p3.neighborhood_excess({}) == 0);
}

TEST_CASE("induced subgraph") {
  Graph c4 = Graph::cycle(4);
  Graph sub = c4.induced({0, 1, 2});
  CHECK(sub == Graph::path(3));
}

TEST_CASE("cotrees") {
  CHECK(has_induced_p4(Graph::path(4)));
  CHECK(!cotree(Graph::path(4)).has_value());
  CHECK(!has_induced_p4(Graph::cycle(4)));
  auto t = cotree(Graph::cycle(4));
  REQUIRE(t.has_value());
  CHECK(t->kind == Cotree::Join);  // C4 = 2K2 complement

  auto k2 = cotree(Graph::complete(2));
  REQUIRE(k2.has_value());
  CHECK(k2->kind == Cotree::Join);
  CHECK(k2->children.size() == 2);
}

TEST_CASE("modelling hypergraph shape") {
  for (const Graph& g : {Graph::complete(2), Graph::cycle(4), Graph::complete(4),
                         disjoint_union(Graph::complete(3), Graph::edgeless(2))}) {
    auto t = cotree(g);
    REQUIRE(t.has_value());
    Hypergraph h = modelling_hypergraph(*t);
    CHECK(h.num_vertices() == g.num_vertices());
    CHECK(h.num_hyperedges() == g.num_vertices() - 1);
  }
  Hypergraph hk2 = modelling_hypergraph(*cotree(Graph::complete(2)));
  CHECK(hk2.support(0) == std::vector<int>{0, 1});
}

TEST_CASE("adjacency and incidence hypergraphs") {
  Graph p3 = Graph::path(3);
  Hypergraph a = adjacency_hypergraph(p3);
  CHECK(a.num_vertices() == 3);
  CHECK(a.num_hyperedges() == 3);
  CHECK(a.support(0) == std::vector<int>{1});
  CHECK(a.support(1) == std::vector<int>{0, 2});

  Graph looped(2, {{0, 0}, {0, 1}});
  Hypergraph al = adjacency_hypergraph(looped);
  CHECK(al.support(0) == std::vector<int>{0, 1});

  Hypergraph inc = incidence_hypergraph(Graph::complete(3));
  CHECK(inc.num_hyperedges() == 3);
  CHECK(inc.num_flags() == 6);
  CHECK(inc.support(0) == std::vector<int>{0, 1});
}

TEST_CASE("hypergraph operators") {
  Hypergraph h1(1, {{0}});
  Hypergraph h2(1, {{0}});
  Hypergraph d = disjoint_union(h1, h2);
  CHECK(d.num_vertices() == 2);
  CHECK(d.hyperedges() == std::vector<std::vector<int>>{{0}, {1}});

  Hypergraph c = complete_union(h1, h2);
  CHECK(c.hyperedges() == std::vector<std::vector<int>>{{0, 1}, {0, 1}});

  Hypergraph cov = h1.add_covering_hyperedge();
  CHECK(cov.num_hyperedges() == 2);
  CHECK(cov.support(1) == std::vector<int>{0});

  Hypergraph emp = h1.add_empty_hyperedge();
  CHECK(emp.num_hyperedges() == 2);
  CHECK(emp.support(1).empty());
  CHECK(emp.incident(0, 0));
  CHECK(!emp.incident(0, 1));
}
