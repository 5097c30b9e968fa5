#include "doctest.h"

#include "askzeta/io.hpp"
#include "askzeta/zeta.hpp"

using namespace askzeta;

TEST_CASE("graph text round trip") {
  Graph g(4, {{0, 0}, {0, 1}, {1, 2}, {0, 2}, {2, 3}});
  CHECK(graph_from_text(graph_to_text(g)) == g);
  CHECK(graph_to_text(g).rfind("n 4", 0) == 0);
  Graph empty(3);
  CHECK(graph_from_text(graph_to_text(empty)) == empty);
}

TEST_CASE("hypergraph json round trip") {
  Hypergraph h(3, {{0, 1}, {}, {0, 1, 2}, {1}});
  CHECK(hypergraph_from_json(hypergraph_to_json(h)) == h);
  Hypergraph p = hypergraph_from_json(R"({"vertices": 2, "hyperedges": [[0, 1], []]})");
  CHECK(p.num_vertices() == 2);
  CHECK(p.hyperedges() == std::vector<std::vector<int>>{{0, 1}, {}});
}

TEST_CASE("rational function canonical strings") {
  CHECK(ratfun_to_string(wsharp(Graph::edgeless(1)).value) ==
        "(1 - X^-1*T) / (1 - T)^2");
  CHECK(ratfun_to_string(wsharp(Graph::complete(2)).value) ==
        "(1 - X^-2*T) / (1 - T)^2");
  auto wk2 = wminus(Graph::complete(2));
  REQUIRE(wk2.has_value());
  CHECK(ratfun_to_string(wk2->value) == "(1 - X^-1*T) / (1 - X*T) * (1 - T)");
}

TEST_CASE("rational function parsing round trips") {
  for (const Graph& g : {Graph::path(3), Graph::cycle(4), Graph::complete(4)}) {
    BivariateRational w = wsharp(g).value;
    CHECK(ratfun_from_string(ratfun_to_string(w)) == w);
  }
  BivariateRational parsed = ratfun_from_string("1 / (1 - X*T)");
  CHECK(parsed == BivariateRational::geometric(1));
  // parsing is tolerant of unnormalized input
  BivariateRational f = ratfun_from_string("(1 - T) / (1 - T)^2");
  CHECK(f == BivariateRational::geometric(0));
  CHECK_THROWS(ratfun_from_string("1 / (2 - T)"));
}

TEST_CASE("latex output") {
  std::string s = ratfun_to_latex(wsharp(Graph::edgeless(1)).value);
  CHECK(s.find("\\frac") != std::string::npos);
  CHECK(s.find("X^{-1}") != std::string::npos);
}
