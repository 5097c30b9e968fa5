#include "doctest.h"

#include "askzeta/graph_gen.hpp"
#include "askzeta/zeta.hpp"

using namespace askzeta;

TEST_CASE("flag-sum formula on tiny hypergraphs") {
  // a single vertex, no hyperedges
  Hypergraph v1(1);
  CHECK(master_W_H(v1).value == BivariateRational::geometric(1));
  // a single vertex with one loop
  Hypergraph loop(1, {{0}});
  BivariateRational expect(XTPoly::one() - XTPoly::term(1, -1, 1), {0, 0});
  CHECK(master_W_H(loop).value == expect);
  // the empty hypergraph still sees the empty chain and the chain through {}
  CHECK(master_W_H(Hypergraph(0)).value == BivariateRational::geometric(0));
}

TEST_CASE("W# equals the flag sum over the closed adjacency hypergraph") {
  for (const Graph& g : {Graph::path(3), Graph::cycle(4), Graph::complete(4),
                         Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})}) {
    Hypergraph adj = adjacency_hypergraph(g.reflexive_closure());
    CHECK(wsharp(g).value == master_W_H(adj).value);
  }
}

TEST_CASE("W# of the smallest graphs") {
  BivariateRational wk1(XTPoly::one() - XTPoly::term(1, -1, 1), {0, 0});
  CHECK(wsharp(Graph::edgeless(1)).value == wk1);
  BivariateRational wk2(XTPoly::one() - XTPoly::term(1, -2, 1), {0, 0});
  CHECK(wsharp(Graph::complete(2)).value == wk2);
}

TEST_CASE("W- of cographs") {
  auto wk2 = wminus(Graph::complete(2));
  REQUIRE(wk2.has_value());
  CHECK(wk2->value == join_wminus(BivariateRational::geometric(1), 1,
                                  BivariateRational::geometric(1), 1)
                          .value);
  CHECK(!wminus(Graph::path(4)).has_value());
  // disjoint unions multiply coefficientwise
  auto w2k1 = wminus(Graph::edgeless(2));
  REQUIRE(w2k1.has_value());
  CHECK(w2k1->value == BivariateRational::geometric(2));
}

TEST_CASE("class counting") {
  auto ck2 = class_counting(Graph::complete(2));
  REQUIRE(ck2.has_value());
  BivariateRational expect(XTPoly::one() - XTPoly::term(1, 0, 1), {1, 2});
  CHECK(ck2->value == expect);
  auto c2k1 = class_counting(Graph::edgeless(2));
  REQUIRE(c2k1.has_value());
  CHECK(c2k1->value == BivariateRational::geometric(2));
  CHECK(!class_counting(Graph::path(4)).has_value());
}

TEST_CASE("join powers reduce to the base at k = 1") {
  auto base = class_counting(Graph::complete(2));
  REQUIRE(base.has_value());
  CHECK(join_power_flat(base->value, 2, 1).value == base->value);
}

TEST_CASE("operators at the rational-function level") {
  Hypergraph h1(2, {{0, 1}});
  Hypergraph h2(1, {{0}});
  BivariateRational w1 = master_W_H(h1).value, w2 = master_W_H(h2).value;
  CHECK(hyperop_disjoint(w1, w2).value == master_W_H(disjoint_union(h1, h2)).value);
  CHECK(hyperop_complete(w1, 2, 1, w2, 1, 1).value ==
        master_W_H(complete_union(h1, h2)).value);
  CHECK(hyperop_cover(w1).value == master_W_H(h1.add_covering_hyperedge()).value);
  CHECK(hyperop_empty(w1).value == master_W_H(h1.add_empty_hyperedge()).value);
  CHECK(hyperop_empty(w1).value == w1);
}

TEST_CASE("join of W# values matches the direct computation") {
  Graph g1 = Graph::path(3), g2 = Graph::complete(2);
  ZetaResult j = wsharp_join(wsharp(g1).value, 3, wsharp(g2).value, 2);
  CHECK(j.value == wsharp(join(g1, g2)).value);
  ZetaResult d = wsharp_disjoint(wsharp(g1).value, wsharp(g2).value);
  CHECK(d.value == wsharp(disjoint_union(g1, g2)).value);
}

TEST_CASE("generic column transform") {
  // a single vertex with one hyperedge: Z = 1/(1-XT) for the 1x1 matrix (X)
  BivariateRational z = BivariateRational::geometric(1);
  BivariateRational expect(XTPoly::one() - XTPoly::term(1, -1, 1), {0, 0});
  CHECK(add_generic_column(z, 1, 1).value == expect);
}

TEST_CASE("common value for reflexive graphs") {
  Graph g = Graph::path(3).reflexive_closure();
  CHECK(rgmt_values(g).value == wsharp(Graph::path(3)).value);
  CHECK_THROWS(rgmt_values(Graph::path(3)));
}
