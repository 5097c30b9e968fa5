#include "doctest.h"

#include <algorithm>

#include "askzeta/linear_form_matrix.hpp"

using namespace askzeta;

TEST_CASE("adjacency matrix conventions") {
  Graph k2 = Graph::complete(2);
  LinearFormMatrix ap = build_A_graph(k2, +1);
  LinearFormMatrix am = build_A_graph(k2, -1);
  CHECK(ap.rows() == 2);
  CHECK(ap.num_vars() == 1);
  CHECK(ap.at(0, 1).sign == 1);
  CHECK(ap.at(1, 0).sign == 1);
  CHECK(am.at(0, 1).sign == 1);
  CHECK(am.at(1, 0).sign == -1);
  CHECK(am.at(0, 0).var == -1);

  // loops sit on the diagonal with sign +1 for both variants
  Graph looped(1, {{0, 0}});
  CHECK(build_A_graph(looped, -1).at(0, 0).sign == 1);
}

TEST_CASE("incidence matrix conventions") {
  Graph p3 = Graph::path(3);
  LinearFormMatrix c = build_C_graph(p3, -1);
  CHECK(c.rows() == 2);
  CHECK(c.cols() == 3);
  // row for {0,1}: X_0 in column 1, -X_1 in column 0
  CHECK(c.at(0, 1).var == 0);
  CHECK(c.at(0, 1).sign == 1);
  CHECK(c.at(0, 0).var == 1);
  CHECK(c.at(0, 0).sign == -1);

  Hypergraph h(2, {{0, 1}, {1}});
  LinearFormMatrix ch = build_C_hyper(h);
  CHECK(ch.rows() == 3);  // one row per flag
  CHECK(ch.cols() == 2);
  LinearFormMatrix ah = build_A_hyper(h);
  CHECK(ah.rows() == 2);
  CHECK(ah.cols() == 2);
  CHECK(ah.num_vars() == 3);  // flag variables
}

TEST_CASE("cycle determinants") {
  MultiPoly dplus = minor(build_C_graph(Graph::cycle(3), +1), {0, 1, 2}, {0, 1, 2});
  CHECK(dplus.sign_normalized() == MultiPoly::monomial({1, 1, 1}, 2));
  MultiPoly dminus = minor(build_C_graph(Graph::cycle(3), -1), {0, 1, 2}, {0, 1, 2});
  CHECK(dminus.is_zero());
  // even cycles are singular for both signs
  for (int sign : {+1, -1}) {
    MultiPoly d = minor(build_C_graph(Graph::cycle(4), sign), {0, 1, 2, 3}, {0, 1, 2, 3});
    CHECK(d.is_zero());
  }
}

TEST_CASE("minor ideals") {
  MonomialIdeal i1 = ideal_generators(build_C_graph(Graph::complete(2), -1), 1);
  std::sort(i1.generators.begin(), i1.generators.end());
  CHECK(i1.generators == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK(i1.max_two_power == 0);

  MonomialIdeal i3 = ideal_generators(build_C_graph(Graph::cycle(3), +1), 3);
  CHECK(i3.generators == std::vector<std::vector<int>>{{1, 1, 1}});
  CHECK(i3.max_two_power == 1);

  // k = 0 minors generate the unit ideal
  MonomialIdeal i0 = ideal_generators(build_C_graph(Graph::complete(2), -1), 0);
  CHECK(i0.generators == std::vector<std::vector<int>>{{0, 0}});
}

TEST_CASE("symbolic rank") {
  CHECK(symbolic_rank(build_A_graph(Graph::complete(2), -1)) == 2);
  CHECK(symbolic_rank(build_A_graph(Graph::complete(3), -1)) == 2);
  CHECK(symbolic_rank(build_A_graph(Graph::complete(3), +1)) == 3);
  CHECK(symbolic_rank(build_C_graph(Graph::cycle(4), -1)) == 3);
  CHECK(symbolic_rank(build_C_graph(Graph::cycle(3), +1)) == 3);
  CHECK(symbolic_rank(build_A_hyper(Hypergraph(1, {{}}))) == 0);
  CHECK(symbolic_rank(build_A_graph(Graph::edgeless(3), -1)) == 0);
}

TEST_CASE("square sub-hypergraph shapes") {
  Hypergraph c3 = incidence_hypergraph(Graph::cycle(3));
  CHECK(classify_square_subhypergraph(c3, {0, 1, 2}, {0, 1, 2}).shape == SquareShape::U1);

  Graph looptail(2, {{0, 0}, {0, 1}});
  Hypergraph lt = incidence_hypergraph(looptail);
  CHECK(classify_square_subhypergraph(lt, {0, 1}, {0, 1}).shape == SquareShape::U2);

  Hypergraph p3 = incidence_hypergraph(Graph::path(3));
  SquareClassification sc = classify_square_subhypergraph(p3, {0, 2}, {0, 1});
  CHECK(sc.shape == SquareShape::Disconnected);
  CHECK(sc.num_parts == 2);

  Graph one_edge(3, {{0, 1}});
  Hypergraph oe = incidence_hypergraph(one_edge);
  CHECK(classify_square_subhypergraph(oe, {2}, {0}).shape == SquareShape::Degenerate);
}

TEST_CASE("specialization") {
  LinearFormMatrix a = build_A_graph(Graph::complete(2), -1);
  auto m = a.specialize({Int(7)});
  CHECK(m[0][1] == 7);
  CHECK(m[1][0] == -7);
  CHECK(m[0][0] == 0);
}
