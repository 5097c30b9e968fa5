#include "doctest.h"

#include "askzeta/linear_form_matrix.hpp"
#include "askzeta/partial_map.hpp"

using namespace askzeta;

namespace {

int count_selectors(const Hypergraph& h, std::optional<int> deg) {
  int n = 0;
  enumerate_selectors(h, deg, [&](const PartialMap&) {
    ++n;
    return true;
  });
  return n;
}

int count_animations(const Graph& g, AniClass cls) {
  int n = 0;
  enumerate_animations(g, cls, std::nullopt, [&](const PartialMap&) {
    ++n;
    return true;
  });
  return n;
}

}  // namespace

TEST_CASE("degree of a partial map") {
  CHECK(pm_degree({-1, -1, -1}) == 0);
  CHECK(pm_degree({2, -1, 0}) == 2);
  CHECK(pm_degree({0, 1, 2}) == 3);
}

TEST_CASE("selector counts") {
  // one factor (|e| + 1) per hyperedge
  Hypergraph h(4, {{0, 1}, {0, 1, 2}, {1, 2, 3}, {2, 3}});
  CHECK(count_selectors(h, std::nullopt) == 3 * 4 * 4 * 3);
  int total = 0;
  for (int d = 0; d <= 4; ++d) total += count_selectors(h, d);
  CHECK(total == 144);
  CHECK(count_selectors(h, 0) == 1);
  CHECK(count_selectors(h, 4) == 2 * 3 * 3 * 2);
}

TEST_CASE("classification of self-maps") {
  AnimationClass id = classify({0, 1, 2});
  CHECK(id.fixed);
  CHECK(id.orbits.size() == 3);
  CHECK(!id.nilpotent);
  CHECK(id.odlen == 0);

  AnimationClass swap2 = classify({1, 0});
  CHECK(!swap2.fixed);
  CHECK(!swap2.odd_periodic);
  CHECK(swap2.orbits == std::vector<std::vector<int>>{{0, 1}});

  AnimationClass tail = classify({1, 2, 2});
  CHECK(tail.fixed);  // the only orbit is the fixed point 2
  CHECK(tail.periodic_points == std::vector<int>{2});
  CHECK(tail.transient_depth == std::vector<int>{2, 1, 0});
  CHECK(!tail.nilpotent);

  AnimationClass cyc3 = classify({1, 2, 0});
  CHECK(cyc3.odd_periodic);
  CHECK(cyc3.odlen == 1);
  CHECK(!cyc3.fixed);

  AnimationClass nil = classify({1, -1});
  CHECK(nil.nilpotent);
  CHECK(nil.periodic_points.empty());
}

TEST_CASE("monomial of a partial map") {
  CHECK(monomial({1, -1, 0}, 2) == std::vector<int>{1, 1});
  CHECK(monomial({1, 1, 1}, 3) == std::vector<int>{0, 3, 0});
  CHECK(monomial({-1, -1}, 2) == std::vector<int>{0, 0});
}

TEST_CASE("animation class filters partition the nilpotent-free maps") {
  for (const Graph& g : {Graph::path(3), Graph::cycle(3), Graph::cycle(4)}) {
    int all = count_animations(g, AniClass::All);
    int nil = count_animations(g, AniClass::Nil);
    int fix = count_animations(g, AniClass::Fix);
    int ods = count_animations(g, AniClass::Ods);
    CHECK(all == count_selectors(adjacency_hypergraph(g), std::nullopt));
    CHECK(nil <= fix);  // nilpotent maps are vacuously fixed-periodic
    CHECK(nil <= ods);
    CHECK(fix <= all);
    CHECK(ods <= all);
  }
}

TEST_CASE("ranks from mappings match symbolic matrix ranks") {
  Hypergraph h(2, {{0, 1}});
  CHECK(rank_from_selectors(h) == symbolic_rank(build_C_hyper(h)));
  for (const Graph& g : {Graph::complete(2), Graph::path(3), Graph::cycle(3),
                         Graph::cycle(4), Graph::complete(4)}) {
    CHECK(rank_from_animations(g, -1) == symbolic_rank(build_C_graph(g, -1)));
    CHECK(rank_from_animations(g, +1) == symbolic_rank(build_C_graph(g, +1)));
  }
}

TEST_CASE("odd cycles separate the two signs") {
  // full-degree animations of an odd cycle exist in Ods but not in Fix
  CHECK(rank_from_animations(Graph::cycle(3), +1) == 3);
  CHECK(rank_from_animations(Graph::cycle(3), -1) == 2);
  // even cycles admit neither
  CHECK(rank_from_animations(Graph::cycle(4), +1) == 3);
  CHECK(rank_from_animations(Graph::cycle(4), -1) == 3);
}
