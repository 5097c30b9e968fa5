#ifndef ASKZETA_PARTIAL_MAP_HPP
#define ASKZETA_PARTIAL_MAP_HPP

#include <functional>
#include <optional>
#include <vector>

#include "askzeta/graph.hpp"
#include "askzeta/hypergraph.hpp"

namespace askzeta {

/// Partial map on indices 0..n-1; image[i] is the target or -1 for undefined.
using PartialMap = std::vector<int>;

int pm_degree(const PartialMap& m);

struct AnimationClass {
  std::vector<int> periodic_points;
  std::vector<std::vector<int>> orbits;     // cycles, each listed from its least vertex
  std::vector<int> transient_depth;         // steps to reach a periodic point; -1 if never
  bool nilpotent = false;
  bool fixed = false;
  bool odd_periodic = false;
  int odlen = 0;  // orbits of odd length > 1
};

/// Requires a self-map (targets in 0..n-1 where n = m.size()).
AnimationClass classify(const PartialMap& m);

/// Exponent vector over targets: exponent of v = #{u in Dom : u^m = v}.
std::vector<int> monomial(const PartialMap& m, int num_targets);

enum class AniClass { Nil, Fix, Ods, All };

/// Selectors of h: partial maps E -> V with e^phi incident to e.  Emitted in
/// lexicographic order of image tables (undefined < 0 < 1 < ...); if deg is
/// set, only maps of that exact degree.  Callback returns false to stop.
void enumerate_selectors(const Hypergraph& h, std::optional<int> deg,
                         const std::function<bool(const PartialMap&)>& cb);

/// Animations of g: selectors of Adj(g), filtered by class.
void enumerate_animations(const Graph& g, AniClass cls, std::optional<int> deg,
                          const std::function<bool(const PartialMap&)>& cb);

/// Max degree over all selectors / over Fix (sign -1) or Ods (sign +1),
/// found by descending-degree enumeration.
int rank_from_selectors(const Hypergraph& h);
int rank_from_animations(const Graph& g, int sign);

}  // namespace askzeta

#endif
