#include "askzeta/partial_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace askzeta {

int pm_degree(const PartialMap& m) {
  return static_cast<int>(std::count_if(m.begin(), m.end(), [](int t) { return t >= 0; }));
}

AnimationClass classify(const PartialMap& m) {
  const int n = static_cast<int>(m.size());
  for (int t : m)
    if (t >= n) throw std::invalid_argument("classify: not a self-map");

  // u is periodic iff iterating from u stays defined and revisits u within n steps.
  std::vector<bool> periodic(n, false);
  for (int u = 0; u < n; ++u) {
    int v = u;
    for (int s = 0; s < n; ++s) {
      v = m[v];
      if (v < 0) break;
      if (v == u) {
        periodic[u] = true;
        break;
      }
    }
  }

  AnimationClass r;
  for (int u = 0; u < n; ++u)
    if (periodic[u]) r.periodic_points.push_back(u);

  std::vector<bool> seen(n, false);
  for (int u = 0; u < n; ++u) {
    if (!periodic[u] || seen[u]) continue;
    std::vector<int> orbit;
    int v = u;
    do {
      orbit.push_back(v);
      seen[v] = true;
      v = m[v];
    } while (v != u);
    if (orbit.size() % 2 == 1 && orbit.size() > 1) ++r.odlen;
    r.orbits.push_back(std::move(orbit));
  }

  r.transient_depth.assign(n, -1);
  for (int u = 0; u < n; ++u) {
    int v = u, s = 0;
    while (v >= 0 && !periodic[v] && s <= n) {
      v = (v >= 0) ? m[v] : -1;
      ++s;
    }
    if (v >= 0 && periodic[v]) r.transient_depth[u] = s;
  }

  r.nilpotent = r.periodic_points.empty();
  r.fixed = true;
  r.odd_periodic = true;
  for (const auto& o : r.orbits) {
    if (o.size() != 1) r.fixed = false;
    if (o.size() % 2 == 0) r.odd_periodic = false;
  }
  return r;
}

std::vector<int> monomial(const PartialMap& m, int num_targets) {
  std::vector<int> e(num_targets, 0);
  for (int t : m)
    if (t >= 0) ++e[t];
  return e;
}

namespace {

void enumerate_rec(const std::vector<std::vector<int>>& choices, size_t pos,
                   std::optional<int> deg, int cur_deg, PartialMap& m, bool& go,
                   const std::function<bool(const PartialMap&)>& cb) {
  if (!go) return;
  if (deg) {
    int remaining = 0;
    for (size_t i = pos; i < choices.size(); ++i)
      if (!choices[i].empty()) ++remaining;
    if (cur_deg > *deg || cur_deg + remaining < *deg) return;
  }
  if (pos == choices.size()) {
    go = cb(m);
    return;
  }
  m[pos] = -1;
  enumerate_rec(choices, pos + 1, deg, cur_deg, m, go, cb);
  for (int t : choices[pos]) {
    if (!go) return;
    m[pos] = t;
    enumerate_rec(choices, pos + 1, deg, cur_deg + 1, m, go, cb);
  }
  m[pos] = -1;
}

void enumerate_maps(const std::vector<std::vector<int>>& choices, std::optional<int> deg,
                    const std::function<bool(const PartialMap&)>& cb) {
  PartialMap m(choices.size(), -1);
  bool go = true;
  enumerate_rec(choices, 0, deg, 0, m, go, cb);
}

}  // namespace

void enumerate_selectors(const Hypergraph& h, std::optional<int> deg,
                         const std::function<bool(const PartialMap&)>& cb) {
  std::vector<std::vector<int>> choices;
  choices.reserve(h.num_hyperedges());
  for (int e = 0; e < h.num_hyperedges(); ++e) choices.push_back(h.support(e));
  enumerate_maps(choices, deg, cb);
}

void enumerate_animations(const Graph& g, AniClass cls, std::optional<int> deg,
                          const std::function<bool(const PartialMap&)>& cb) {
  std::vector<std::vector<int>> choices;
  choices.reserve(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) choices.push_back(g.neighbors(v));
  enumerate_maps(choices, deg, [&](const PartialMap& m) {
    if (cls != AniClass::All) {
      AnimationClass c = classify(m);
      bool ok = (cls == AniClass::Nil)   ? c.nilpotent
                : (cls == AniClass::Fix) ? c.fixed
                                         : c.odd_periodic;
      if (!ok) return true;
    }
    return cb(m);
  });
}

int rank_from_selectors(const Hypergraph& h) {
  int bound = std::min(h.num_vertices(), h.num_hyperedges());
  for (int k = bound; k >= 1; --k) {
    bool found = false;
    enumerate_selectors(h, k, [&](const PartialMap&) {
      found = true;
      return false;
    });
    if (found) return k;
  }
  return 0;
}

int rank_from_animations(const Graph& g, int sign) {
  const AniClass cls = (sign < 0) ? AniClass::Fix : AniClass::Ods;
  for (int k = g.num_vertices(); k >= 1; --k) {
    bool found = false;
    enumerate_animations(g, cls, k, [&](const PartialMap&) {
      found = true;
      return false;
    });
    if (found) return k;
  }
  return 0;
}

}  // namespace askzeta
