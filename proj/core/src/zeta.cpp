#include "askzeta/zeta.hpp"

#include <sstream>
#include <stdexcept>

namespace askzeta {

namespace {

std::string fnv_digest(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string graph_digest(const Graph& g) {
  std::ostringstream os;
  os << "g" << g.num_vertices();
  for (auto [u, v] : g.edges()) os << ";" << u << "," << v;
  return fnv_digest(os.str());
}

std::string hyper_digest(const Hypergraph& h) {
  std::ostringstream os;
  os << "h" << h.num_vertices();
  for (const auto& e : h.hyperedges()) {
    os << ";";
    for (int v : e) os << v << ",";
  }
  return fnv_digest(os.str());
}

/// Chain-sum DP shared by the flag-sum formula and the neighborhood-excess
/// variant: sums over chains of distinct subsets of {0..n-1},
///   W = 1 + sum_S w^{|S|} g(S),   g(S) = t(S) (1 + sum_{S' proper subset} g(S')),
/// with t(S) = X^{c(S)} T / (1 - X^{c(S)} T) and weight w = 1 - X^wexp.
/// c is given per subset mask.
BivariateRational chain_sum(int n, const std::vector<int>& c, int wexp) {
  const int full = 1 << n;
  std::vector<BivariateRational> g(full);
  for (int s = 0; s < full; ++s) {
    BivariateRational inner = BivariateRational::one();
    // proper submasks of s, plus the empty set handled by the loop (sub = 0
    // included, sub = s excluded)
    for (int sub = (s - 1) & s;; sub = (sub - 1) & s) {
      if (sub != s) inner = inner + g[sub];
      if (sub == 0) break;
    }
    if (s == 0) inner = BivariateRational::one();
    BivariateRational t(XTPoly::term(1, c[s], 1), {c[s]});
    g[s] = t * inner;
  }
  XTPoly weight = XTPoly::one() - XTPoly::term(1, wexp, 0);
  BivariateRational w = BivariateRational::one();
  for (int s = 0; s < full; ++s) {
    XTPoly wk = XTPoly::one();
    for (int i = 0; i < __builtin_popcount(static_cast<unsigned>(s)); ++i)
      wk = wk * weight;
    w = w + BivariateRational(wk) * g[s];
  }
  return w.normalized();
}

}  // namespace

ZetaResult master_W_H(const Hypergraph& h, int vertex_limit) {
  const int n = h.num_vertices();
  if (n > vertex_limit)
    throw std::runtime_error("master_W_H: vertex count exceeds limit");
  // c(U) = |U| - #{e : e meets U}
  std::vector<unsigned> emask;
  emask.reserve(h.num_hyperedges());
  for (const auto& e : h.hyperedges()) {
    unsigned m = 0;
    for (int v : e) m |= 1u << v;
    emask.push_back(m);
  }
  std::vector<int> c(1 << n);
  for (int s = 0; s < (1 << n); ++s) {
    int hit = 0;
    for (unsigned m : emask)
      if (m & static_cast<unsigned>(s)) ++hit;
    c[s] = __builtin_popcount(static_cast<unsigned>(s)) - hit;
  }
  return {chain_sum(n, c, -1), "MasterFormula", hyper_digest(h)};
}

ZetaResult wsharp(const Graph& g, int vertex_limit) {
  const int n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("wsharp: empty graph");
  if (n > vertex_limit) throw std::runtime_error("wsharp: vertex count exceeds limit");
  Graph gg = g.reflexive_closure();
  // The direct formula produces W#(X^{-1}, T) from neighborhood excesses,
  // with weight 1 - X.
  std::vector<int> c(1 << n);
  for (int s = 0; s < (1 << n); ++s) {
    std::vector<int> u;
    for (int v = 0; v < n; ++v)
      if (s & (1 << v)) u.push_back(v);
    c[s] = gg.neighborhood_excess(u);
  }
  BivariateRational w = chain_sum(n, c, 1).subst_x_inverse().normalized();
  return {w, "WsharpFormula", graph_digest(g)};
}

std::optional<ZetaResult> wminus(const Graph& g, int vertex_limit) {
  if (g.has_loops()) throw std::invalid_argument("wminus: input has loops");
  if (g.num_vertices() == 0) throw std::invalid_argument("wminus: empty graph");
  auto t = cotree(g);
  if (!t) return std::nullopt;
  Hypergraph h = modelling_hypergraph(*t);
  if (h.num_vertices() != g.num_vertices() ||
      h.num_hyperedges() != g.num_vertices() - 1)
    throw std::logic_error("wminus: modelling hypergraph has wrong shape");
  ZetaResult r = master_W_H(h, vertex_limit);
  return ZetaResult{r.value, "CographModel", graph_digest(g)};
}

ZetaResult join_wminus(const BivariateRational& w1, int n1,
                       const BivariateRational& w2, int n2) {
  if (n1 < 1 || n2 < 1)
    throw std::invalid_argument("join_wminus: parts must have vertices");
  // z_i = X^{-n_i}
  BivariateRational num =
      BivariateRational(XTPoly::term(1, 1 - n1 - n2, 1) - XTPoly::one());
  num = num + w1.subst_t_scale(-n2).mul_by_factor(-n2).mul_by_factor(1 - n2);
  num = num + w2.subst_t_scale(-n1).mul_by_factor(-n1).mul_by_factor(1 - n1);
  BivariateRational w = num.div_by_factor(0).div_by_factor(1).normalized();
  std::ostringstream os;
  os << "join" << n1 << "," << n2;
  return {w, "JoinFormula", fnv_digest(os.str())};
}

ZetaResult join_power_flat(const BivariateRational& wflat, int n, int k) {
  if (k < 0) throw std::invalid_argument("join_power_flat: k < 0");
  XTPoly xt_minus_1 = XTPoly::term(1, 1, 1) - XTPoly::one();
  BivariateRational num(XTPoly::constant(k - 1) * xt_minus_1);
  num = num + wflat.mul_by_factor(n).mul_by_factor(n + 1) *
                  BivariateRational(XTPoly::constant(k));
  BivariateRational w =
      num.div_by_factor(k * n).div_by_factor(k * n + 1).normalized();
  std::ostringstream os;
  os << "joinpower" << n << "," << k;
  return {w, "JoinFormula", fnv_digest(os.str())};
}

ZetaResult wsharp_join(const BivariateRational& w1, int n1,
                       const BivariateRational& w2, int n2) {
  if (n1 < 1 || n2 < 1)
    throw std::invalid_argument("wsharp_join: parts must have vertices");
  BivariateRational num =
      BivariateRational(XTPoly::term(1, -n1 - n2, 1) - XTPoly::one());
  num = num + w1.subst_t_scale(-n2).mul_by_factor(-n2).mul_by_factor(-n2);
  num = num + w2.subst_t_scale(-n1).mul_by_factor(-n1).mul_by_factor(-n1);
  BivariateRational w = num.div_by_factor(0).div_by_factor(0).normalized();
  std::ostringstream os;
  os << "wsharpjoin" << n1 << "," << n2;
  return {w, "JoinFormula", fnv_digest(os.str())};
}

ZetaResult wsharp_disjoint(const BivariateRational& w1, const BivariateRational& w2) {
  return {w1.hadamard_t(w2), "HadamardProduct", ""};
}

ZetaResult hyperop_disjoint(const BivariateRational& w1, const BivariateRational& w2) {
  return {w1.hadamard_t(w2), "HadamardProduct", ""};
}

ZetaResult hyperop_complete(const BivariateRational& w1, int n1, int m1,
                            const BivariateRational& w2, int n2, int m2) {
  // y_i = X^{n_i}, z_i = X^{-m_i}
  BivariateRational num =
      BivariateRational(XTPoly::term(1, -m1 - m2, 1) - XTPoly::one());
  num = num + w1.subst_t_scale(-m2).mul_by_factor(-m2).mul_by_factor(n1 - m1 - m2);
  num = num + w2.subst_t_scale(-m1).mul_by_factor(-m1).mul_by_factor(n2 - m1 - m2);
  BivariateRational w =
      num.div_by_factor(0).div_by_factor(n1 + n2 - m1 - m2).normalized();
  return {w, "JoinFormula", ""};
}

ZetaResult hyperop_cover(const BivariateRational& w) {
  BivariateRational r =
      w.subst_t_scale(-1).mul_by_factor(-1).div_by_factor(0).normalized();
  return {r, "Substitution", ""};
}

ZetaResult hyperop_empty(const BivariateRational& w) {
  return {w, "Substitution", ""};
}

ZetaResult add_generic_row(const BivariateRational& z, int n, int m) {
  BivariateRational r =
      z.mul_by_factor(n - m).div_by_factor(n - m + 1).normalized();
  return {r, "RowTransform", ""};
}

ZetaResult add_generic_column(const BivariateRational& z, int n, int m) {
  (void)n;
  (void)m;
  BivariateRational r =
      z.subst_t_scale(-1).mul_by_factor(-1).div_by_factor(0).normalized();
  return {r, "RowTransform", ""};
}

std::optional<ZetaResult> class_counting(const Graph& g) {
  auto w = wminus(g);
  if (!w) return std::nullopt;
  BivariateRational r = w->value.subst_t_scale(g.num_edges()).normalized();
  return ZetaResult{r, "Substitution", graph_digest(g)};
}

ZetaResult rgmt_values(const Graph& g, int vertex_limit) {
  if (!g.is_reflexive()) throw std::invalid_argument("rgmt_values: graph not reflexive");
  ZetaResult r = master_W_H(adjacency_hypergraph(g), vertex_limit);
  return {r.value, "MasterFormula", graph_digest(g)};
}

}  // namespace askzeta
