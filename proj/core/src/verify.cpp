#include "askzeta/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "askzeta/graph_gen.hpp"
#include "askzeta/io.hpp"
#include "askzeta/oracle.hpp"
#include "askzeta/partial_map.hpp"
#include "askzeta/zeta.hpp"

namespace askzeta {

namespace {

struct NamedGraph {
  const char* name;
  Graph g;
  const char* wsharp_expected;
};

// The catalogue of loopless graphs on at most four vertices together with
// their frozen W# values.
std::vector<NamedGraph> small_graph_table() {
  auto G = [](int n, std::vector<std::pair<int, int>> es) { return Graph(n, std::move(es)); };
  return {
      {"K1", G(1, {}), "(1 - X^-1*T) / (1 - T)^2"},
      {"2K1", G(2, {}), "(1 + X^-2*T - 4*X^-1*T + T + X^-2*T^2) / (1 - T)^3"},
      {"K2", G(2, {{0, 1}}), "(1 - X^-2*T) / (1 - T)^2"},
      {"3K1", G(3, {}),
       "(1 - X^-3*T + 6*X^-2*T - 12*X^-1*T + 4*T + T^2 - 4*X^-3*T^2 + 12*X^-2*T^2 "
       "- 6*X^-1*T^2 - X^-3*T^3) / (1 - T)^4"},
      {"K2+K1", G(3, {{0, 1}}),
       "(1 + X^-3*T - 2*X^-2*T - 2*X^-1*T + T + X^-3*T^2) / (1 - T)^3"},
      {"P3", G(3, {{0, 1}, {1, 2}}),
       "(1 + X^-3*T - 4*X^-2*T + X^-1*T + X^-4*T^2) / (1 - T)^2 * (1 - X^-1*T)"},
      {"K3", G(3, {{0, 1}, {0, 2}, {1, 2}}), "(1 - X^-3*T) / (1 - T)^2"},
      {"4K1", G(4, {}),
       "(1 + X^-4*T - 8*X^-3*T + 24*X^-2*T - 32*X^-1*T + 11*T + 11*X^-4*T^2 - "
       "56*X^-3*T^2 + 96*X^-2*T^2 - 56*X^-1*T^2 + 11*T^2 + 11*X^-4*T^3 - "
       "32*X^-3*T^3 + 24*X^-2*T^3 - 8*X^-1*T^3 + T^3 + X^-4*T^4) / (1 - T)^5"},
      {"K2+2K1", G(4, {{0, 1}}),
       "(1 - X^-4*T + 4*X^-3*T - 2*X^-2*T - 8*X^-1*T + 4*T - 4*X^-4*T^2 + "
       "8*X^-3*T^2 + 2*X^-2*T^2 - 4*X^-1*T^2 + T^2 - X^-4*T^3) / (1 - T)^4"},
      {"2K2", G(4, {{0, 1}, {2, 3}}),
       "(1 + X^-4*T - 4*X^-2*T + T + X^-4*T^2) / (1 - T)^3"},
      {"P3+K1", G(4, {{0, 1}, {1, 2}}),
       "(1 - X^-4*T + 6*X^-3*T - 10*X^-2*T + T - 2*X^-5*T^2 + X^-4*T^2 + "
       "8*X^-3*T^2 + X^-2*T^2 - 2*X^-1*T^2 + X^-6*T^3 - 10*X^-4*T^3 + "
       "6*X^-3*T^3 - X^-2*T^3 + X^-6*T^4) / (1 - T)^3 * (1 - X^-1*T)^2"},
      {"P4", G(4, {{0, 1}, {1, 2}, {2, 3}}),
       "(1 + X^-4*T - 6*X^-2*T + 2*X^-1*T - 2*X^-5*T^2 + 6*X^-4*T^2 - X^-2*T^2 "
       "- X^-6*T^3) / (1 - T)^2 * (1 - X^-1*T)^2"},
      {"C4", G(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}),
       "(1 + 3*X^-4*T - 8*X^-3*T + 3*X^-2*T + X^-6*T^2) / (1 - T)^2 * (1 - X^-2*T)"},
      {"diamond", G(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {0, 3}}),
       "(1 + X^-4*T - 4*X^-3*T + X^-2*T + X^-6*T^2) / (1 - T)^2 * (1 - X^-2*T)"},
      {"K3+K1", G(4, {{0, 1}, {0, 2}, {1, 2}}),
       "(1 + X^-4*T - 2*X^-3*T - 2*X^-1*T + T + X^-4*T^2) / (1 - T)^3"},
      {"paw", G(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}),
       "(1 + X^-4*T - 2*X^-3*T - 2*X^-2*T + X^-1*T + X^-5*T^2) / (1 - T)^2 * "
       "(1 - X^-1*T)"},
      {"K13", G(4, {{0, 1}, {0, 2}, {0, 3}}),
       "(1 - X^-4*T + 6*X^-3*T - 12*X^-2*T + 4*X^-1*T - 4*X^-5*T^2 + "
       "12*X^-4*T^2 - 6*X^-3*T^2 + X^-2*T^2 - X^-6*T^3) / (1 - T)^2 * "
       "(1 - X^-1*T)^2"},
      {"K4", G(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
       "(1 - X^-4*T) / (1 - T)^2"},
  };
}

std::vector<Graph> loopless_up_to_iso(int nmax) {
  std::vector<Graph> all;
  for (int n = 1; n <= nmax; ++n)
    for (Graph& g : all_graphs(n, false)) all.push_back(std::move(g));
  return distinct_up_to_iso(all);
}

LinearFormMatrix append_generic_row(const LinearFormMatrix& a) {
  std::vector<std::string> names = a.var_names();
  const int base = static_cast<int>(names.size());
  for (int j = 0; j < a.cols(); ++j) names.push_back("Y" + std::to_string(j));
  LinearFormMatrix b(a.rows() + 1, a.cols(), std::move(names));
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) {
      const auto& e = a.at(r, c);
      if (e.sign != 0) b.set(r, c, e.var, e.sign);
    }
  for (int j = 0; j < a.cols(); ++j) b.set(a.rows(), j, base + j, 1);
  return b;
}

using MinorKey = std::pair<std::vector<int>, Int>;  // (exponents, |coefficient|)

std::set<MinorKey> minor_keys(const LinearFormMatrix& m, int k) {
  std::set<MinorKey> out;
  for (const MultiPoly& d : nonzero_minors(m, k)) {
    if (!d.is_term()) throw std::logic_error("minor is not a monomial");
    out.insert({d.term_expo(), abs(d.term_coeff())});
  }
  return out;
}

CriterionResult criterion_table4() {
  int pass = 0, total = 0;
  std::string first_fail;
  for (const auto& [name, g, expected] : small_graph_table()) {
    ++total;
    if (wsharp(g).value == ratfun_from_string(expected)) ++pass;
    else if (first_fail.empty()) first_fail = name;
  }
  std::ostringstream d;
  d << pass << "/" << total;
  if (!first_fail.empty()) d << ", first failure " << first_fail;
  return {1, "W# table for graphs on at most four vertices", pass == total, d.str()};
}

CriterionResult criterion_rgmt_example() {
  Graph p4 = Graph::path(4).reflexive_closure();
  BivariateRational got = master_W_H(adjacency_hypergraph(p4)).value;
  BivariateRational expected = ratfun_from_string(
      "(1 + 2*X^-1*T + X^-4*T - 6*X^-2*T - X^-2*T^2 + 6*X^-4*T^2 - 2*X^-5*T^2 "
      "- X^-6*T^3) / (1 - T)^2 * (1 - X^-1*T)^2");
  bool ok = got == expected;
  return {2, "reflexive path on four vertices", ok,
          ok ? "" : "got " + ratfun_to_string(got)};
}

CriterionResult criterion_join_chain() {
  Graph k2 = Graph::complete(2), twok1 = Graph::edgeless(2);
  Graph joined = join(k2, twok1);
  XTPoly num = XTPoly::one_minus_xa_t(-1) * XTPoly::one_minus_xa_t(-2);
  BivariateRational expected = BivariateRational(num, {1, 0, 0}).normalized();
  auto via_model = wminus(joined);
  BivariateRational via_join =
      join_wminus(wminus(k2)->value, 2, wminus(twok1)->value, 2).value;
  bool ok = via_model && via_model->value == expected && via_join == expected &&
            via_model->value == via_join;
  return {3, "join of an edge with two isolated vertices, two ways", ok, ""};
}

CriterionResult criterion_join_powers() {
  Graph base = join(Graph::complete(2), Graph::edgeless(2));
  BivariateRational flat = wminus(base)->value.subst_t_scale(4).normalized();
  bool ok = true;
  for (int k = 1; k <= 3; ++k) {
    XTPoly num = XTPoly::one() + XTPoly::term(1, 5, 2);
    num = num + XTPoly::constant(k - 1) * (XTPoly::term(1, 4, 1) + XTPoly::term(1, 1, 1));
    num = num - XTPoly::constant(k) * (XTPoly::term(1, 3, 1) + XTPoly::term(1, 2, 1));
    BivariateRational expected =
        BivariateRational(num, {4, 4 * k, 4 * k + 1}).normalized();
    ok = ok && join_power_flat(flat, 4, k).value == expected;
  }
  return {4, "flat join powers of the four-vertex base graph", ok, ""};
}

CriterionResult criterion_oracle_wsharp(int jobs) {
  // ask averages are isomorphism-invariant; oracle work is done once per
  // class while the formula side is checked for every labeled graph.
  std::map<std::pair<int, uint64_t>, std::map<long long, Rat>> class_ask;
  int checked = 0;
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 4 && ok; ++n)
    for (const Graph& g : all_graphs(n, false)) {
      XPoly c1 = wsharp(g).value.coefficient(1);
      uint64_t code = canonical_code(g);
      auto& asks = class_ask[{n, code}];
      for (long long p : {2, 3, 5}) {
        if (!asks.count(p)) {
          LinearFormMatrix a = build_A_graph(g.reflexive_closure(), -1);
          asks[p] = ask_average(a, p, 1, 100'000'000, jobs).value;
        }
        if (xpoly_eval(c1, Rat(p)) != asks[p]) {
          ok = false;
          detail = "mismatch at p=" + std::to_string(p);
          break;
        }
        ++checked;
      }
    }
  if (ok) detail = std::to_string(checked) + " graph/prime pairs";
  return {5, "oracle agreement for W# on loopless graphs up to n=4", ok, detail};
}

CriterionResult criterion_oracle_wminus(int jobs) {
  int checked = 0;
  bool ok = true;
  std::string detail;
  for (const Graph& g : loopless_up_to_iso(4)) {
    auto w = wminus(g);
    if (!w) continue;  // the path on four vertices
    LinearFormMatrix a = build_A_graph(g, -1);
    for (long long p : {2, 3})
      for (int k = 1; k <= 2 && ok; ++k) {
        CompareReport rep = compare(a, w->value, p, k, -1, 100'000'000, jobs);
        if (rep.verdict != Verdict::Pass) {
          ok = false;
          detail = "mismatch at p=" + std::to_string(p) + " k=" + std::to_string(k);
        }
        ++checked;
      }
  }
  if (ok) detail = std::to_string(checked) + " checks";
  return {6, "oracle agreement for W- on cographs up to n=4", ok, detail};
}

CriterionResult criterion_rgmt_finite(int jobs) {
  bool ok = true;
  int checked = 0;
  bool ooc_seen = false;
  std::string detail;
  for (const Graph& base : loopless_up_to_iso(3)) {
    Graph g = base.reflexive_closure();
    BivariateRational w = rgmt_values(g).value;
    XPoly c1 = w.coefficient(1);
    for (long long p : {3, 5}) {
      Rat expect = xpoly_eval(c1, Rat(p));
      Rat aplus = ask_average(build_A_graph(g, +1), p, 1, 100'000'000, jobs).value;
      Rat aminus = ask_average(build_A_graph(g, -1), p, 1, 100'000'000, jobs).value;
      Rat aadj = ask_average(build_A_hyper(adjacency_hypergraph(g)), p, 1,
                             100'000'000, jobs).value;
      if (aplus != expect || aminus != expect || aadj != expect) {
        ok = false;
        detail = "mismatch at p=" + std::to_string(p);
      }
      ++checked;
    }
    // the symmetric matrix at p = 2 sits outside the theorem's contract
    CompareReport rep = compare(build_A_graph(g, +1), w, 2, 1, +1, 100'000'000, jobs);
    if (rep.verdict == Verdict::OutOfContract) ooc_seen = true;
  }
  ok = ok && ooc_seen;
  if (ok) detail = std::to_string(checked) + " graph/prime checks, p=2 case flagged";
  return {7, "finite-level agreement of the three matrices for reflexive graphs", ok,
          detail};
}

CriterionResult criterion_minor_parameterization() {
  bool ok = true;
  int cases = 0;
  std::string detail;

  // graphs with loops, up to isomorphism, capped
  std::vector<Graph> graphs;
  for (int n = 1; n <= 4; ++n)
    for (Graph& g : all_graphs(n, true)) graphs.push_back(std::move(g));
  graphs = distinct_up_to_iso(graphs);
  if (graphs.size() > 200) graphs.resize(200);
  for (const Graph& g : graphs) {
    const int n = g.num_vertices();
    for (int s : {-1, +1}) {
      LinearFormMatrix c = build_C_graph(g, s);
      int kmax = std::min(c.rows(), c.cols());
      for (int k = 1; k <= kmax && ok; ++k) {
        std::set<MinorKey> maps;
        enumerate_animations(g, s < 0 ? AniClass::Fix : AniClass::Ods, k,
                             [&](const PartialMap& m) {
                               Int coeff = 1;
                               if (s > 0) {
                                 int ol = classify(m).odlen;
                                 for (int i = 0; i < ol; ++i) coeff *= 2;
                               }
                               maps.insert({monomial(m, n), coeff});
                               return true;
                             });
        if (minor_keys(c, k) != maps) {
          ok = false;
          detail = "graph minors vs animations, sign " + std::string(s < 0 ? "-" : "+");
        }
        ++cases;
      }
    }
  }

  // simple hypergraphs: up to 3 vertices, up to 3 pairwise distinct supports
  for (int n = 1; n <= 3 && ok; ++n) {
    std::vector<std::vector<int>> supports;
    for (int mset = 0; mset < (1 << n); ++mset) {
      std::vector<int> s;
      for (int v = 0; v < n; ++v)
        if (mset & (1 << v)) s.push_back(v);
      supports.push_back(std::move(s));
    }
    const int ns = static_cast<int>(supports.size());
    for (int choice = 0; choice < (1 << ns) && ok; ++choice) {
      if (__builtin_popcount(static_cast<unsigned>(choice)) > 3) continue;
      Hypergraph h(n);
      for (int i = 0; i < ns; ++i)
        if (choice & (1 << i)) h.add_hyperedge(supports[i]);
      LinearFormMatrix c = build_C_hyper(h);
      int kmax = std::min(c.rows(), c.cols());
      for (int k = 1; k <= kmax && ok; ++k) {
        std::set<MinorKey> maps;
        enumerate_selectors(h, k, [&](const PartialMap& m) {
          maps.insert({monomial(m, n), 1});
          return true;
        });
        if (minor_keys(c, k) != maps) {
          ok = false;
          detail = "hypergraph minors vs selectors";
        }
        ++cases;
      }
    }
  }
  if (ok) detail = std::to_string(cases) + " minor-set comparisons";
  return {8, "minors parameterised by animations and selectors", ok, detail};
}

CriterionResult criterion_rank_formulas() {
  std::mt19937 rng(20240817u);
  bool ok = true;
  int cases = 0;
  std::string detail;
  std::uniform_int_distribution<int> size(1, 6);
  for (int i = 0; i < 100 && ok; ++i) {
    Graph g = random_graph(size(rng), rng, true);
    auto loops = g.component_has_loop();
    auto odd = g.component_has_odd_cycle();
    int d_minus = static_cast<int>(std::count(loops.begin(), loops.end(), false));
    int d_plus = static_cast<int>(std::count(odd.begin(), odd.end(), false));
    if (symbolic_rank(build_C_graph(g, -1), rng()) != g.num_vertices() - d_minus ||
        symbolic_rank(build_C_graph(g, +1), rng()) != g.num_vertices() - d_plus) {
      ok = false;
      detail = "graph rank formula";
    }
    ++cases;
  }
  for (int i = 0; i < 100 && ok; ++i) {
    Hypergraph h = random_hypergraph(size(rng), size(rng), rng);
    int nonempty = 0;
    for (const auto& s : h.hyperedges())
      if (!s.empty()) ++nonempty;
    if (symbolic_rank(build_C_hyper(h), rng()) != nonempty) {
      ok = false;
      detail = "hypergraph rank formula";
    }
    ++cases;
  }
  if (ok) detail = std::to_string(cases) + " random structures";
  return {9, "symbolic ranks match the combinatorial formulas", ok, detail};
}

CriterionResult criterion_pole_structure() {
  bool ok = true;
  int cases = 0;
  std::string detail;
  for (const Graph& g : loopless_up_to_iso(5)) {
    BivariateRational w = wsharp(g).value;
    auto poles = w.local_poles();
    bool nonpos = std::all_of(poles.begin(), poles.end(), [](int a) { return a <= 0; });
    if (!nonpos || w.pole_order_at_t1() != g.num_components() + 1) {
      ok = false;
      detail = "n=" + std::to_string(g.num_vertices());
    }
    ++cases;
  }
  if (ok) detail = std::to_string(cases) + " graphs";
  return {10, "local poles nonpositive, order c+1 at T=1", ok, detail};
}

CriterionResult criterion_operator_commutation() {
  std::mt19937 rng(971u);
  bool ok = true;
  int cases = 0;
  std::uniform_int_distribution<int> nv(1, 3), ne(0, 3);
  for (int i = 0; i < 8 && ok; ++i) {
    Hypergraph h1 = random_hypergraph(nv(rng), ne(rng), rng);
    Hypergraph h2 = random_hypergraph(nv(rng), ne(rng), rng);
    BivariateRational w1 = master_W_H(h1).value, w2 = master_W_H(h2).value;
    ok = ok && hyperop_disjoint(w1, w2).value == master_W_H(disjoint_union(h1, h2)).value;
    ok = ok && hyperop_complete(w1, h1.num_vertices(), h1.num_hyperedges(), w2,
                                h2.num_vertices(), h2.num_hyperedges())
                       .value == master_W_H(complete_union(h1, h2)).value;
    cases += 2;
  }
  for (int i = 0; i < 5 && ok; ++i) {
    Hypergraph h = random_hypergraph(nv(rng) + 1, ne(rng), rng);
    BivariateRational w = master_W_H(h).value;
    ok = ok && hyperop_cover(w).value == master_W_H(h.add_covering_hyperedge()).value;
    ok = ok && hyperop_empty(w).value == master_W_H(h.add_empty_hyperedge()).value;
    cases += 2;
  }
  return {11, "hypergraph operators commute with constructions", ok,
          ok ? std::to_string(cases) + " identities" : ""};
}

CriterionResult criterion_generic_row(int jobs) {
  std::mt19937 rng(4242u);
  bool ok = true;
  int cases = 0;
  std::string detail;
  std::uniform_int_distribution<int> dim(1, 3), nvars(1, 3), entry(0, 9);

  for (int i = 0; i < 20 && ok; ++i) {
    const int n = dim(rng), m = dim(rng), ell = nvars(rng);
    std::vector<std::string> names;
    for (int v = 0; v < ell; ++v) names.push_back("X" + std::to_string(v));
    LinearFormMatrix a(n, m, names);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < m; ++c) {
        int roll = entry(rng);
        if (roll < 4) continue;  // zero entry
        a.set(r, c, roll % ell, (roll % 2) ? 1 : -1);
      }
    LinearFormMatrix at = append_generic_row(a);
    const long long p = (i % 2) ? 3 : 2;
    const int kmax = (p == 3 && ell + m > 5) ? 1 : 2;
    std::vector<Rat> z{1};
    for (int k = 1; k <= kmax; ++k)
      z.push_back(ask_average(a, p, k, 100'000'000, jobs).value);
    Rat q = 1, q2 = 1;
    for (int j = 0; j < std::abs(n - m); ++j) q *= p;
    if (n - m < 0) q = 1 / q;
    q2 = q * p;
    for (int k = 1; k <= kmax && ok; ++k) {
      Rat expect = z[k];
      Rat pw = 1;
      for (int j = 1; j <= k; ++j) {
        expect += pw * (q2 - q) * z[k - j];
        pw *= q2;
      }
      Rat got = ask_average(at, p, k, 100'000'000, jobs).value;
      if (got != expect) {
        ok = false;
        detail = "random matrix row transform";
      }
      ++cases;
    }
  }

  // hypergraph side: the transformed W_H matches the oracle on the
  // augmented matrix
  std::uniform_int_distribution<int> hn(1, 2), hm(0, 2);
  for (int i = 0; i < 5 && ok; ++i) {
    Hypergraph h = random_hypergraph(hn(rng), hm(rng), rng);
    BivariateRational wt = add_generic_row(master_W_H(h).value, h.num_vertices(),
                                           h.num_hyperedges())
                               .value;
    LinearFormMatrix at = append_generic_row(build_A_hyper(h));
    for (long long p : {2, 3}) {
      Rat got = ask_average(at, p, 1, 100'000'000, jobs).value;
      if (got != xpoly_eval(wt.coefficient(1), Rat(p))) {
        ok = false;
        detail = "hypergraph row transform";
      }
      ++cases;
    }
  }
  if (ok) detail = std::to_string(cases) + " finite-level checks";
  return {12, "generic row transform verified at finite level", ok, detail};
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(int jobs) {
  if (jobs <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    jobs = hw ? static_cast<int>(std::min(hw, 8u)) : 1;
  }
  return {
      criterion_table4(),
      criterion_rgmt_example(),
      criterion_join_chain(),
      criterion_join_powers(),
      criterion_oracle_wsharp(jobs),
      criterion_oracle_wminus(jobs),
      criterion_rgmt_finite(jobs),
      criterion_minor_parameterization(),
      criterion_rank_formulas(),
      criterion_pole_structure(),
      criterion_operator_commutation(),
      criterion_generic_row(jobs),
  };
}

}  // namespace askzeta
