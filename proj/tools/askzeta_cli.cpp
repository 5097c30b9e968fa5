#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "askzeta/graph_gen.hpp"
#include "askzeta/io.hpp"
#include "askzeta/oracle.hpp"
#include "askzeta/partial_map.hpp"
#include "askzeta/verify.hpp"
#include "askzeta/zeta.hpp"

namespace fs = std::filesystem;
using namespace askzeta;

namespace {

constexpr const char* kEngineVersion = "0.1.0";

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Graph load_graph(const std::string& path) { return graph_from_text(slurp(path)); }

Hypergraph load_hyper(const std::string& path) {
  return hypergraph_from_json(slurp(path));
}

std::string fnv_hex(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

fs::path cache_dir() {
  if (const char* d = std::getenv("ASKZETA_CACHE")) return d;
  if (const char* home = std::getenv("HOME"))
    return fs::path(home) / ".cache" / "askzeta";
  return fs::temp_directory_path() / "askzeta-cache";
}

/// Content-addressed cache of output strings; atomic write-then-rename.
std::string cached(const std::string& op, const std::string& input_digest,
                   bool* hit, const std::function<std::string()>& compute) {
  fs::path dir = cache_dir();
  std::error_code ec;
  fs::create_directories(dir, ec);
  fs::path entry =
      dir / (fnv_hex(op + "|" + input_digest + "|" + kEngineVersion) + ".txt");
  if (fs::exists(entry)) {
    std::ifstream in(entry);
    std::ostringstream os;
    os << in.rdbuf();
    std::string v = os.str();
    if (!v.empty()) {
      if (hit) *hit = true;
      return v;
    }
  }
  if (hit) *hit = false;
  std::string v = compute();
  fs::path tmp = entry;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    out << v;
  }
  fs::rename(tmp, entry, ec);
  return v;
}

struct OutputOpts {
  bool latex = false;
  int series = -1;
  std::string at_q;
  bool stats = false;
};

void add_output_opts(CLI::App* cmd, OutputOpts& o) {
  cmd->add_flag("--latex", o.latex, "LaTeX output");
  cmd->add_option("--series", o.series, "print series coefficients up to T^N");
  cmd->add_option("--at-q", o.at_q, "evaluate X at a rational q");
  cmd->add_flag("--stats", o.stats, "print timing/cache statistics");
}

void emit(const BivariateRational& w, const OutputOpts& o) {
  std::cout << (o.latex ? ratfun_to_latex(w) : ratfun_to_string(w)) << "\n";
  if (o.series >= 0) {
    auto coeffs = w.series_prefix(o.series);
    for (int k = 0; k <= o.series; ++k) {
      std::cout << "T^" << k << ": ";
      if (!o.at_q.empty()) {
        Rat q(o.at_q);
        std::cout << xpoly_eval(coeffs[k], q).str();
      } else {
        std::cout << xpoly_to_string(coeffs[k]);
      }
      std::cout << "\n";
    }
  }
}

int run_formula(const std::string& op, const std::string& digest,
                const OutputOpts& o, const std::function<BivariateRational()>& f) {
  bool hit = false;
  std::string canonical =
      cached(op, digest, &hit, [&] { return ratfun_to_string(f()); });
  BivariateRational w = ratfun_from_string(canonical);
  emit(w, o);
  if (o.stats)
    std::cerr << "cache: " << (hit ? "hit" : "miss") << "\n";
  return 0;
}

std::string pm_to_line(const PartialMap& m, int n) {
  AnimationClass c = classify(m);
  std::ostringstream os;
  os << "deg=" << pm_degree(m) << " class=";
  if (c.nilpotent) os << "nil";
  else if (c.fixed) os << "fix";
  else if (c.odd_periodic) os << "ods";
  else os << "ani";
  os << " odlen=" << c.odlen << " map=";
  bool first = true;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) continue;
    if (!first) os << ",";
    first = false;
    os << i << "->" << m[i];
  }
  os << " mon=";
  auto e = monomial(m, n);
  bool any = false;
  for (int v = 0; v < n; ++v) {
    if (e[v] == 0) continue;
    os << "X" << v;
    if (e[v] > 1) os << "^" << e[v];
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"askzeta: exact generating functions attached to graphs and hypergraphs"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker cap")->capture_default_str();

  std::string graph_path, graph2_path, hyper_path;
  OutputOpts out;

  auto* c_whyper = app.add_subcommand("whyper", "W of a hypergraph (flag-sum formula)");
  c_whyper->add_option("--hyper", hyper_path, "hypergraph JSON file or -")->required();
  add_output_opts(c_whyper, out);

  auto* c_wsharp = app.add_subcommand("wsharp", "W# of a graph");
  c_wsharp->add_option("--graph", graph_path)->required();
  add_output_opts(c_wsharp, out);

  auto* c_wminus = app.add_subcommand("wminus", "W- of a cograph");
  c_wminus->add_option("--graph", graph_path)->required();
  add_output_opts(c_wminus, out);

  auto* c_join = app.add_subcommand("join", "W- of a join from two cograph parts");
  c_join->add_option("--g1", graph_path)->required();
  c_join->add_option("--g2", graph2_path)->required();
  add_output_opts(c_join, out);

  int kpow = 1;
  auto* c_joinpower = app.add_subcommand("joinpower", "Wb of the k-th join power");
  c_joinpower->add_option("--graph", graph_path)->required();
  c_joinpower->add_option("--k", kpow, "join power")->required();
  add_output_opts(c_joinpower, out);

  auto* c_cc = app.add_subcommand("cc", "class-counting zeta of the graphical group");
  c_cc->add_option("--graph", graph_path)->required();
  add_output_opts(c_cc, out);

  auto* c_model = app.add_subcommand("model", "modelling hypergraph of a cograph");
  c_model->add_option("--graph", graph_path)->required();

  auto* c_rgmt = app.add_subcommand("rgmt", "common W value of a reflexive graph");
  c_rgmt->add_option("--graph", graph_path)->required();
  add_output_opts(c_rgmt, out);

  std::string ani_class = "all";
  int ani_deg = -1;
  auto* c_ani = app.add_subcommand("animations", "list animations of a graph");
  c_ani->add_option("--graph", graph_path)->required();
  c_ani->add_option("--class", ani_class)
      ->check(CLI::IsMember({"nil", "fix", "ods", "all"}));
  c_ani->add_option("--deg", ani_deg, "restrict to one degree");

  std::string check_kind, matrix_kind = "C-";
  int minors_k = -1;
  bool emit_minors = false;
  auto* c_minors = app.add_subcommand("minors", "minor sets of linearised matrices");
  c_minors->add_option("--graph", graph_path);
  c_minors->add_option("--hyper", hyper_path);
  c_minors->add_option("--check", check_kind)
      ->check(CLI::IsMember({"selectors", "animations"}));
  c_minors->add_option("--matrix", matrix_kind)
      ->check(CLI::IsMember({"A-", "A+", "C-", "C+", "AH", "CH"}));
  c_minors->add_option("--k", minors_k, "minor size (default: all)");
  c_minors->add_flag("--emit", emit_minors, "dump minors");

  long long p = 3;
  int klevel = 1;
  std::string sign = "-";
  auto* c_oracle = app.add_subcommand("oracle", "brute-force finite-quotient check");
  c_oracle->add_option("--graph", graph_path);
  c_oracle->add_option("--hyper", hyper_path);
  c_oracle->add_option("--sign", sign)->check(CLI::IsMember({"+", "-"}));
  c_oracle->add_option("--p", p)->required();
  c_oracle->add_option("--k", klevel)->required();

  auto* c_verify = app.add_subcommand("verify", "run the acceptance checklist");

  std::string batch_dir;
  auto* c_batch = app.add_subcommand("batch", "catalogue a directory of graphs");
  c_batch->add_option("--dir", batch_dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (c_whyper->parsed()) {
      Hypergraph h = load_hyper(hyper_path);
      return run_formula("whyper", hypergraph_to_json(h), out,
                         [&] { return master_W_H(h).value; });
    }
    if (c_wsharp->parsed()) {
      Graph g = load_graph(graph_path);
      if (!g.is_reflexive())
        std::cerr << "note: computing W# of the reflexive closure\n";
      return run_formula("wsharp", graph_to_text(g), out,
                         [&] { return wsharp(g).value; });
    }
    if (c_wminus->parsed()) {
      Graph g = load_graph(graph_path);
      auto w = wminus(g);
      if (!w) {
        std::cerr << "Unsupported: not a cograph\n";
        return 1;
      }
      emit(w->value, out);
      return 0;
    }
    if (c_join->parsed()) {
      Graph g1 = load_graph(graph_path), g2 = load_graph(graph2_path);
      auto w1 = wminus(g1), w2 = wminus(g2);
      if (!w1 || !w2) {
        std::cerr << "Unsupported: not a cograph\n";
        return 1;
      }
      emit(join_wminus(w1->value, g1.num_vertices(), w2->value, g2.num_vertices()).value,
           out);
      return 0;
    }
    if (c_joinpower->parsed()) {
      Graph g = load_graph(graph_path);
      auto w = wminus(g);
      if (!w) {
        std::cerr << "Unsupported: not a cograph\n";
        return 1;
      }
      BivariateRational flat = w->value.subst_t_scale(g.num_vertices()).normalized();
      emit(join_power_flat(flat, g.num_vertices(), kpow).value, out);
      return 0;
    }
    if (c_cc->parsed()) {
      Graph g = load_graph(graph_path);
      auto w = class_counting(g);
      if (!w) {
        std::cerr << "Unsupported: not a cograph\n";
        return 1;
      }
      emit(w->value, out);
      return 0;
    }
    if (c_model->parsed()) {
      Graph g = load_graph(graph_path);
      auto t = cotree(g);
      if (!t) {
        std::cerr << "Unsupported: not a cograph\n";
        return 1;
      }
      std::cout << hypergraph_to_json(modelling_hypergraph(*t)) << "\n";
      return 0;
    }
    if (c_rgmt->parsed()) {
      Graph g = load_graph(graph_path);
      return run_formula("rgmt", graph_to_text(g), out,
                         [&] { return rgmt_values(g).value; });
    }
    if (c_ani->parsed()) {
      Graph g = load_graph(graph_path);
      AniClass cls = ani_class == "nil"   ? AniClass::Nil
                     : ani_class == "fix" ? AniClass::Fix
                     : ani_class == "ods" ? AniClass::Ods
                                          : AniClass::All;
      std::optional<int> deg;
      if (ani_deg >= 0) deg = ani_deg;
      enumerate_animations(g, cls, deg, [&](const PartialMap& m) {
        std::cout << pm_to_line(m, g.num_vertices()) << "\n";
        return true;
      });
      return 0;
    }
    if (c_minors->parsed()) {
      LinearFormMatrix m;
      Graph g;
      Hypergraph h;
      bool have_graph = !graph_path.empty();
      if (have_graph) g = load_graph(graph_path);
      if (!hyper_path.empty()) h = load_hyper(hyper_path);
      if (matrix_kind == "A-") m = build_A_graph(g, -1);
      else if (matrix_kind == "A+") m = build_A_graph(g, +1);
      else if (matrix_kind == "C-") m = build_C_graph(g, -1);
      else if (matrix_kind == "C+") m = build_C_graph(g, +1);
      else if (matrix_kind == "AH") m = build_A_hyper(h);
      else m = build_C_hyper(h);

      if (!check_kind.empty()) {
        bool all_pass = true;
        int kmax = std::min(m.rows(), m.cols());
        for (int k = 1; k <= kmax; ++k) {
          std::set<std::vector<int>> minor_set, map_set;
          for (const MultiPoly& d : nonzero_minors(m, k)) {
            if (!d.is_term()) {
              all_pass = false;
              continue;
            }
            minor_set.insert(d.term_expo());
          }
          if (check_kind == "selectors") {
            enumerate_selectors(h, k, [&](const PartialMap& pm) {
              map_set.insert(monomial(pm, h.num_vertices()));
              return true;
            });
          } else {
            AniClass cls =
                (matrix_kind == "C+" || matrix_kind == "A+") ? AniClass::Ods : AniClass::Fix;
            enumerate_animations(g, cls, k, [&](const PartialMap& pm) {
              map_set.insert(monomial(pm, g.num_vertices()));
              return true;
            });
          }
          bool ok = minor_set == map_set;
          all_pass = all_pass && ok;
          std::cout << "k=" << k << " " << (ok ? "PASS" : "FAIL") << " minors="
                    << minor_set.size() << " maps=" << map_set.size() << "\n";
        }
        return all_pass ? 0 : 1;
      }
      if (emit_minors) {
        int klo = minors_k >= 0 ? minors_k : 1;
        int khi = minors_k >= 0 ? minors_k : std::min(m.rows(), m.cols());
        for (int k = klo; k <= khi; ++k)
          for (const MultiPoly& d : nonzero_minors(m, k))
            std::cout << "k=" << k << " " << d.to_string(m.var_names()) << "\n";
        return 0;
      }
      std::cout << "rank " << symbolic_rank(m, 12345u) << "\n";
      return 0;
    }
    if (c_oracle->parsed()) {
      long long budget = 100'000'000;
      if (const char* b = std::getenv("ASKZETA_BUDGET")) budget = std::atoll(b);
      LinearFormMatrix a;
      BivariateRational w;
      int sg = (sign == "+") ? 1 : -1;
      if (!hyper_path.empty()) {
        Hypergraph h = load_hyper(hyper_path);
        a = build_A_hyper(h);
        w = master_W_H(h).value;
        sg = 0;
      } else {
        Graph g = load_graph(graph_path);
        a = build_A_graph(g, sg);
        if (g.is_reflexive()) {
          w = rgmt_values(g).value;
        } else if (!g.has_loops() && sg < 0) {
          auto r = wminus(g);
          if (!r) {
            std::cerr << "Unsupported: not a cograph\n";
            return 1;
          }
          w = r->value;
        } else {
          std::cerr << "Unsupported: no formula for this graph/sign\n";
          return 1;
        }
      }
      CompareReport rep = compare(a, w, p, klevel, sg, budget, jobs);
      const char* verdict = rep.verdict == Verdict::Pass          ? "PASS"
                            : rep.verdict == Verdict::Fail        ? "FAIL"
                                                                  : "OUT_OF_CONTRACT";
      std::cout << "ask=" << rep.ask.str() << " formula=" << rep.formula.str()
                << " verdict=" << verdict << "\n";
      return rep.verdict == Verdict::Fail ? 1 : 0;
    }
    if (c_verify->parsed()) {
      auto results = run_acceptance_suite(jobs);
      bool all = true;
      for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.id << " " << r.name;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        all = all && r.passed;
      }
      std::cout << (all ? "all criteria passed" : "FAILURES present") << "\n";
      return all ? 0 : 1;
    }
    if (c_batch->parsed()) {
      std::vector<fs::path> files;
      for (const auto& e : fs::directory_iterator(batch_dir))
        if (e.is_regular_file()) files.push_back(e.path());
      std::sort(files.begin(), files.end());
      for (const auto& f : files) {
        Graph g = load_graph(f.string());
        BivariateRational w = wsharp(g).value;
        std::ostringstream poles;
        poles << "[";
        auto lp = w.local_poles();
        for (size_t i = 0; i < lp.size(); ++i)
          poles << (i ? "," : "") << lp[i];
        poles << "]";
        std::cout << "{\"graph\":\"" << f.filename().string() << "\",\"wsharp\":\""
                  << ratfun_to_string(w) << "\",\"local_poles\":" << poles.str()
                  << ",\"pole_order_t1\":" << w.pole_order_at_t1() << "}\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
