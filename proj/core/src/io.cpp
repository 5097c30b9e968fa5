#include "askzeta/io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace askzeta {

std::string graph_to_text(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.num_vertices() << "\n";
  for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

Graph graph_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  int n;
  if (!(is >> tag >> n) || tag != "n")
    throw std::runtime_error("graph_from_text: expected header 'n <count>'");
  Graph g(n);
  int u, v;
  while (is >> u >> v) g.add_edge(u, v);
  return g;
}

std::string hypergraph_to_json(const Hypergraph& h) {
  nlohmann::json j;
  j["vertices"] = h.num_vertices();
  j["hyperedges"] = h.hyperedges();
  return j.dump();
}

Hypergraph hypergraph_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  return Hypergraph(j.at("vertices").get<int>(),
                    j.at("hyperedges").get<std::vector<std::vector<int>>>());
}

namespace {

void print_power(std::ostream& os, const char* base, int e) {
  os << base;
  if (e != 1) os << "^" << e;
}

std::string xtpoly_to_string(const XTPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : p.terms()) {
    auto [t, x] = key;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Int ac = abs(c);
    bool coeff = (ac != 1 || (x == 0 && t == 0));
    if (coeff) os << ac.str();
    if (x != 0) {
      if (coeff) os << "*";
      print_power(os, "X", x);
      coeff = true;
    }
    if (t != 0) {
      if (coeff) os << "*";
      print_power(os, "T", t);
    }
  }
  return os.str();
}

void print_factor(std::ostream& os, int a, int mult) {
  os << "(1 - ";
  if (a != 0) {
    print_power(os, "X", a);
    os << "*";
  }
  os << "T)";
  if (mult > 1) os << "^" << mult;
}

struct Parser {
  std::string s;
  size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error("ratfun parse error at offset " + std::to_string(i) +
                             ": " + what);
  }

  Int integer() {
    skip();
    bool neg = eat('-');
    skip();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      fail("expected integer");
    Int v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      ++i;
    }
    return neg ? -v : v;
  }

  int exponent() {  // after '^'
    Int e = integer();
    return static_cast<int>(e);
  }

  XTPoly primary() {
    if (eat('(')) {
      XTPoly p = sum();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    char c = peek();
    if (c == 'X') {
      ++i;
      int e = eat('^') ? exponent() : 1;
      return XTPoly::term(1, e, 0);
    }
    if (c == 'T') {
      ++i;
      int e = eat('^') ? exponent() : 1;
      if (e < 0) fail("negative T exponent");
      return XTPoly::term(1, 0, e);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return XTPoly::constant(integer());
    fail("expected primary");
  }

  XTPoly power() {
    XTPoly p = primary();
    if (eat('^')) {
      int e = exponent();
      if (e < 0) fail("negative exponent on non-variable");
      XTPoly r = XTPoly::one();
      for (int j = 0; j < e; ++j) r = r * p;
      return r;
    }
    return p;
  }

  XTPoly product() {
    XTPoly p = power();
    while (eat('*')) p = p * power();
    return p;
  }

  XTPoly sum() {
    bool neg = false;
    if (peek() == '-') {
      ++i;
      neg = true;
    }
    XTPoly p = product();
    if (neg) p = -p;
    while (true) {
      char c = peek();
      if (c == '+') {
        ++i;
        p = p + product();
      } else if (c == '-') {
        ++i;
        p = p - product();
      } else {
        return p;
      }
    }
  }

  // one denominator factor (1 - X^a*T)^m; returns (a, m)
  std::pair<int, int> den_factor() {
    if (!eat('(')) fail("expected denominator factor");
    XTPoly p = sum();
    if (!eat(')')) fail("expected ')'");
    int m = eat('^') ? exponent() : 1;
    if (m < 1) fail("bad factor multiplicity");
    // match 1 - X^a*T
    const auto& t = p.terms();
    if (t.size() != 2) fail("denominator factor is not 1 - X^a*T");
    auto it = t.begin();
    if (it->first != std::pair{0, 0} || it->second != 1)
      fail("denominator factor is not 1 - X^a*T");
    ++it;
    if (it->first.first != 1 || it->second != -1)
      fail("denominator factor is not 1 - X^a*T");
    return {it->first.second, m};
  }
};

}  // namespace

std::string ratfun_to_string(const BivariateRational& f) {
  BivariateRational r = f.normalized();
  std::ostringstream os;
  const std::string num = xtpoly_to_string(r.num());
  if (r.den().empty()) return num;
  if (r.num().terms().size() > 1) os << "(" << num << ")";
  else os << num;
  os << " / ";
  const auto& den = r.den();
  for (size_t j = 0; j < den.size();) {
    size_t k = j;
    while (k < den.size() && den[k] == den[j]) ++k;
    if (j > 0) os << " * ";
    print_factor(os, den[j], static_cast<int>(k - j));
    j = k;
  }
  return os.str();
}

BivariateRational ratfun_from_string(const std::string& text) {
  Parser p{text};
  XTPoly num = p.sum();
  std::vector<int> den;
  if (p.eat('/')) {
    do {
      auto [a, m] = p.den_factor();
      for (int j = 0; j < m; ++j) den.push_back(a);
    } while (p.eat('*'));
  }
  p.skip();
  if (p.i != p.s.size()) p.fail("trailing input");
  return BivariateRational(num, den).normalized();
}

std::string ratfun_to_latex(const BivariateRational& f) {
  BivariateRational r = f.normalized();
  auto latexify = [](std::string s) {
    std::string out;
    for (size_t j = 0; j < s.size(); ++j) {
      if (s[j] == '*') continue;
      if (s[j] == '^') {
        out += "^{";
        ++j;
        while (j < s.size() && (s[j] == '-' || std::isdigit(static_cast<unsigned char>(s[j]))))
          out += s[j++];
        --j;
        out += "}";
        continue;
      }
      out += s[j];
    }
    return out;
  };
  std::string num = latexify(xtpoly_to_string(r.num()));
  if (r.den().empty()) return num;
  std::ostringstream os;
  os << "\\frac{" << num << "}{";
  const auto& den = r.den();
  for (size_t j = 0; j < den.size();) {
    size_t k = j;
    while (k < den.size() && den[k] == den[j]) ++k;
    std::ostringstream fo;
    print_factor(fo, den[j], static_cast<int>(k - j));
    os << latexify(fo.str());
    j = k;
  }
  os << "}";
  return os.str();
}

}  // namespace askzeta
