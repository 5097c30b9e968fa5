#include "askzeta/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace askzeta {

MultiPoly MultiPoly::constant(int nvars, Int c) {
  MultiPoly p;
  p.add_term(Expo(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int idx) {
  Expo e(nvars, 0);
  e[idx] = 1;
  return monomial(std::move(e), 1);
}

MultiPoly MultiPoly::monomial(Expo e, Int c) {
  MultiPoly p;
  p.add_term(e, c);
  return p;
}

void MultiPoly::add_term(const Expo& e, const Int& c) {
  if (c == 0) return;
  Int& v = terms_[e];
  v += c;
  if (v == 0) terms_.erase(e);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Expo e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::sign_normalized() const {
  if (terms_.empty()) return *this;
  return (terms_.rbegin()->second < 0) ? -*this : *this;
}

Int MultiPoly::eval(const std::vector<Int>& values) const {
  Int s = 0;
  for (const auto& [e, c] : terms_) {
    Int m = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (int j = 0; j < e[i]; ++j) m *= values[i];
    s += m;
  }
  return s;
}

std::string MultiPoly::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Int ac = abs(c);
    bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
    if (ac != 1 || !any_var) os << ac.str();
    bool printed = (ac != 1 || !any_var);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << var_names[i];
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

std::vector<std::vector<int>> minimal_monomials(std::vector<std::vector<int>> expos) {
  std::sort(expos.begin(), expos.end());
  expos.erase(std::unique(expos.begin(), expos.end()), expos.end());
  auto divides = [](const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < expos.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < expos.size() && minimal; ++j)
      if (i != j && divides(expos[j], expos[i])) minimal = false;
    if (minimal) out.push_back(expos[i]);
  }
  return out;
}

}  // namespace askzeta
