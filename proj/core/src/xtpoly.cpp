#include "askzeta/xtpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace askzeta {

XPoly xpoly_mul(const XPoly& a, const XPoly& b) {
  XPoly r;
  for (const auto& [xa, ca] : a)
    for (const auto& [xb, cb] : b) {
      Int& c = r[xa + xb];
      c += ca * cb;
    }
  for (auto it = r.begin(); it != r.end();)
    it = (it->second == 0) ? r.erase(it) : std::next(it);
  return r;
}

XPoly xpoly_add(const XPoly& a, const XPoly& b) {
  XPoly r = a;
  for (const auto& [x, c] : b) {
    Int& v = r[x];
    v += c;
    if (v == 0) r.erase(x);
  }
  return r;
}

Rat xpoly_eval(const XPoly& a, const Rat& q) {
  Rat s = 0;
  for (const auto& [x, c] : a) {
    Rat p = 1;
    const Rat base = (x >= 0) ? q : Rat(1) / q;
    for (int i = 0; i < std::abs(x); ++i) p *= base;
    s += Rat(c) * p;
  }
  return s;
}

bool xpoly_is_zero(const XPoly& a) { return a.empty(); }

std::string xpoly_to_string(const XPoly& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    const auto& [x, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Int ac = abs(c);
    if (ac != 1 || x == 0) os << ac.str();
    if (x != 0) {
      if (ac != 1) os << "*";
      os << "X";
      if (x != 1) os << "^" << x;
    }
  }
  return os.str();
}

XTPoly XTPoly::constant(Int c) {
  XTPoly p;
  p.add_term(0, 0, c);
  return p;
}

XTPoly XTPoly::term(Int c, int x, int t) {
  XTPoly p;
  p.add_term(t, x, c);
  return p;
}

XTPoly XTPoly::one_minus_xa_t(int a) {
  XTPoly p;
  p.add_term(0, 0, 1);
  p.add_term(1, a, -1);
  return p;
}

int XTPoly::deg_t() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.first;
}

void XTPoly::add_term(int t, int x, const Int& c) {
  if (c == 0) return;
  Key k{t, x};
  Int& v = terms_[k];
  v += c;
  if (v == 0) terms_.erase(k);
}

XTPoly XTPoly::operator+(const XTPoly& o) const {
  XTPoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
  return r;
}

XTPoly XTPoly::operator-(const XTPoly& o) const {
  XTPoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
  return r;
}

XTPoly XTPoly::operator-() const {
  XTPoly r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

XTPoly XTPoly::operator*(const XTPoly& o) const {
  XTPoly r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

XPoly XTPoly::coeff_t(int k) const {
  XPoly r;
  for (auto it = terms_.lower_bound({k, INT32_MIN}); it != terms_.end() && it->first.first == k; ++it)
    r[it->first.second] = it->second;
  return r;
}

XTPoly XTPoly::subst_t_scale(int c) const {
  XTPoly r;
  for (const auto& [k, v] : terms_) r.add_term(k.first, k.second + c * k.first, v);
  return r;
}

XTPoly XTPoly::subst_x_inverse() const {
  XTPoly r;
  for (const auto& [k, v] : terms_) r.add_term(k.first, -k.second, v);
  return r;
}

std::optional<XTPoly> XTPoly::divide_by_factor(int a) const {
  // Synthetic division: if N = (1 - X^a T) Q then q_k = n_k + X^a q_{k-1}.
  if (is_zero()) return XTPoly{};
  const int d = deg_t();
  XTPoly q;
  XPoly carry;  // X^a * q_{k-1}
  for (int k = 0; k <= d; ++k) {
    XPoly qk = coeff_t(k);
    for (const auto& [x, c] : carry) {
      Int& v = qk[x];
      v += c;
      if (v == 0) qk.erase(x);
    }
    if (k == d) {
      if (!qk.empty()) return std::nullopt;  // remainder
      break;
    }
    for (const auto& [x, c] : qk) q.add_term(k, x, c);
    carry.clear();
    for (const auto& [x, c] : qk) carry[x + a] = c;
  }
  return q;
}

std::pair<XTPoly, XTPoly> XTPoly::divmod_t(const XTPoly& d) const {
  const int dd = d.deg_t();
  if (dd < 0) throw std::invalid_argument("divmod_t: zero divisor");
  XPoly lead = d.coeff_t(dd);
  if (lead.size() != 1 || (abs(lead.begin()->second) != 1))
    throw std::invalid_argument("divmod_t: divisor lead must be a unit monomial");
  const int lx = lead.begin()->first;
  const Int lc = lead.begin()->second;

  XTPoly rem = *this;
  XTPoly quo;
  while (rem.deg_t() >= dd) {
    const int rt = rem.deg_t();
    XPoly rl = rem.coeff_t(rt);
    XTPoly qterm;
    for (const auto& [x, c] : rl) qterm.add_term(rt - dd, x - lx, c * lc);
    quo = quo + qterm;
    rem = rem - qterm * d;
  }
  return {quo, rem};
}

Rat XTPoly::eval(const Rat& q, const Rat& t) const {
  Rat s = 0;
  const int d = deg_t();
  for (int k = 0; k <= d; ++k) {
    Rat tk = 1;
    for (int i = 0; i < k; ++i) tk *= t;
    s += xpoly_eval(coeff_t(k), q) * tk;
  }
  return s;
}

}  // namespace askzeta
