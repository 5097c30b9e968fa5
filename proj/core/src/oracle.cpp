#include "askzeta/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace askzeta {

ElementaryDivisorProfile smith_valuations(std::vector<std::vector<Int>> m, const Int& p) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  ElementaryDivisorProfile prof;
  int t = 0;  // current corner
  while (t < rows && t < cols) {
    // find a nonzero pivot
    int pr = -1, pc = -1;
    for (int r = t; r < rows && pr < 0; ++r)
      for (int c = t; c < cols; ++c)
        if (m[r][c] != 0) {
          pr = r;
          pc = c;
          break;
        }
    if (pr < 0) break;
    std::swap(m[t], m[pr]);
    for (int r = t; r < rows; ++r) std::swap(m[r][t], m[r][pc]);
    // clear row and column t by gcd steps
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int r = t + 1; r < rows; ++r) {
        while (m[r][t] != 0) {
          Int q = m[r][t] / m[t][t];
          for (int c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
          if (m[r][t] != 0) {
            std::swap(m[t], m[r]);
            dirty = true;
          }
        }
      }
      for (int c = t + 1; c < cols; ++c) {
        while (m[t][c] != 0) {
          Int q = m[t][c] / m[t][t];
          for (int r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
          if (m[t][c] != 0) {
            for (int r = t; r < rows; ++r) std::swap(m[r][t], m[r][c]);
            dirty = true;
          }
        }
      }
    }
    ++t;
  }
  prof.rank = t;
  for (int i = 0; i < t; ++i) {
    Int d = abs(m[i][i]);
    int v = 0;
    while (d % p == 0) {
      d /= p;
      ++v;
    }
    prof.valuations.push_back(v);
  }
  std::sort(prof.valuations.begin(), prof.valuations.end());
  return prof;
}

namespace {

long long pow_ll(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

/// Capped elimination mod p^k: returns the valuations (each < k) of the
/// elementary divisors that are units times p^v with v < k.
std::vector<int> capped_valuations(std::vector<std::vector<long long>> m, long long p,
                                   int k, long long pk) {
  auto inv_mod = [&](long long a) {
    // extended Euclid mod pk; a is a unit
    long long t0 = 0, t1 = 1, r0 = pk, r1 = a % pk;
    while (r1 != 0) {
      long long q = r0 / r1;
      t0 -= q * t1;
      std::swap(t0, t1);
      r0 -= q * r1;
      std::swap(r0, r1);
    }
    return ((t0 % pk) + pk) % pk;
  };
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<int> vals;
  int t = 0;
  while (t < rows && t < cols) {
    int best_v = k, pr = -1, pc = -1;
    for (int r = t; r < rows; ++r)
      for (int c = t; c < cols; ++c) {
        long long x = m[r][c];
        if (x == 0) continue;
        int v = 0;
        while (x % p == 0) {
          x /= p;
          ++v;
        }
        if (v < best_v) {
          best_v = v;
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;
    std::swap(m[t], m[pr]);
    for (int r = t; r < rows; ++r) std::swap(m[r][t], m[r][pc]);
    long long pv = pow_ll(p, best_v);
    long long unit = (m[t][t] / pv) % pk;
    long long ui = inv_mod(unit);
    for (int r = t + 1; r < rows; ++r) {
      if (m[r][t] == 0) continue;
      long long f = ((m[r][t] / pv) * ui) % pk;
      for (int c = t; c < cols; ++c)
        m[r][c] = (((m[r][c] - (__int128)f * m[t][c] % pk) % pk) + pk) % pk;
    }
    for (int c = t + 1; c < cols; ++c) {
      if (m[t][c] == 0) continue;
      long long f = ((m[t][c] / pv) * ui) % pk;
      for (int r = t; r < rows; ++r)
        m[r][c] = (((m[r][c] - (__int128)f * m[r][t] % pk) % pk) + pk) % pk;
    }
    vals.push_back(best_v);
    ++t;
  }
  return vals;
}

/// Rank over F_p of a dense matrix, destroying it; entries reduced mod p.
int rank_mod_p(std::vector<long long>& m, int rows, int cols, long long p) {
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r * cols + c] % p != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int cc = c; cc < cols; ++cc)
        std::swap(m[piv * cols + cc], m[rank * cols + cc]);
    long long inv = 1, a = ((m[rank * cols + c] % p) + p) % p, e = p - 2;
    while (e) {  // Fermat inverse
      if (e & 1) inv = inv * a % p;
      a = a * a % p;
      e >>= 1;
    }
    for (int r = rank + 1; r < rows; ++r) {
      long long f = ((m[r * cols + c] % p) + p) % p * inv % p;
      if (f == 0) continue;
      for (int cc = c; cc < cols; ++cc)
        m[r * cols + cc] -= f * m[rank * cols + cc] % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Int kernel_size(const std::vector<std::vector<Int>>& m, long long p, int k) {
  const int n = static_cast<int>(m.size());
  const long long pk = pow_ll(p, k);
  std::vector<std::vector<long long>> r(n);
  for (int i = 0; i < n; ++i)
    for (const Int& x : m[i]) {
      Int y = x % pk;
      if (y < 0) y += pk;
      r[i].push_back(static_cast<long long>(y));
    }
  // |ker| = p^{kn} / |image|, |image| = prod p^{k - v_i}
  Int ker = 1;
  for (int i = 0; i < k * n; ++i) ker *= p;
  for (int v : capped_valuations(std::move(r), p, k, pk)) {
    for (int i = 0; i < k - v; ++i) ker /= p;
  }
  return ker;
}

AskAverage ask_average(const LinearFormMatrix& a, long long p, int k,
                       long long budget, int jobs) {
  const int ell = a.num_vars();
  const int n = a.rows();
  const long long pk = pow_ll(p, k);
  double total = 1;
  for (int i = 0; i < ell; ++i) {
    total *= static_cast<double>(pk);
    if (total > static_cast<double>(budget))
      throw std::runtime_error("ask_average: specialization budget exceeded");
  }
  const long long count = pow_ll(pk, ell);

  // flat entry list for fast respecialization
  struct Cell {
    int pos, var, sign;
  };
  std::vector<Cell> cells;
  const int rows = a.rows(), cols = a.cols();
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const auto& e = a.at(r, c);
      if (e.sign != 0) cells.push_back({r * cols + c, e.var, e.sign});
    }

  auto sum_range = [&](long long lo, long long hi) {
    std::vector<long long> x(ell, 0), mat(rows * cols);
    std::vector<std::vector<Int>> big(rows, std::vector<Int>(cols));
    Int sum = 0;
    for (long long idx = lo; idx < hi; ++idx) {
      long long t = idx;
      for (int i = 0; i < ell; ++i) {
        x[i] = t % pk;
        t /= pk;
      }
      if (k == 1) {
        std::fill(mat.begin(), mat.end(), 0);
        for (const Cell& c : cells) mat[c.pos] = c.sign * x[c.var];
        int r = rank_mod_p(mat, rows, cols, p);
        Int ker = 1;
        for (int i = 0; i < rows - r; ++i) ker *= p;
        sum += ker;
      } else {
        for (auto& row : big) std::fill(row.begin(), row.end(), 0);
        for (const Cell& c : cells) big[c.pos / cols][c.pos % cols] = c.sign * x[c.var];
        sum += kernel_size(big, p, k);
      }
    }
    return sum;
  };

  Int sum = 0;
  if (jobs <= 1 || count < 1024) {
    sum = sum_range(0, count);
  } else {
    std::vector<Int> partial(jobs, 0);
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j) {
      long long lo = count * j / jobs, hi = count * (j + 1) / jobs;
      workers.emplace_back([&, j, lo, hi] { partial[j] = sum_range(lo, hi); });
    }
    for (auto& w : workers) w.join();
    for (const Int& s : partial) sum += s;
  }
  (void)n;
  AskAverage r;
  r.p = p;
  r.k = k;
  r.ell = ell;
  r.value = Rat(sum, Int(count));
  return r;
}

CompareReport compare(const LinearFormMatrix& a, const BivariateRational& w,
                      long long p, int k, int sign, long long budget, int jobs) {
  CompareReport rep;
  rep.ask = ask_average(a, p, k, budget, jobs).value;
  rep.formula = xpoly_eval(w.coefficient(k), Rat(p));
  if (p == 2 && sign > 0)
    rep.verdict = Verdict::OutOfContract;
  else
    rep.verdict = (rep.ask == rep.formula) ? Verdict::Pass : Verdict::Fail;
  return rep;
}

}  // namespace askzeta
