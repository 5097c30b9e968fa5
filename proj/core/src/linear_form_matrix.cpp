#include "askzeta/linear_form_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace askzeta {

LinearFormMatrix::LinearFormMatrix(int rows, int cols, std::vector<std::string> var_names)
    : rows_(rows), cols_(cols), entries_(rows * cols), var_names_(std::move(var_names)) {}

void LinearFormMatrix::set(int r, int c, int var, int sign) {
  if (var < 0 || var >= num_vars()) throw std::out_of_range("LinearFormMatrix::set");
  entries_[r * cols_ + c] = Entry{var, sign};
}

MultiPoly LinearFormMatrix::entry_poly(int r, int c) const {
  const Entry& e = at(r, c);
  if (e.sign == 0) return MultiPoly();
  MultiPoly::Expo expo(num_vars(), 0);
  expo[e.var] = 1;
  return MultiPoly::monomial(std::move(expo), e.sign);
}

std::vector<std::vector<Int>> LinearFormMatrix::specialize(
    const std::vector<Int>& values) const {
  std::vector<std::vector<Int>> m(rows_, std::vector<Int>(cols_, 0));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      const Entry& e = at(r, c);
      if (e.sign != 0) m[r][c] = e.sign * values[e.var];
    }
  return m;
}

LinearFormMatrix build_A_hyper(const Hypergraph& h) {
  auto flags = h.flags();
  std::vector<std::string> names;
  names.reserve(flags.size());
  for (auto [v, e] : flags)
    names.push_back("X" + std::to_string(v) + "_" + std::to_string(e));
  LinearFormMatrix m(h.num_vertices(), h.num_hyperedges(), std::move(names));
  for (size_t i = 0; i < flags.size(); ++i)
    m.set(flags[i].first, flags[i].second, static_cast<int>(i), 1);
  return m;
}

LinearFormMatrix build_C_hyper(const Hypergraph& h) {
  auto flags = h.flags();
  std::vector<std::string> names;
  for (int v = 0; v < h.num_vertices(); ++v) names.push_back("X" + std::to_string(v));
  LinearFormMatrix m(static_cast<int>(flags.size()), h.num_hyperedges(), std::move(names));
  for (size_t i = 0; i < flags.size(); ++i)
    m.set(static_cast<int>(i), flags[i].second, flags[i].first, 1);
  return m;
}

LinearFormMatrix build_A_graph(const Graph& g, int sign) {
  const auto& edges = g.edges();
  std::vector<std::string> names;
  names.reserve(edges.size());
  for (auto [i, j] : edges)
    names.push_back("X" + std::to_string(i) + "_" + std::to_string(j));
  LinearFormMatrix m(g.num_vertices(), g.num_vertices(), std::move(names));
  for (size_t e = 0; e < edges.size(); ++e) {
    auto [i, j] = edges[e];
    m.set(i, j, static_cast<int>(e), 1);
    if (i != j) m.set(j, i, static_cast<int>(e), sign);
  }
  return m;
}

LinearFormMatrix build_C_graph(const Graph& g, int sign) {
  const auto& edges = g.edges();
  std::vector<std::string> names;
  for (int v = 0; v < g.num_vertices(); ++v) names.push_back("X" + std::to_string(v));
  LinearFormMatrix m(static_cast<int>(edges.size()), g.num_vertices(), std::move(names));
  for (size_t e = 0; e < edges.size(); ++e) {
    auto [i, j] = edges[e];
    if (i == j) {
      m.set(static_cast<int>(e), i, i, 1);
    } else {
      m.set(static_cast<int>(e), j, i, 1);
      m.set(static_cast<int>(e), i, j, sign);
    }
  }
  return m;
}

namespace {

// Expansion along rows; every permutation term is a signed monomial since
// entries are single variables.
void det_rec(const LinearFormMatrix& m, const std::vector<int>& rows,
             std::vector<int>& cols_left, size_t ri, int perm_sign,
             MultiPoly::Expo& expo, MultiPoly& out) {
  if (ri == rows.size()) {
    out.add_term(expo, perm_sign);
    return;
  }
  for (size_t ci = 0; ci < cols_left.size(); ++ci) {
    if (cols_left[ci] < 0) continue;
    const auto& e = m.at(rows[ri], cols_left[ci]);
    if (e.sign == 0) continue;
    int col = cols_left[ci];
    // sign of moving this column to the front among the remaining ones
    int skipped = 0;
    for (size_t t = 0; t < ci; ++t)
      if (cols_left[t] >= 0) ++skipped;
    int s = (skipped % 2 == 0) ? 1 : -1;
    cols_left[ci] = -1;
    ++expo[e.var];
    det_rec(m, rows, cols_left, ri + 1, perm_sign * s * e.sign, expo, out);
    --expo[e.var];
    cols_left[ci] = col;
  }
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (1LL << 50)) return 1LL << 50;
  }
  return r;
}

template <typename F>
void for_each_combination(int n, int k, F&& f) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

int rank_of(std::vector<std::vector<Rat>> a) {
  const int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(a[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      Rat f = a[r][c] / a[rank][c];
      for (int cc = c; cc < cols; ++cc) a[r][cc] -= f * a[rank][cc];
    }
    ++rank;
  }
  return rank;
}

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int rank_at_random_primes(const LinearFormMatrix& m, std::mt19937& rng) {
  std::uniform_int_distribution<uint32_t> dist(1u << 30, (1u << 31) - 1);
  std::vector<Int> values;
  values.reserve(m.num_vars());
  std::set<uint32_t> used;
  while (static_cast<int>(values.size()) < m.num_vars()) {
    uint32_t c = dist(rng);
    if (!is_prime(c) || used.count(c)) continue;
    used.insert(c);
    values.emplace_back(c);
  }
  auto spec = m.specialize(values);
  std::vector<std::vector<Rat>> a(spec.size());
  for (size_t r = 0; r < spec.size(); ++r)
    a[r].assign(spec[r].begin(), spec[r].end());
  return rank_of(std::move(a));
}

}  // namespace

MultiPoly minor(const LinearFormMatrix& m, const std::vector<int>& rows,
                const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor: not square");
  for (int r : rows)
    if (r < 0 || r >= m.rows()) throw std::out_of_range("minor: row index");
  for (int c : cols)
    if (c < 0 || c >= m.cols()) throw std::out_of_range("minor: col index");
  if (rows.empty()) return MultiPoly::constant(m.num_vars(), 1);
  MultiPoly out;
  MultiPoly::Expo expo(m.num_vars(), 0);
  std::vector<int> cols_left = cols;
  det_rec(m, rows, cols_left, 0, 1, expo, out);
  return out;
}

std::set<MultiPoly> nonzero_minors(const LinearFormMatrix& m, int k, long long guard) {
  if (k > std::min(m.rows(), m.cols()))
    throw std::invalid_argument("nonzero_minors: k too large");
  if (binom(m.rows(), k) * binom(m.cols(), k) > guard)
    throw std::runtime_error("nonzero_minors: combination count exceeds guard");
  std::set<MultiPoly> out;
  for_each_combination(m.rows(), k, [&](const std::vector<int>& rs) {
    for_each_combination(m.cols(), k, [&](const std::vector<int>& cs) {
      MultiPoly d = minor(m, rs, cs);
      if (!d.is_zero()) out.insert(d.sign_normalized());
    });
  });
  return out;
}

MonomialIdeal ideal_generators(const LinearFormMatrix& m, int k, long long guard) {
  MonomialIdeal ideal;
  if (k == 0) {
    ideal.generators.push_back(std::vector<int>(m.num_vars(), 0));
    return ideal;
  }
  std::vector<std::vector<int>> expos;
  for (const MultiPoly& d : nonzero_minors(m, k, guard)) {
    if (!d.is_term())
      throw std::logic_error("ideal_generators: minor is not a monomial");
    Int c = abs(d.term_coeff());
    int two = 0;
    while (c % 2 == 0) {
      c /= 2;
      ++two;
    }
    if (c != 1) throw std::logic_error("ideal_generators: coefficient not +-2^j");
    ideal.max_two_power = std::max(ideal.max_two_power, two);
    expos.push_back(d.term_expo());
  }
  ideal.generators = minimal_monomials(std::move(expos));
  return ideal;
}

int symbolic_rank(const LinearFormMatrix& m, unsigned seed) {
  std::mt19937 rng(seed);
  int r1 = rank_at_random_primes(m, rng);
  int r2 = rank_at_random_primes(m, rng);
  if (r1 != r2) throw std::logic_error("symbolic_rank: draws disagree");
  return r1;
}

int symbolic_rank(const LinearFormMatrix& m) {
  return symbolic_rank(m, std::random_device{}());
}

SquareClassification classify_square_subhypergraph(const Hypergraph& h,
                                                   const std::vector<int>& vs,
                                                   const std::vector<int>& es) {
  if (vs.size() != es.size())
    throw std::invalid_argument("classify_square_subhypergraph: not square");
  std::vector<int> pos(h.num_vertices(), -1);
  for (size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);

  // restricted supports
  std::vector<std::vector<int>> supp;
  supp.reserve(es.size());
  for (int e : es) {
    std::vector<int> s;
    for (int v : h.support(e))
      if (pos[v] != -1) s.push_back(pos[v]);
    supp.push_back(std::move(s));
  }

  std::vector<bool> covered(vs.size(), false);
  for (const auto& s : supp)
    for (int v : s) covered[v] = true;
  bool degenerate = std::any_of(supp.begin(), supp.end(),
                                [](const auto& s) { return s.empty(); }) ||
                    std::find(covered.begin(), covered.end(), false) != covered.end();
  if (degenerate) return {SquareShape::Degenerate};

  // union-find connectivity over the restricted vertex set
  std::vector<int> parent(vs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& s : supp)
    for (size_t i = 1; i < s.size(); ++i) parent[find(s[0])] = find(s[i]);
  std::set<int> roots;
  for (size_t i = 0; i < vs.size(); ++i) roots.insert(find(static_cast<int>(i)));
  if (roots.size() > 1)
    return {SquareShape::Disconnected, static_cast<int>(roots.size())};

  int loops = static_cast<int>(std::count_if(
      supp.begin(), supp.end(), [](const auto& s) { return s.size() == 1; }));
  if (loops == 0) return {SquareShape::U1};
  if (loops == 1) return {SquareShape::U2};
  throw std::logic_error("classify_square_subhypergraph: impossible shape");
}

}  // namespace askzeta
