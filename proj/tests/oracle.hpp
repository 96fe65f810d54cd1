#pragma once

// Dense, enumeration-based reference computations. Shares no code with the
// library: objects are raw structure-constant tables, arithmetic is
// boost::multiprecision::cpp_rational or plain residues mod p.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;

struct Entry2 {
  int i, j;
  Q s;
};
struct Entry3 {
  int i, j, k;
  Q s;
};

// d e_i has s on e_j; product e_i e_j has s on e_k; coproduct of e_i has s
// on e_j (x) e_k.
struct Table {
  std::vector<int> deg;
  std::vector<Entry2> d;
  std::vector<Entry3> m;
  int dim() const { return static_cast<int>(deg.size()); }
};

inline long mod(long a, long p) { return ((a % p) + p) % p; }

inline long inv_mod(long a, long p) {
  long r = 1, e = p - 2;
  a = mod(a, p);
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline long to_mod(const Q& q, long p) {
  using boost::multiprecision::cpp_int;
  cpp_int n = boost::multiprecision::numerator(q) % p, d = boost::multiprecision::denominator(q) % p;
  long nn = mod(static_cast<long>(n), p), dd = mod(static_cast<long>(d), p);
  if (dd == 0) throw std::domain_error("denominator divisible by p");
  return nn * inv_mod(dd, p) % p;
}

inline int sgn(long e) { return (e % 2 == 0) ? 1 : -1; }

// Rank of a dense matrix over Q (p = 0) or F_p.
inline size_t rank(std::vector<std::vector<Q>> m, long p) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
  if (p > 0)
    for (auto& row : m)
      for (auto& x : row) x = to_mod(x, p);
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Q inv = p > 0 ? Q(inv_mod(static_cast<long>(boost::multiprecision::numerator(m[r][c])), p)) : 1 / m[r][c];
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c] * inv;
      for (size_t k = c; k < cols; ++k) {
        m[i][k] -= f * m[r][k];
        if (p > 0) m[i][k] = Q(mod(static_cast<long>(boost::multiprecision::numerator(m[i][k])), p));
      }
    }
    ++r;
  }
  return r;
}

// Matrix of d from degree n to degree n-1.
inline std::vector<std::vector<Q>> block(const Table& t, int n) {
  std::vector<int> src, tgt;
  std::map<int, int> row_of, col_of;
  for (int i = 0; i < t.dim(); ++i) {
    if (t.deg[i] == n) col_of[i] = static_cast<int>(col_of.size());
    if (t.deg[i] == n - 1) row_of[i] = static_cast<int>(row_of.size());
  }
  std::vector<std::vector<Q>> m(row_of.size(), std::vector<Q>(col_of.size()));
  for (const auto& e : t.d)
    if (col_of.count(e.i) && row_of.count(e.j)) m[row_of[e.j]][col_of[e.i]] += e.s;
  return m;
}

inline size_t dim_in(const Table& t, int n) {
  size_t k = 0;
  for (int d : t.deg) k += d == n;
  return k;
}

inline std::map<int, size_t> homology(const Table& t, long p, int lo, int hi) {
  std::map<int, size_t> h;
  for (int n = lo; n <= hi; ++n) h[n] = dim_in(t, n) - rank(block(t, n), p) - rank(block(t, n + 1), p);
  return h;
}

// d o d over Q.
inline bool d_squared_zero(const Table& t) {
  std::vector<std::map<int, Q>> d(t.dim());
  for (const auto& e : t.d) d[e.i][e.j] += e.s;
  for (int i = 0; i < t.dim(); ++i) {
    std::map<int, Q> dd;
    for (const auto& [j, s] : d[i])
      for (const auto& [k, r] : d[j]) dd[k] += s * r;
    for (const auto& [k, s] : dd)
      if (s != 0) return false;
  }
  return true;
}

// Words of length 1..cap over letters of the given degrees.
struct Words {
  std::vector<std::vector<int>> list;
  std::map<std::vector<int>, int> index;
  std::vector<int> deg;

  Words(const std::vector<int>& letter_deg, int cap) {
    std::vector<std::vector<int>> layer{{}};
    for (int len = 1; len <= cap; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& w : layer)
        for (int l = 0; l < static_cast<int>(letter_deg.size()); ++l) {
          auto v = w;
          v.push_back(l);
          next.push_back(v);
        }
      for (const auto& w : next) {
        index[w] = static_cast<int>(list.size());
        list.push_back(w);
        int dg = 0;
        for (int l : w) dg += letter_deg[l];
        deg.push_back(dg);
      }
      layer = next;
    }
  }
};

using Poly = std::vector<std::pair<std::vector<int>, Q>>;

// Free algebra on letters, truncated at cap, with the derivation
// d(l1..ln) = sum (-1)^{|l1|+..+|l_{i-1}|} l1..d(l_i)..ln.
inline Table free_algebra(const std::vector<int>& letter_deg, const std::vector<Poly>& gen_diff, int cap) {
  Words w(letter_deg, cap);
  Table t;
  t.deg = w.deg;
  for (size_t idx = 0; idx < w.list.size(); ++idx) {
    const auto& word = w.list[idx];
    int before = 0;
    for (size_t i = 0; i < word.size(); ++i) {
      for (const auto& [sub, s] : gen_diff[word[i]]) {
        std::vector<int> out(word.begin(), word.begin() + i);
        out.insert(out.end(), sub.begin(), sub.end());
        out.insert(out.end(), word.begin() + i + 1, word.end());
        if (static_cast<int>(out.size()) > cap) continue;
        t.d.push_back({static_cast<int>(idx), w.index.at(out), sgn(before) * s});
      }
      before += letter_deg[word[i]];
    }
  }
  return t;
}

// Bar complex of an algebra, words of length 1..cap in letters s a:
// d = -sum (-1)^{e_{i-1}} ..s(d a_i).. - sum (-1)^{e_i} ..s(a_i a_{i+1}).., e_i = |s a_1|+..+|s a_i|.
inline Table bar_complex(const Table& a, int cap) {
  std::vector<int> sdeg;
  for (int d : a.deg) sdeg.push_back(d + 1);
  Words w(sdeg, cap);
  std::vector<std::vector<std::pair<int, Q>>> da(a.dim());
  for (const auto& e : a.d) da[e.i].push_back({e.j, e.s});
  std::map<std::pair<int, int>, std::vector<std::pair<int, Q>>> mu;
  for (const auto& e : a.m) mu[{e.i, e.j}].push_back({e.k, e.s});
  Table t;
  t.deg = w.deg;
  for (size_t idx = 0; idx < w.list.size(); ++idx) {
    const auto& word = w.list[idx];
    int eps = 0;
    for (size_t i = 0; i < word.size(); ++i) {
      for (const auto& [j, s] : da[word[i]]) {
        auto out = word;
        out[i] = j;
        t.d.push_back({static_cast<int>(idx), w.index.at(out), -sgn(eps) * s});
      }
      eps += sdeg[word[i]];
      if (i + 1 < word.size()) {
        auto it = mu.find({word[i], word[i + 1]});
        if (it == mu.end()) continue;
        for (const auto& [k, s] : it->second) {
          std::vector<int> out(word.begin(), word.begin() + i);
          out.push_back(k);
          out.insert(out.end(), word.begin() + i + 2, word.end());
          t.d.push_back({static_cast<int>(idx), w.index.at(out), -sgn(eps) * s});
        }
      }
    }
  }
  return t;
}

// Delta(c (x) d) = sum (-1)^{|c2||d1|} (c1 (x) d1) (x) (c2 (x) d2); index c * dim D + d.
inline Table tensor_coalgebra(const Table& c, const Table& d) {
  int n = d.dim();
  Table t;
  for (int i = 0; i < c.dim(); ++i)
    for (int j = 0; j < n; ++j) t.deg.push_back(c.deg[i] + d.deg[j]);
  for (const auto& e : c.d)
    for (int j = 0; j < n; ++j) t.d.push_back({e.i * n + j, e.j * n + j, e.s});
  for (int i = 0; i < c.dim(); ++i)
    for (const auto& e : d.d) t.d.push_back({i * n + e.i, i * n + e.j, sgn(c.deg[i]) * e.s});
  for (const auto& x : c.m)
    for (const auto& y : d.m)
      t.m.push_back({x.i * n + y.i, x.j * n + y.j, x.k * n + y.k, sgn(static_cast<long>(c.deg[x.k]) * d.deg[y.j]) * x.s * y.s});
  return t;
}

// Residue-valued dense matrices, column per source basis element.
using Mat = std::vector<std::vector<long>>;

struct Slot {
  int col, row;
};

// Calls fn on every matrix (rows x cols) supported on the slots.
inline void enumerate(long p, int rows, int cols, const std::vector<Slot>& slots, const std::function<void(const Mat&)>& fn) {
  Mat m(cols, std::vector<long>(rows, 0));
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == slots.size()) {
      fn(m);
      return;
    }
    for (long v = 0; v < p; ++v) {
      m[slots[k].col][slots[k].row] = v;
      rec(k + 1);
    }
    m[slots[k].col][slots[k].row] = 0;
  };
  rec(0);
}

inline std::vector<Slot> degree_slots(const std::vector<int>& src, const std::vector<int>& tgt, int degree) {
  std::vector<Slot> s;
  for (int i = 0; i < static_cast<int>(src.size()); ++i)
    for (int j = 0; j < static_cast<int>(tgt.size()); ++j)
      if (tgt[j] == src[i] + degree) s.push_back({i, j});
  return s;
}

struct Dense {
  long p;
  std::vector<std::vector<std::pair<int, long>>> d;
  std::vector<std::vector<std::pair<std::pair<int, int>, long>>> m;  // per first index i: ((j, k), s)

  Dense(const Table& t, long p) : p(p), d(t.dim()), m(t.dim()) {
    for (const auto& e : t.d) d[e.i].push_back({e.j, to_mod(e.s, p)});
    for (const auto& e : t.m) m[e.i].push_back({{e.j, e.k}, to_mod(e.s, p)});
  }
};

// Product of two residue vectors in an algebra table.
inline std::vector<long> multiply(const Table& a, const Dense& da, const std::vector<long>& x, const std::vector<long>& y) {
  std::vector<long> out(a.dim(), 0);
  for (int i = 0; i < a.dim(); ++i) {
    if (!x[i]) continue;
    for (const auto& [jk, s] : da.m[i]) {
      auto [j, k] = jk;
      if (y[j]) out[k] = (out[k] + x[i] * y[j] % da.p * s) % da.p;
    }
  }
  return out;
}

inline std::vector<long> apply_d(const Dense& dt, int n, const std::vector<long>& x) {
  std::vector<long> out(n, 0);
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (x[i])
      for (const auto& [j, s] : dt.d[i]) out[j] = (out[j] + x[i] * s) % dt.p;
  return out;
}

inline bool is_zero(const std::vector<long>& v) {
  for (long x : v)
    if (x != 0) return false;
  return true;
}

// |Tw(C,A)| over F_p: tau of degree -1 with d_A tau + tau d_C + sum (-1)^{|c1|} tau(c1) tau(c2) = 0.
inline size_t twisting_count(const Table& c, const Table& a, long p) {
  Dense dc(c, p), da(a, p);
  size_t count = 0;
  enumerate(p, a.dim(), c.dim(), degree_slots(c.deg, a.deg, -1), [&](const Mat& tau) {
    for (int x = 0; x < c.dim(); ++x) {
      std::vector<long> lhs = apply_d(da, a.dim(), tau[x]);
      for (const auto& [y, s] : dc.d[x])
        for (int k = 0; k < a.dim(); ++k) lhs[k] = (lhs[k] + s * tau[y][k]) % p;
      for (const auto& [jk, s] : dc.m[x]) {
        auto prod = multiply(a, da, tau[jk.first], tau[jk.second]);
        long sg = mod(sgn(c.deg[jk.first]) * s, p);
        for (int k = 0; k < a.dim(); ++k) lhs[k] = (lhs[k] + sg * prod[k]) % p;
      }
      if (!is_zero(lhs)) return;
    }
    ++count;
  });
  return count;
}

// Measurings f : C (x) A -> B of degree 0 over F_p.
inline size_t measuring_count(const Table& c, const Table& a, const Table& b, long p) {
  Dense dc(c, p), da(a, p), db(b, p);
  int na = a.dim();
  std::vector<int> src;
  for (int x = 0; x < c.dim(); ++x)
    for (int y = 0; y < na; ++y) src.push_back(c.deg[x] + a.deg[y]);
  size_t count = 0;
  enumerate(p, b.dim(), static_cast<int>(src.size()), degree_slots(src, b.deg, 0), [&](const Mat& f) {
    for (int x = 0; x < c.dim(); ++x)
      for (int y = 0; y < na; ++y) {
        std::vector<long> lhs = apply_d(db, b.dim(), f[x * na + y]);
        for (const auto& [x2, s] : dc.d[x])
          for (int k = 0; k < b.dim(); ++k) lhs[k] = mod(lhs[k] - s * f[x2 * na + y][k], p);
        for (const auto& [y2, s] : da.d[y])
          for (int k = 0; k < b.dim(); ++k) lhs[k] = mod(lhs[k] - sgn(c.deg[x]) * s * f[x * na + y2][k], p);
        if (!is_zero(lhs)) return;
      }
    for (int x = 0; x < c.dim(); ++x)
      for (int y = 0; y < na; ++y)
        for (int z = 0; z < na; ++z) {
          std::vector<long> lhs(b.dim(), 0);
          for (const auto& [jk, s] : da.m[y])
            if (jk.first == z)
              for (int k = 0; k < b.dim(); ++k) lhs[k] = (lhs[k] + s * f[x * na + jk.second][k]) % p;
          for (const auto& [jk, s] : dc.m[x]) {
            auto prod = multiply(b, db, f[jk.first * na + y], f[jk.second * na + z]);
            long sg = mod(sgn(static_cast<long>(c.deg[jk.second]) * a.deg[y]) * s, p);
            for (int k = 0; k < b.dim(); ++k) lhs[k] = mod(lhs[k] - sg * prod[k], p);
          }
          if (!is_zero(lhs)) return;
        }
    ++count;
  });
  return count;
}

// Degree 0 maps f : C -> D with d f = f d and Delta f = (f (x) f) Delta.
inline size_t coalgebra_map_count(const Table& c, const Table& d, long p) {
  Dense dc(c, p), dd(d, p);
  int n = d.dim();
  size_t count = 0;
  enumerate(p, n, c.dim(), degree_slots(c.deg, d.deg, 0), [&](const Mat& f) {
    for (int x = 0; x < c.dim(); ++x) {
      std::vector<long> lhs = apply_d(dd, n, f[x]);
      for (const auto& [y, s] : dc.d[x])
        for (int k = 0; k < n; ++k) lhs[k] = mod(lhs[k] - s * f[y][k], p);
      if (!is_zero(lhs)) return;
      std::vector<long> cop(n * n, 0);
      for (int y = 0; y < n; ++y)
        if (f[x][y])
          for (const auto& [jk, s] : dd.m[y]) cop[jk.first * n + jk.second] = (cop[jk.first * n + jk.second] + f[x][y] * s) % p;
      for (const auto& [jk, s] : dc.m[x])
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v)
            cop[u * n + v] = mod(cop[u * n + v] - s * f[jk.first][u] % p * f[jk.second][v], p);
      if (!is_zero(cop)) return;
    }
    ++count;
  });
  return count;
}

inline int mobius(int n) {
  int r = 1;
  for (int q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      n /= q;
      if (n % q == 0) return 0;
      r = -r;
    }
  return n > 1 ? -r : r;
}

// Witt formula: dimension of the weight-n part of the free Lie algebra on
// k generators of even degree.
inline long witt(long k, int n) {
  long total = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) {
      long pw = 1;
      for (int e = 0; e < n / d; ++e) pw *= k;
      total += mobius(d) * pw;
    }
  return total / n;
}

}  // namespace oracle
