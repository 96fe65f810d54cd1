#include "kdual/homology.hpp"

#include <algorithm>

namespace kdual {

DegreeRange full_window(const Complex& x) {
  auto lo = x.space()->min_degree(), hi = x.space()->max_degree();
  if (!lo) return {0, 0};
  return {*lo, *hi};
}

DegreeRange full_window(const Complex& x, const Complex& y) {
  std::vector<int> ends;
  for (const Complex* c : {&x, &y})
    if (auto lo = c->space()->min_degree()) {
      ends.push_back(*lo);
      ends.push_back(*c->space()->max_degree());
    }
  if (ends.empty()) return {0, 0};
  return {*std::min_element(ends.begin(), ends.end()), *std::max_element(ends.begin(), ends.end())};
}

namespace {

void require_exact(const Complex& x, DegreeRange w, bool approximate) {
  if (approximate || w.empty()) return;
  if (!x.exact().covers(static_cast<long long>(w.lo) - 1, static_cast<long long>(w.hi) + 1))
    throw InsufficientTruncation("window [" + std::to_string(w.lo) + "," + std::to_string(w.hi) +
                                 "] exceeds the exact range of the truncation");
}

std::vector<Vec> cycles(const Complex& x, int n) {
  auto idx = x.space()->in_degree(n);
  std::vector<Vec> cols;
  for (size_t i : idx) cols.push_back(x.d().col(i));
  std::vector<Vec> out;
  for (const auto& k : kernel_of(x.field(), cols)) {
    Vec v;
    for (const auto& [j, c] : k) v.emplace(idx[j], c);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::map<int, size_t> homology(const Complex& x, DegreeRange window, bool approximate) {
  require_exact(x, window, approximate);
  std::map<int, size_t> out;
  for (long long n = window.lo; n <= window.hi; ++n) {
    int k = static_cast<int>(n);
    size_t dim = x.space()->dim_in_degree(k);
    size_t out_rank = x.d().rank_in_degree(k);
    size_t in_rank = x.d().rank_in_degree(k + 1);
    out[k] = dim - out_rank - in_rank;
  }
  return out;
}

bool is_chain_map(const GradedMap& f, const Complex& x, const Complex& y) {
  return y.d().compose(f) == f.compose(x.d()).scaled(sign(f.field(), f.degree()));
}

QuasiIsoVerdict is_quasi_iso(const GradedMap& f, const Complex& x, const Complex& y, DegreeRange window,
                             bool approximate) {
  QuasiIsoVerdict v;
  if (f.degree() != 0) throw DegreeError("quasi-isomorphism test needs a degree 0 map");
  require_exact(x, window, approximate);
  require_exact(y, window, approximate);
  v.chain_map = true;
  for (long long n = window.lo; n <= window.hi + 1LL; ++n) {
    for (size_t i : x.space()->in_degree(static_cast<int>(n))) {
      if (y.d().apply(f.col(i)) != f.apply(x.d().col(i))) {
        v.chain_map = false;
        v.reason = "not a chain map at " + x.space()->name(i);
        return v;
      }
    }
  }
  v.quasi_iso = true;
  for (long long n = window.lo; n <= window.hi; ++n) {
    int k = static_cast<int>(n);
    auto hx = homology(x, {k, k}, true).at(k);
    auto hy = homology(y, {k, k}, true).at(k);
    Subspace boundaries(f.field());
    for (size_t i : y.space()->in_degree(k + 1)) boundaries.insert(y.d().col(i));
    size_t b = boundaries.rank();
    for (const auto& z : cycles(x, k)) boundaries.insert(f.apply(z));
    size_t r = boundaries.rank() - b;
    v.witnesses[k] = {hx, hy, r};
    if (!(hx == hy && hy == r)) {
      v.quasi_iso = false;
      if (v.reason.empty()) v.reason = "H_" + std::to_string(k) + " not bijective";
    }
  }
  return v;
}

Subspace Filtration::stage(const Field& f, size_t n) const {
  if (n == 0 || stages.empty()) return Subspace(f);
  return stages[std::min(n, stages.size()) - 1];
}

bool is_d_stable(const Complex& x, const Filtration& f) {
  for (const auto& s : f.stages)
    for (const auto& [p, row] : s.rows())
      if (!s.contains(x.d().apply(row))) return false;
  return true;
}

bool is_increasing(const Filtration& f) {
  for (size_t i = 1; i < f.stages.size(); ++i)
    if (!is_subspace_of(f.stages[i - 1], f.stages[i])) return false;
  return true;
}

bool is_exhaustive(const Complex& x, const Filtration& f) {
  return !f.stages.empty() ? f.stages.back().rank() == x.dim() : x.dim() == 0;
}

namespace {

// Basis of F_n modulo F_{n-1}: rows reduced against F_{n-1}, then put in
// reduced echelon form. Coordinates of a class are the pivot entries of
// its reduction.
struct Piece {
  Subspace lower;
  Subspace rows;
};

Piece make_piece(const Field& fld, const Filtration& f, size_t n) {
  Piece p{f.stage(fld, n - 1), Subspace(fld)};
  Subspace stage = f.stage(fld, n);
  for (const auto& [q, row] : stage.rows()) p.rows.insert(p.lower.reduce(row));
  return p;
}

Vec piece_coords(const Piece& p, const Vec& v) {
  Vec r = p.lower.reduce(v);
  Vec c = p.rows.pivot_coords(r);
  Vec out;
  auto piv = p.rows.pivots();
  for (const auto& [q, s] : c) {
    size_t k = std::lower_bound(piv.begin(), piv.end(), q) - piv.begin();
    out.emplace(k, s);
  }
  return out;
}

SpacePtr piece_space(const Complex& x, const Piece& p) {
  std::vector<BasisElement> b;
  for (size_t q : p.rows.pivots()) b.push_back(x.space()->at(q));
  return make_space(std::move(b));
}

}  // namespace

std::vector<Complex> associated_graded(const Complex& x, const Filtration& f) {
  if (!is_d_stable(x, f)) throw PreconditionError("filtration is not stable under d");
  std::vector<Complex> out;
  const Field& fld = x.field();
  for (size_t n = 1; n <= f.length(); ++n) {
    Piece p = make_piece(fld, f, n);
    auto sp = piece_space(x, p);
    std::vector<Vec> cols;
    for (const auto& row : p.rows.basis()) cols.push_back(piece_coords(p, x.d().apply(row)));
    out.emplace_back(GradedMap(fld, sp, sp, -1, std::move(cols)));
  }
  return out;
}

Filtration filtration_tensor(const Filtration& f, size_t dim_c, size_t dim_e) {
  (void)dim_c;
  Filtration out;
  for (const auto& s : f.stages) {
    Subspace t(s.field());
    for (const auto& [p, row] : s.rows())
      for (size_t e = 0; e < dim_e; ++e) {
        Vec v;
        for (const auto& [i, c] : row) v.emplace(i * dim_e + e, c);
        t.insert(v);
      }
    out.stages.push_back(std::move(t));
  }
  return out;
}

GradedMap graded_piece_map(const GradedMap& f, const Filtration& fx, const Filtration& fy, size_t n,
                           const Complex& grx, const Complex& gry) {
  const Field& fld = f.field();
  Piece px = make_piece(fld, fx, n), py = make_piece(fld, fy, n);
  std::vector<Vec> cols;
  for (const auto& row : px.rows.basis()) cols.push_back(piece_coords(py, f.apply(row)));
  return GradedMap(fld, grx.space(), gry.space(), f.degree(), std::move(cols));
}

FilteredVerdict is_filtered_quasi_iso(const GradedMap& f, const Complex& x, const Filtration& fx, const Complex& y,
                                      const Filtration& fy) {
  FilteredVerdict v;
  const Field& fld = f.field();
  size_t n = std::max(fx.length(), fy.length());
  for (size_t k = 1; k <= n; ++k) {
    Subspace src = fx.stage(fld, k), tgt = fy.stage(fld, k);
    for (const auto& [p, row] : src.rows())
      if (!tgt.contains(f.apply(row))) {
        v.reason = "f does not preserve stage " + std::to_string(k);
        return v;
      }
  }
  v.compatible = true;
  Filtration px = fx, py = fy;
  while (px.length() < n) px.stages.push_back(px.stages.empty() ? Subspace(fld) : px.stages.back());
  while (py.length() < n) py.stages.push_back(py.stages.empty() ? Subspace(fld) : py.stages.back());
  auto gx = associated_graded(x, px);
  auto gy = associated_graded(y, py);
  v.filtered_quasi_iso = true;
  for (size_t k = 1; k <= n; ++k) {
    auto g = graded_piece_map(f, px, py, k, gx[k - 1], gy[k - 1]);
    DegreeRange w{};
    auto wx = full_window(gx[k - 1]), wy = full_window(gy[k - 1]);
    w = {std::min(wx.lo, wy.lo), std::max(wx.hi, wy.hi)};
    auto q = is_quasi_iso(g, gx[k - 1], gy[k - 1], w);
    if (!q.quasi_iso && v.reason.empty()) v.reason = "stage " + std::to_string(k) + ": " + q.reason;
    v.filtered_quasi_iso = v.filtered_quasi_iso && q.quasi_iso;
    v.stages.push_back(std::move(q));
  }
  return v;
}

}  // namespace kdual
