#include "kdual/linalg.hpp"

namespace kdual {

void add_term(Vec& y, size_t i, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = y.find(i);
  if (it == y.end()) {
    y.emplace(i, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) y.erase(it);
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (a.is_zero()) return;
  for (const auto& [i, c] : x) add_term(y, i, a * c);
}

Vec scaled(const Vec& x, const Scalar& a) {
  Vec out;
  if (a.is_zero()) return out;
  for (const auto& [i, c] : x) out.emplace_hint(out.end(), i, c * a);
  return out;
}

Vec add(const Vec& x, const Vec& y) {
  Vec out = x;
  for (const auto& [i, c] : y) add_term(out, i, c);
  return out;
}

Vec sub(const Vec& x, const Vec& y) {
  Vec out = x;
  for (const auto& [i, c] : y) add_term(out, i, -c);
  return out;
}

Vec negated(const Vec& x) {
  Vec out;
  for (const auto& [i, c] : x) out.emplace_hint(out.end(), i, -c);
  return out;
}

Vec unit(const Field& f, size_t i) { return Vec{{i, f.one()}}; }

Scalar coeff(const Field& f, const Vec& v, size_t i) {
  auto it = v.find(i);
  return it == v.end() ? f.zero() : it->second;
}

std::optional<size_t> leading_index(const Vec& v) {
  if (v.empty()) return std::nullopt;
  return v.begin()->first;
}

Vec Echelon::pivot_coords(const Vec& v) const {
  Vec out;
  if (v.size() < rows_.size()) {
    for (const auto& [i, c] : v)
      if (rows_.count(i)) out.emplace_hint(out.end(), i, c);
  } else {
    for (const auto& [p, row] : rows_) {
      auto it = v.find(p);
      if (it != v.end()) out.emplace_hint(out.end(), p, it->second);
    }
  }
  return out;
}

Vec Echelon::reduce(const Vec& v) const {
  Vec r = v;
  for (const auto& [p, c] : pivot_coords(v)) axpy(r, -c, rows_.at(p));
  return r;
}

bool Echelon::insert(const Vec& v) {
  size_t k = inserted_++;
  Vec r = v;
  Vec combo;
  if (track_) combo.emplace(k, f_.one());
  for (const auto& [p, c] : pivot_coords(v)) {
    axpy(r, -c, rows_.at(p));
    if (track_) axpy(combo, -c, combos_.at(p));
  }
  if (r.empty()) {
    if (track_) kernel_.push_back(std::move(combo));
    return false;
  }
  size_t q = r.begin()->first;
  Scalar s = r.begin()->second.inverse();
  r = scaled(r, s);
  if (track_) combo = scaled(combo, s);
  for (auto& [p, row] : rows_) {
    auto it = row.find(q);
    if (it == row.end()) continue;
    Scalar c = it->second;
    axpy(row, -c, r);
    if (track_) axpy(combos_[p], -c, combo);
  }
  rows_.emplace(q, std::move(r));
  if (track_) combos_.emplace(q, std::move(combo));
  return true;
}

std::optional<Vec> Echelon::solve(const Vec& b) const {
  if (!track_) throw PreconditionError("solve needs a tracked echelon");
  Vec r = b;
  Vec x;
  for (const auto& [p, c] : pivot_coords(b)) {
    axpy(r, -c, rows_.at(p));
    axpy(x, c, combos_.at(p));
  }
  if (!r.empty()) return std::nullopt;
  return x;
}

std::vector<size_t> Echelon::pivots() const {
  std::vector<size_t> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

std::vector<Vec> Echelon::basis() const {
  std::vector<Vec> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

size_t rank_of(const Field& f, const std::vector<Vec>& cols) {
  Echelon e(f);
  e.insert_all(cols);
  return e.rank();
}

std::vector<Vec> kernel_of(const Field& f, const std::vector<Vec>& cols) {
  Echelon e(f, true);
  e.insert_all(cols);
  return e.kernel();
}

std::optional<Vec> solve_with(const Field& f, const std::vector<Vec>& cols, const Vec& b) {
  Echelon e(f, true);
  e.insert_all(cols);
  return e.solve(b);
}

Subspace span_of(const Field& f, const std::vector<Vec>& vs) {
  Subspace s(f);
  s.insert_all(vs);
  return s;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  auto ab = a.basis();
  auto bb = b.basis();
  std::vector<Vec> cols = ab;
  for (const auto& v : bb) cols.push_back(negated(v));
  Subspace out(a.field());
  for (const auto& x : kernel_of(a.field(), cols)) {
    Vec v;
    for (const auto& [k, c] : x)
      if (k < ab.size()) axpy(v, c, ab[k]);
    out.insert(v);
  }
  return out;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  Subspace out = a;
  out.insert_all(b.basis());
  return out;
}

bool is_subspace_of(const Subspace& a, const Subspace& b) {
  for (const auto& [p, row] : a.rows())
    if (!b.contains(row)) return false;
  return true;
}

bool same_subspace(const Subspace& a, const Subspace& b) {
  return a.rank() == b.rank() && a.rows() == b.rows();
}

CoordinateSystem::CoordinateSystem(Field f, const std::vector<Vec>& basis)
    : n_(basis.size()), ech_(std::move(f), true) {
  ech_.insert_all(basis);
}

Vec CoordinateSystem::require(const Vec& v) const {
  auto c = coords(v);
  if (!c) throw PreconditionError("vector outside the coordinate span");
  return *c;
}

}  // namespace kdual
