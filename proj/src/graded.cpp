#include "kdual/graded.hpp"

#include <algorithm>

namespace kdual {

GradedSpace::GradedSpace(std::vector<BasisElement> basis) : basis_(std::move(basis)) {
  by_name_.reserve(basis_.size());
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (!by_name_.emplace(basis_[i].name, i).second)
      throw PreconditionError("duplicate basis label: " + basis_[i].name);
    by_degree_[basis_[i].degree].push_back(i);
  }
}

std::optional<size_t> GradedSpace::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const std::vector<size_t>& GradedSpace::in_degree(int d) const {
  static const std::vector<size_t> none;
  auto it = by_degree_.find(d);
  return it == by_degree_.end() ? none : it->second;
}

std::vector<int> GradedSpace::degrees() const {
  std::vector<int> out;
  for (const auto& [d, v] : by_degree_) out.push_back(d);
  return out;
}

std::optional<int> GradedSpace::min_degree() const {
  if (by_degree_.empty()) return std::nullopt;
  return by_degree_.begin()->first;
}

std::optional<int> GradedSpace::max_degree() const {
  if (by_degree_.empty()) return std::nullopt;
  return by_degree_.rbegin()->first;
}

SpacePtr make_space(std::vector<BasisElement> basis) {
  return std::make_shared<const GradedSpace>(std::move(basis));
}

SpacePtr empty_space() { return make_space({}); }

bool same_space(const SpacePtr& a, const SpacePtr& b) { return a == b || *a == *b; }

SpacePtr tensor_space(const SpacePtr& a, const SpacePtr& b) {
  std::vector<BasisElement> out;
  out.reserve(a->dim() * b->dim());
  for (const auto& x : a->elements())
    for (const auto& y : b->elements()) out.push_back({x.name + "⊗" + y.name, x.degree + y.degree});
  return make_space(std::move(out));
}

std::string shift_name(const std::string& name, int k) {
  if (k == 0) return name;
  if (k == 1) return "s" + name;
  if (k == -1) return "~" + name;
  return (k > 0 ? "s^" : "~^") + std::to_string(k > 0 ? k : -k) + name;
}

SpacePtr shift_space(const SpacePtr& v, int k) {
  std::vector<BasisElement> out;
  out.reserve(v->dim());
  for (const auto& e : v->elements()) out.push_back({shift_name(e.name, k), e.degree + k});
  return make_space(std::move(out));
}

SpacePtr direct_sum_space(const SpacePtr& a, const SpacePtr& b) {
  std::vector<BasisElement> out = a->elements();
  std::unordered_map<std::string, int> taken;
  for (const auto& e : out) taken[e.name] = 1;
  for (const auto& e : b->elements()) {
    std::string n = e.name;
    while (taken.count(n)) n += "'";
    taken[n] = 1;
    out.push_back({n, e.degree});
  }
  return make_space(std::move(out));
}

std::optional<int> vector_degree(const GradedSpace& v, const Vec& x) {
  std::optional<int> d;
  for (const auto& [i, c] : x) {
    if (!d) d = v.degree(i);
    else if (*d != v.degree(i)) return std::nullopt;
  }
  return d;
}

GradedMap::GradedMap(Field f, SpacePtr src, SpacePtr tgt, int degree)
    : f_(std::move(f)), src_(std::move(src)), tgt_(std::move(tgt)), degree_(degree), cols_(src_->dim()) {}

GradedMap::GradedMap(Field f, SpacePtr src, SpacePtr tgt, int degree, std::vector<Vec> cols)
    : GradedMap(unchecked(std::move(f), std::move(src), std::move(tgt), degree, std::move(cols))) {
  auto bad = homogeneity_violations();
  if (!bad.empty()) throw DegreeError("inhomogeneous map: " + bad.front());
}

GradedMap GradedMap::unchecked(Field f, SpacePtr src, SpacePtr tgt, int degree, std::vector<Vec> cols) {
  GradedMap m(std::move(f), std::move(src), std::move(tgt), degree);
  if (cols.size() != m.src_->dim()) throw PreconditionError("column count does not match source dimension");
  for (const auto& c : cols)
    if (!c.empty() && c.rbegin()->first >= m.tgt_->dim()) throw PreconditionError("column index out of range");
  m.cols_ = std::move(cols);
  return m;
}

void GradedMap::set_col(size_t i, Vec v) {
  for (const auto& [j, c] : v)
    if (j >= tgt_->dim() || tgt_->degree(j) != src_->degree(i) + degree_)
      throw DegreeError("entry of wrong degree in column " + src_->name(i));
  cols_.at(i) = std::move(v);
}

std::vector<std::string> GradedMap::homogeneity_violations() const {
  std::vector<std::string> out;
  for (size_t i = 0; i < cols_.size(); ++i)
    for (const auto& [j, c] : cols_[i])
      if (tgt_->degree(j) != src_->degree(i) + degree_) out.push_back(src_->name(i) + " -> " + tgt_->name(j));
  return out;
}

Vec GradedMap::apply(const Vec& x) const {
  Vec out;
  for (const auto& [i, c] : x) axpy(out, c, cols_.at(i));
  return out;
}

GradedMap GradedMap::compose(const GradedMap& g) const {
  if (!same_space(g.tgt_, src_)) throw PreconditionError("composition of incompatible maps");
  GradedMap out(f_, g.src_, tgt_, degree_ + g.degree_);
  for (size_t i = 0; i < g.cols_.size(); ++i) out.cols_[i] = apply(g.cols_[i]);
  return out;
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
  if (degree_ != o.degree_ || !same_space(src_, o.src_) || !same_space(tgt_, o.tgt_))
    throw PreconditionError("sum of incompatible maps");
  GradedMap out = *this;
  for (size_t i = 0; i < cols_.size(); ++i) out.cols_[i] = add(cols_[i], o.cols_[i]);
  return out;
}

GradedMap GradedMap::operator-(const GradedMap& o) const { return *this + o.scaled(-f_.one()); }

GradedMap GradedMap::scaled(const Scalar& c) const {
  GradedMap out = *this;
  for (auto& col : out.cols_) col = kdual::scaled(col, c);
  return out;
}

bool GradedMap::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const Vec& v) { return v.empty(); });
}

bool GradedMap::operator==(const GradedMap& o) const {
  return degree_ == o.degree_ && same_space(src_, o.src_) && same_space(tgt_, o.tgt_) && cols_ == o.cols_;
}

size_t GradedMap::rank() const { return rank_of(f_, cols_); }

size_t GradedMap::rank_in_degree(int n) const { return rank_of(f_, cols_in_degree(n)); }

std::vector<Vec> GradedMap::cols_in_degree(int n) const {
  std::vector<Vec> out;
  for (size_t i : src_->in_degree(n)) out.push_back(cols_[i]);
  return out;
}

GradedMap identity_map(const Field& f, const SpacePtr& v) {
  GradedMap m(f, v, v, 0);
  for (size_t i = 0; i < v->dim(); ++i) m.set_col(i, unit(f, i));
  return m;
}

GradedMap zero_map(const Field& f, const SpacePtr& src, const SpacePtr& tgt, int degree) {
  return GradedMap(f, src, tgt, degree);
}

GradedMap tensor_maps(const GradedMap& f, const GradedMap& g) {
  const Field& fld = f.field();
  auto src = tensor_space(f.source(), g.source());
  auto tgt = tensor_space(f.target(), g.target());
  size_t m = g.source()->dim(), mt = g.target()->dim();
  std::vector<Vec> cols(src->dim());
  for (size_t x = 0; x < f.source()->dim(); ++x) {
    Scalar s = sign(fld, static_cast<long long>(g.degree()) * f.source()->degree(x));
    for (size_t y = 0; y < m; ++y) {
      Vec& out = cols[x * m + y];
      for (const auto& [a, ca] : f.col(x))
        for (const auto& [b, cb] : g.col(y)) add_term(out, a * mt + b, s * ca * cb);
    }
  }
  return GradedMap::unchecked(fld, src, tgt, f.degree() + g.degree(), std::move(cols));
}

GradedMap braid(const Field& f, const SpacePtr& v, const SpacePtr& w) {
  auto src = tensor_space(v, w);
  auto tgt = tensor_space(w, v);
  std::vector<Vec> cols(src->dim());
  size_t n = v->dim(), m = w->dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      cols[i * m + j] = Vec{{j * n + i, sign(f, static_cast<long long>(v->degree(i)) * w->degree(j))}};
  return GradedMap(f, src, tgt, 0, std::move(cols));
}

GradedMap suspension(const Field& f, const SpacePtr& v, int k) {
  auto tgt = shift_space(v, k);
  std::vector<Vec> cols(v->dim());
  for (size_t i = 0; i < v->dim(); ++i) cols[i] = unit(f, i);
  return GradedMap(f, v, tgt, k, std::move(cols));
}

GradedMap hstack(const GradedMap& f, const GradedMap& g) {
  if (f.degree() != g.degree() || !same_space(f.target(), g.target()))
    throw PreconditionError("hstack of incompatible maps");
  auto src = direct_sum_space(f.source(), g.source());
  std::vector<Vec> cols = f.cols();
  cols.insert(cols.end(), g.cols().begin(), g.cols().end());
  return GradedMap::unchecked(f.field(), src, f.target(), f.degree(), std::move(cols));
}

DegreeRange intersect(const DegreeRange& a, const DegreeRange& b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

int clamp_degree(long long n) {
  if (n <= INT_MIN) return INT_MIN;
  if (n >= INT_MAX) return INT_MAX;
  return static_cast<int>(n);
}

namespace {

long long widen_lo(int v) { return v == INT_MIN ? LLONG_MIN / 4 : v; }
long long widen_hi(int v) { return v == INT_MAX ? LLONG_MAX / 4 : v; }

DegreeRange shifted(const DegreeRange& r, long long a, long long b) {
  if (r.empty()) return r;
  return {clamp_degree(widen_lo(r.lo) + a), clamp_degree(widen_hi(r.hi) + b)};
}

// Exactness of X (x) Y from the exact ranges and degree spans of the factors.
DegreeRange tensor_exact(const Complex& x, const Complex& y) {
  auto span = [](const Complex& c) -> std::pair<long long, long long> {
    auto lo = c.space()->min_degree(), hi = c.space()->max_degree();
    if (!lo) return {0, 0};
    return {*lo, *hi};
  };
  auto [xl, xh] = span(x);
  auto [yl, yh] = span(y);
  DegreeRange r{};
  if (!x.exact().everything()) r = intersect(r, shifted(x.exact(), yh, yl));
  if (!y.exact().everything()) r = intersect(r, shifted(y.exact(), xh, xl));
  return r;
}

}  // namespace

Complex::Complex(GradedMap d, DegreeRange exact) : d_(std::move(d)), exact_(exact) {
  if (d_.degree() != -1) throw DegreeError("differential must have degree -1");
  if (!same_space(d_.source(), d_.target())) throw PreconditionError("differential must be an endomorphism");
}

Complex Complex::zero_differential(const Field& f, const SpacePtr& v) { return Complex(GradedMap(f, v, v, -1)); }

Complex tensor(const Complex& x, const Complex& y) {
  if (x.field() != y.field()) throw FieldMismatch("tensor of complexes over different fields");
  const Field& f = x.field();
  auto d = tensor_maps(x.d(), identity_map(f, y.space())) + tensor_maps(identity_map(f, x.space()), y.d());
  return Complex(d, tensor_exact(x, y));
}

Complex shift(const Complex& x, int k) {
  const Field& f = x.field();
  auto sp = shift_space(x.space(), k);
  std::vector<Vec> cols(sp->dim());
  Scalar s = sign(f, k);
  for (size_t i = 0; i < sp->dim(); ++i) cols[i] = scaled(x.d().col(i), s);
  return Complex(GradedMap(f, sp, sp, -1, std::move(cols)), shifted(x.exact(), k, k));
}

Complex direct_sum(const Complex& x, const Complex& y) {
  const Field& f = x.field();
  auto sp = direct_sum_space(x.space(), y.space());
  size_t n = x.dim();
  std::vector<Vec> cols(sp->dim());
  for (size_t i = 0; i < n; ++i) cols[i] = x.d().col(i);
  for (size_t j = 0; j < y.dim(); ++j)
    for (const auto& [k, c] : y.d().col(j)) cols[n + j].emplace(n + k, c);
  return Complex(GradedMap(f, sp, sp, -1, std::move(cols)), intersect(x.exact(), y.exact()));
}

Complex hom_complex(const Complex& x, const Complex& y) {
  if (!x.exact().everything()) throw Unsupported("hom out of a truncated complex");
  const Field& f = x.field();
  size_t n = x.dim(), m = y.dim();
  std::vector<BasisElement> basis;
  basis.reserve(n * m);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      basis.push_back({x.space()->name(i) + "->" + y.space()->name(j), y.space()->degree(j) - x.space()->degree(i)});
  auto sp = make_space(std::move(basis));
  // d_X transposed: for each x, the x' with x in d(x').
  std::vector<std::vector<std::pair<size_t, Scalar>>> into(n);
  for (size_t xp = 0; xp < n; ++xp)
    for (const auto& [xi, c] : x.d().col(xp)) into[xi].push_back({xp, c});
  std::vector<Vec> cols(n * m);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) {
      Vec& out = cols[i * m + j];
      for (const auto& [jp, c] : y.d().col(j)) add_term(out, i * m + jp, c);
      Scalar s = -sign(f, sp->degree(i * m + j));
      for (const auto& [xp, c] : into[i]) add_term(out, xp * m + j, s * c);
    }
  DegreeRange r{};
  if (!y.exact().everything()) {
    auto lo = x.space()->min_degree().value_or(0), hi = x.space()->max_degree().value_or(0);
    r = shifted(y.exact(), -lo, -hi);
  }
  return Complex(GradedMap(f, sp, sp, -1, std::move(cols)), r);
}

Vec to_hom_vector(const GradedMap& f) {
  size_t m = f.target()->dim();
  Vec out;
  for (size_t i = 0; i < f.source()->dim(); ++i)
    for (const auto& [j, c] : f.col(i)) out.emplace(i * m + j, c);
  return out;
}

GradedMap from_hom_vector(const Field& fld, const SpacePtr& x, const SpacePtr& y, int degree, const Vec& v) {
  size_t m = y->dim();
  std::vector<Vec> cols(x->dim());
  for (const auto& [k, c] : v) cols[k / m].emplace(k % m, c);
  return GradedMap(fld, x, y, degree, std::move(cols));
}

}  // namespace kdual
