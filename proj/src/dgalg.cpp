#include "kdual/dgalg.hpp"

namespace kdual {

Vec DgAlgebra::mul_basis(size_t i, size_t j) const {
  auto it = mu.find({i, j});
  return it == mu.end() ? Vec{} : it->second;
}

Vec DgAlgebra::multiply(const Vec& x, const Vec& y) const {
  Vec out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      auto it = mu.find({i, j});
      if (it != mu.end()) axpy(out, a * b, it->second);
    }
  return out;
}

DgAlgebra zero_algebra(const Field& f) { return DgAlgebra(Complex::zero_differential(f, empty_space())); }

DgAlgebra algebra_from_table(const Field& f, const SpacePtr& v, ProductTable mu) {
  return DgAlgebra(Complex::zero_differential(f, v), std::move(mu));
}

namespace {

std::string triple(const GradedSpace& v, size_t i, size_t j, size_t k) {
  return "(" + v.name(i) + "," + v.name(j) + "," + v.name(k) + ")";
}

std::string pair_name(const GradedSpace& v, size_t i, size_t j) { return "(" + v.name(i) + "," + v.name(j) + ")"; }

}  // namespace

Certificate validate_algebra(const DgAlgebra& a) {
  const auto& v = *a.space();
  const Field& f = a.field();
  size_t n = a.dim();
  CheckResult dsq{"d_squared", true, {}}, hom{"homogeneity", true, {}}, assoc{"associativity", true, {}},
      leib{"leibniz", true, {}};
  for (size_t i = 0; i < n; ++i)
    if (!a.d().apply(a.d().col(i)).empty()) dsq.fail(v.name(i));
  for (const auto& w : a.d().homogeneity_violations()) hom.fail("d: " + w);
  for (const auto& [ij, prod] : a.mu)
    for (const auto& [k, c] : prod)
      if (v.degree(k) != v.degree(ij.first) + v.degree(ij.second))
        hom.fail("mu" + pair_name(v, ij.first, ij.second) + " -> " + v.name(k));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec ij = a.mul_basis(i, j);
      for (size_t k = 0; k < n; ++k) {
        Vec left = a.multiply(ij, unit(f, k));
        Vec right = a.multiply(unit(f, i), a.mul_basis(j, k));
        if (left != right) assoc.fail(triple(v, i, j, k));
      }
      Vec lhs = a.d().apply(ij);
      Vec rhs = a.multiply(a.d().col(i), unit(f, j));
      axpy(rhs, sign(f, v.degree(i)), a.multiply(unit(f, i), a.d().col(j)));
      if (lhs != rhs) leib.fail(pair_name(v, i, j));
    }
  Certificate c;
  c.checks = {dsq, hom, assoc, leib};
  return c;
}

Certificate validate_alg_morphism(const GradedMap& m, const DgAlgebra& a, const DgAlgebra& b) {
  CheckResult deg{"degree", m.degree() == 0, {}}, chain{"chain_map", true, {}}, mult{"multiplicative", true, {}};
  if (m.degree() != 0) deg.witnesses.push_back("degree " + std::to_string(m.degree()));
  const auto& v = *a.space();
  for (size_t i = 0; i < a.dim(); ++i)
    if (b.d().apply(m.col(i)) != m.apply(a.d().col(i))) chain.fail(v.name(i));
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j)
      if (m.apply(a.mul_basis(i, j)) != b.multiply(m.col(i), m.col(j))) mult.fail(pair_name(v, i, j));
  Certificate c;
  c.checks = {deg, chain, mult};
  return c;
}

DegreeRange free_exact_range(const GradedSpace& gens, int cap, DegreeRange gens_exact) {
  auto lo = gens.min_degree(), hi = gens.max_degree();
  if (!lo) return gens_exact.everything() ? DegreeRange{} : gens_exact;
  if (*lo >= 1) {
    if (gens_exact.lo != INT_MIN) return {1, 0};
    long long top = static_cast<long long>(cap + 1) * *lo - 1;
    return {INT_MIN, clamp_degree(std::min<long long>(top, gens_exact.hi))};
  }
  if (*hi <= -1) {
    if (gens_exact.hi != INT_MAX) return {1, 0};
    long long bottom = static_cast<long long>(cap + 1) * *hi + 1;
    return {clamp_degree(std::max<long long>(bottom, gens_exact.lo)), INT_MAX};
  }
  return {1, 0};
}

FreeDgAlgebra::FreeDgAlgebra(Field f, SpacePtr gens, std::vector<Vec> gen_diff, int cap, DegreeRange gens_exact)
    : f_(std::move(f)), gens_(std::move(gens)), words_(gens_->dim(), cap), gen_diff_(std::move(gen_diff)) {
  if (cap < 1) throw PreconditionError("weight cap must be at least 1");
  if (gen_diff_.size() != gens_->dim()) throw PreconditionError("one differential per generator required");
  auto sp = word_space(gens_, words_, "·");
  for (size_t g = 0; g < gen_diff_.size(); ++g)
    for (const auto& [w, c] : gen_diff_[g]) {
      if (w >= words_.size()) throw PreconditionError("generator differential exceeds the cap");
      if (sp->degree(w) != gens_->degree(g) - 1)
        throw DegreeError("differential of " + gens_->name(g) + " has a term of wrong degree");
    }
  std::vector<Vec> cols(words_.size());
  for (size_t idx = 0; idx < words_.size(); ++idx) {
    auto w = words_.word(idx);
    long long before = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      Scalar s = sign(f_, before);
      for (const auto& [t, c] : gen_diff_[w[i]]) {
        auto tw = words_.word(t);
        if (w.size() - 1 + tw.size() > static_cast<size_t>(cap)) continue;
        std::vector<size_t> nw(w.begin(), w.begin() + i);
        nw.insert(nw.end(), tw.begin(), tw.end());
        nw.insert(nw.end(), w.begin() + i + 1, w.end());
        add_term(cols[idx], words_.index(nw), s * c);
      }
      before += gens_->degree(w[i]);
    }
  }
  cx_ = std::make_shared<Complex>(GradedMap(f_, sp, sp, -1, std::move(cols)),
                                  free_exact_range(*gens_, cap, gens_exact));
  for (size_t g = 0; g < gens_->dim(); ++g)
    if (!cx_->d().apply(gen_diff_[g]).empty())
      throw PreconditionError("d^2 is nonzero on generator " + gens_->name(g));
}

Vec FreeDgAlgebra::word(const std::vector<size_t>& letters) const {
  if (letters.size() > static_cast<size_t>(cap())) return {};
  return unit(f_, words_.index(letters));
}

Vec FreeDgAlgebra::concat(const Vec& a, const Vec& b) const {
  Vec out;
  for (const auto& [i, ca] : a) {
    auto wa = words_.word(i);
    for (const auto& [j, cb] : b) {
      if (wa.size() + words_.length(j) > static_cast<size_t>(cap())) continue;
      auto w = wa;
      auto wb = words_.word(j);
      w.insert(w.end(), wb.begin(), wb.end());
      add_term(out, words_.index(w), ca * cb);
    }
  }
  return out;
}

DgAlgebra FreeDgAlgebra::algebra() const {
  ProductTable mu;
  size_t cap_len = static_cast<size_t>(cap());
  for (size_t i = 0; i < words_.size(); ++i) {
    auto wi = words_.word(i);
    if (wi.size() >= cap_len) break;
    for (size_t len = 1; len + wi.size() <= cap_len; ++len) {
      for (size_t j = words_.first_of_length(len); j < words_.first_of_length(len) + words_.count_of_length(len); ++j) {
        auto w = wi;
        auto wj = words_.word(j);
        w.insert(w.end(), wj.begin(), wj.end());
        mu.emplace(std::make_pair(i, j), unit(f_, words_.index(w)));
      }
    }
  }
  return DgAlgebra(*cx_, std::move(mu));
}

Vec word_combination(const WordIndex& w, const Field& f, const std::vector<std::pair<std::vector<size_t>, Scalar>>& terms) {
  Vec out;
  for (const auto& [letters, c] : terms)
    if (letters.size() <= static_cast<size_t>(w.cap())) add_term(out, w.index(letters), c);
  (void)f;
  return out;
}

FreeDgAlgebra mc_algebra(const Field& f, int cap) {
  auto gens = make_space({{"x", -1}});
  WordIndex w(1, cap);
  Vec dx = word_combination(w, f, {{{0, 0}, -f.one()}});
  return FreeDgAlgebra(f, gens, {dx}, cap);
}

bool is_mc_element(const DgAlgebra& a, const Vec& x) {
  auto deg = vector_degree(*a.space(), x);
  if (deg && *deg != -1) throw DegreeError("Maurer-Cartan candidates have degree -1");
  Vec r = a.d().apply(x);
  for (const auto& [i, c] : a.multiply(x, x)) add_term(r, i, c);
  return r.empty();
}

std::vector<Vec> enumerate_mc(const DgAlgebra& a, size_t limit) {
  std::vector<Vec> out;
  enumerate_vectors(a.field(), a.space()->in_degree(-1), limit, [&](const Vec& v) {
    if (is_mc_element(a, v)) out.push_back(v);
  });
  return out;
}

namespace {

Vec evaluate_word(const FreeDgAlgebra& f, const DgAlgebra& a, const std::vector<Vec>& images, size_t idx) {
  auto w = f.words().word(idx);
  Vec acc = images[w[0]];
  for (size_t i = 1; i < w.size() && !acc.empty(); ++i) acc = a.multiply(acc, images[w[i]]);
  return acc;
}

Vec evaluate(const FreeDgAlgebra& f, const DgAlgebra& a, const std::vector<Vec>& images, const Vec& x) {
  Vec out;
  for (const auto& [i, c] : x) axpy(out, c, evaluate_word(f, a, images, i));
  return out;
}

}  // namespace

GradedMap extend_from_generators(const FreeDgAlgebra& f, const DgAlgebra& a, const std::vector<Vec>& images) {
  if (images.size() != f.generators()->dim()) throw PreconditionError("one image per generator required");
  const auto& w = f.words();
  std::vector<Vec> cols(w.size());
  for (size_t idx = 0; idx < w.size(); ++idx) {
    auto letters = w.word(idx);
    if (letters.size() == 1) {
      cols[idx] = images[letters[0]];
      continue;
    }
    auto last = letters.back();
    letters.pop_back();
    cols[idx] = a.multiply(cols[w.index(letters)], images[last]);
  }
  return GradedMap(f.field(), f.space(), a.space(), 0, std::move(cols));
}

bool generator_chain_condition(const FreeDgAlgebra& f, const DgAlgebra& a, const std::vector<Vec>& images) {
  for (size_t g = 0; g < images.size(); ++g)
    if (evaluate(f, a, images, f.gen_diff()[g]) != a.d().apply(images[g])) return false;
  return true;
}

std::vector<std::vector<Vec>> enumerate_free_morphisms(const FreeDgAlgebra& f, const DgAlgebra& a, size_t limit) {
  const auto& gens = *f.generators();
  size_t m = a.dim();
  std::vector<size_t> support;
  for (size_t g = 0; g < gens.dim(); ++g)
    for (size_t i : a.space()->in_degree(gens.degree(g))) support.push_back(g * m + i);
  std::vector<std::vector<Vec>> out;
  enumerate_vectors(a.field(), support, limit, [&](const Vec& v) {
    std::vector<Vec> images(gens.dim());
    for (const auto& [k, c] : v) images[k / m].emplace(k % m, c);
    if (generator_chain_condition(f, a, images)) out.push_back(std::move(images));
  });
  return out;
}

std::vector<Vec> restrict_to_generators(const FreeDgAlgebra& f, const GradedMap& m) {
  std::vector<Vec> out;
  for (size_t g = 0; g < f.generators()->dim(); ++g) out.push_back(m.col(g));
  return out;
}

PivotIndex::PivotIndex(const Subspace& s) : piv_(s.pivots()) {
  for (size_t k = 0; k < piv_.size(); ++k) pos_.emplace(piv_[k], k);
}

Vec PivotIndex::coords(const Subspace& s, const Vec& v) const {
  Vec out;
  for (const auto& [p, c] : s.pivot_coords(v)) out.emplace(pos_.at(p), c);
  return out;
}

SpacePtr subspace_space(const GradedSpace& ambient, const Subspace& s) {
  std::vector<BasisElement> b;
  for (size_t p : s.pivots()) b.push_back(ambient.at(p));
  return make_space(std::move(b));
}

SubAlgebra restrict_algebra(const DgAlgebra& a, const Subspace& u) {
  const Field& f = a.field();
  PivotIndex idx(u);
  auto basis = u.basis();
  auto sp = subspace_space(*a.space(), u);
  std::vector<Vec> dcols;
  for (const auto& b : basis) {
    Vec db = a.d().apply(b);
    if (!u.contains(db)) throw PreconditionError("subspace is not closed under d");
    dcols.push_back(idx.coords(u, db));
  }
  ProductTable mu;
  for (size_t k = 0; k < basis.size(); ++k)
    for (size_t l = 0; l < basis.size(); ++l) {
      Vec p = a.multiply(basis[k], basis[l]);
      if (p.empty()) continue;
      if (!u.contains(p)) throw PreconditionError("subspace is not closed under multiplication");
      mu.emplace(std::make_pair(k, l), idx.coords(u, p));
    }
  GradedMap incl(f, sp, a.space(), 0, basis);
  return {DgAlgebra(Complex(GradedMap(f, sp, sp, -1, std::move(dcols))), std::move(mu)), incl};
}

bool is_ideal(const DgAlgebra& a, const Subspace& ideal) {
  const Field& f = a.field();
  for (const auto& r : ideal.basis()) {
    if (!ideal.contains(a.d().apply(r))) return false;
    for (size_t i = 0; i < a.dim(); ++i)
      if (!ideal.contains(a.multiply(unit(f, i), r)) || !ideal.contains(a.multiply(r, unit(f, i)))) return false;
  }
  return true;
}

Subspace ideal_generated(const DgAlgebra& a, const std::vector<Vec>& gens) {
  const Field& f = a.field();
  Subspace s(f);
  std::vector<Vec> work;
  for (const auto& g : gens)
    if (s.insert(g)) work.push_back(g);
  while (!work.empty()) {
    Vec v = std::move(work.back());
    work.pop_back();
    std::vector<Vec> next{a.d().apply(v)};
    for (size_t i = 0; i < a.dim(); ++i) {
      next.push_back(a.multiply(unit(f, i), v));
      next.push_back(a.multiply(v, unit(f, i)));
    }
    for (auto& x : next)
      if (!x.empty() && s.insert(x)) work.push_back(std::move(x));
  }
  return s;
}

QuotientAlgebra quotient_algebra(const DgAlgebra& a, const Subspace& ideal) {
  if (!is_ideal(a, ideal)) throw PreconditionError("not a d-stable two-sided ideal");
  const Field& f = a.field();
  std::vector<size_t> keep;
  std::map<size_t, size_t> pos;
  for (size_t i = 0; i < a.dim(); ++i)
    if (!ideal.rows().count(i)) {
      pos.emplace(i, keep.size());
      keep.push_back(i);
    }
  auto cls = [&](const Vec& v) {
    Vec out;
    for (const auto& [i, c] : ideal.reduce(v)) out.emplace(pos.at(i), c);
    return out;
  };
  std::vector<BasisElement> b;
  for (size_t i : keep) b.push_back(a.space()->at(i));
  auto sp = make_space(std::move(b));
  std::vector<Vec> dcols;
  for (size_t i : keep) dcols.push_back(cls(a.d().col(i)));
  ProductTable mu;
  for (size_t k = 0; k < keep.size(); ++k)
    for (size_t l = 0; l < keep.size(); ++l) {
      Vec p = cls(a.mul_basis(keep[k], keep[l]));
      if (!p.empty()) mu.emplace(std::make_pair(k, l), std::move(p));
    }
  std::vector<Vec> proj;
  for (size_t i = 0; i < a.dim(); ++i) proj.push_back(cls(unit(f, i)));
  return {DgAlgebra(Complex(GradedMap(f, sp, sp, -1, std::move(dcols))), std::move(mu)),
          GradedMap(f, a.space(), sp, 0, std::move(proj))};
}

ProductAlgebra product_algebra(const DgAlgebra& a, const DgAlgebra& b) {
  const Field& f = a.field();
  Complex cx = direct_sum(a.cx, b.cx);
  size_t n = a.dim(), m = b.dim();
  ProductTable mu = a.mu;
  for (const auto& [ij, v] : b.mu) {
    Vec w;
    for (const auto& [k, c] : v) w.emplace(n + k, c);
    mu.emplace(std::make_pair(n + ij.first, n + ij.second), std::move(w));
  }
  std::vector<Vec> p1(n + m), p2(n + m), i1(n), i2(m);
  for (size_t i = 0; i < n; ++i) {
    p1[i] = unit(f, i);
    i1[i] = unit(f, i);
  }
  for (size_t j = 0; j < m; ++j) {
    p2[n + j] = unit(f, j);
    i2[j] = unit(f, n + j);
  }
  auto sp = cx.space();
  return {DgAlgebra(cx, std::move(mu)), GradedMap(f, sp, a.space(), 0, std::move(p1)),
          GradedMap(f, sp, b.space(), 0, std::move(p2)), GradedMap(f, a.space(), sp, 0, std::move(i1)),
          GradedMap(f, b.space(), sp, 0, std::move(i2))};
}

PullbackAlgebra pullback_algebra(const GradedMap& f, const DgAlgebra& a, const GradedMap& g, const DgAlgebra& ap) {
  if (!same_space(f.target(), g.target())) throw PreconditionError("pullback needs a common target");
  auto prod = product_algebra(a, ap);
  auto h = hstack(f, g.scaled(-f.field().one()));
  Subspace k(f.field());
  for (const auto& v : kernel_of(f.field(), h.cols())) k.insert(v);
  auto sub = restrict_algebra(prod.algebra, k);
  return {sub.algebra, prod.p1.compose(sub.inclusion), prod.p2.compose(sub.inclusion), sub.inclusion};
}

std::optional<GradedMap> pullback_cone_map(const PullbackAlgebra& p, const GradedMap& h1, const GradedMap& h2) {
  const Field& f = p.algebra.field();
  Subspace k(f);
  for (const auto& c : p.inclusion.cols()) k.insert(c);
  PivotIndex idx(k);
  size_t n = h1.target()->dim();
  std::vector<Vec> cols;
  for (size_t x = 0; x < h1.source()->dim(); ++x) {
    Vec v = h1.col(x);
    for (const auto& [i, c] : h2.col(x)) v.emplace(n + i, c);
    if (!k.contains(v)) return std::nullopt;
    cols.push_back(idx.coords(k, v));
  }
  return GradedMap(f, h1.source(), p.algebra.space(), h1.degree(), std::move(cols));
}

bool is_surjective(const GradedMap& f) { return f.rank() == f.target()->dim(); }
bool is_injective(const GradedMap& f) { return f.rank() == f.source()->dim(); }

AlgMorphismClass classify_alg_morphism(const GradedMap& f, const DgAlgebra& a, const DgAlgebra& b, DegreeRange window) {
  AlgMorphismClass out;
  out.fibration = is_surjective(f);
  out.homology = is_quasi_iso(f, a.cx, b.cx, window);
  out.weak_equivalence = out.homology.quasi_iso;
  return out;
}

}  // namespace kdual
