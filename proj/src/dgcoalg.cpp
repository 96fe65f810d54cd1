#include "kdual/dgcoalg.hpp"

namespace kdual {

DgCoalgebra::DgCoalgebra(Complex c, std::vector<Vec> d) : cx(std::move(c)), delta(std::move(d)) {
  if (delta.empty()) delta.resize(cx.dim());
  if (delta.size() != cx.dim()) throw PreconditionError("one coproduct per basis element required");
  size_t n2 = cx.dim() * cx.dim();
  for (const auto& v : delta)
    if (!v.empty() && v.rbegin()->first >= n2) throw PreconditionError("coproduct index out of range");
}

Vec DgCoalgebra::coproduct(const Vec& x) const {
  Vec out;
  for (const auto& [i, c] : x) axpy(out, c, delta[i]);
  return out;
}

DgCoalgebra zero_coalgebra(const Field& f) { return DgCoalgebra(Complex::zero_differential(f, empty_space())); }

Vec tensor_apply(const GradedMap& f, const GradedMap& g, const Vec& x) {
  const Field& fld = f.field();
  size_t m = g.source()->dim(), mt = g.target()->dim();
  Vec out;
  for (const auto& [k, c] : x) {
    size_t a = k / m, b = k % m;
    Scalar s = c * sign(fld, static_cast<long long>(g.degree()) * f.source()->degree(a));
    for (const auto& [a2, ca] : f.col(a))
      for (const auto& [b2, cb] : g.col(b)) add_term(out, a2 * mt + b2, s * ca * cb);
  }
  return out;
}

Vec tensor_vectors(const Vec& x, const Vec& y, size_t dim_w) {
  Vec out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) out.emplace(i * dim_w + j, a * b);
  return out;
}

namespace {

// (Delta (x) 1) and (1 (x) Delta) on C (x) C, landing in C^{(x)3}.
Vec delta_left(const DgCoalgebra& c, const Vec& x) {
  size_t n = c.dim();
  Vec out;
  for (const auto& [k, s] : x) {
    size_t a = k / n, b = k % n;
    for (const auto& [t, u] : c.delta[a]) add_term(out, t * n + b, s * u);
  }
  return out;
}

Vec delta_right(const DgCoalgebra& c, const Vec& x) {
  size_t n = c.dim();
  Vec out;
  for (const auto& [k, s] : x) {
    size_t a = k / n, b = k % n;
    for (const auto& [t, u] : c.delta[b]) add_term(out, a * n * n + t, s * u);
  }
  return out;
}

Vec braid_vec(const DgCoalgebra& c, const Vec& x) {
  size_t n = c.dim();
  const auto& v = *c.space();
  Vec out;
  for (const auto& [k, s] : x) {
    size_t a = k / n, b = k % n;
    add_term(out, b * n + a, s * sign(c.field(), static_cast<long long>(v.degree(a)) * v.degree(b)));
  }
  return out;
}

// (d (x) 1 + 1 (x) d) on C (x) C.
Vec d_tensor(const DgCoalgebra& c, const Vec& x) {
  size_t n = c.dim();
  const auto& v = *c.space();
  Vec out;
  for (const auto& [k, s] : x) {
    size_t a = k / n, b = k % n;
    for (const auto& [a2, u] : c.d().col(a)) add_term(out, a2 * n + b, s * u);
    Scalar sg = s * sign(c.field(), v.degree(a));
    for (const auto& [b2, u] : c.d().col(b)) add_term(out, a * n + b2, sg * u);
  }
  return out;
}

// Kernel of x -> (P (x) 1) Delta x on a list of vectors, with P the
// projection along U; returns the subspace of combinations.
Subspace delta_preimage(const DgCoalgebra& c, const Subspace& u) {
  const Field& f = c.field();
  size_t n = c.dim();
  std::vector<Vec> cols;
  for (size_t i = 0; i < n; ++i) {
    Vec out;
    for (const auto& [k, s] : c.delta[i]) {
      size_t a = k / n, b = k % n;
      for (const auto& [a2, t] : u.reduce(unit(f, a))) add_term(out, a2 * n + b, s * t);
    }
    cols.push_back(std::move(out));
  }
  Subspace k(f);
  for (const auto& v : kernel_of(f, cols)) k.insert(v);
  return k;
}

}  // namespace

bool is_cocommutative(const DgCoalgebra& c) {
  for (size_t i = 0; i < c.dim(); ++i)
    if (braid_vec(c, c.delta[i]) != c.delta[i]) return false;
  return true;
}

Certificate validate_coalgebra(const DgCoalgebra& c) {
  const auto& v = *c.space();
  size_t n = c.dim();
  CheckResult dsq{"d_squared", true, {}}, hom{"homogeneity", true, {}}, coassoc{"coassociativity", true, {}},
      coder{"coderivation", true, {}};
  for (size_t i = 0; i < n; ++i)
    if (!c.d().apply(c.d().col(i)).empty()) dsq.fail(v.name(i));
  for (const auto& w : c.d().homogeneity_violations()) hom.fail("d: " + w);
  for (size_t i = 0; i < n; ++i) {
    for (const auto& [k, s] : c.delta[i])
      if (v.degree(k / n) + v.degree(k % n) != v.degree(i))
        hom.fail("delta(" + v.name(i) + ") -> " + v.name(k / n) + "⊗" + v.name(k % n));
    if (delta_left(c, c.delta[i]) != delta_right(c, c.delta[i])) coassoc.fail(v.name(i));
    if (c.coproduct(c.d().col(i)) != d_tensor(c, c.delta[i])) coder.fail(v.name(i));
  }
  Certificate cert;
  cert.checks = {dsq, hom, coassoc, coder};
  cert.flags["cocommutative"] = is_cocommutative(c);
  return cert;
}

MultiVec iterated_coproduct(const DgCoalgebra& c, const Vec& x, size_t n, bool left) {
  size_t dim = c.dim();
  MultiVec cur;
  for (const auto& [i, s] : x) cur.emplace(std::vector<size_t>{i}, s);
  for (size_t step = 0; step < n; ++step) {
    MultiVec next;
    for (const auto& [key, s] : cur) {
      size_t pos = left ? 0 : key.size() - 1;
      for (const auto& [k, t] : c.delta[key[pos]]) {
        std::vector<size_t> nk(key.begin(), key.begin() + pos);
        nk.push_back(k / dim);
        nk.push_back(k % dim);
        nk.insert(nk.end(), key.begin() + pos + 1, key.end());
        auto it = next.find(nk);
        if (it == next.end()) {
          next.emplace(std::move(nk), s * t);
        } else {
          it->second += s * t;
          if (it->second.is_zero()) next.erase(it);
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Subspace kernel_of_iterated(const DgCoalgebra& c, size_t n, bool left) {
  const Field& f = c.field();
  std::map<std::vector<size_t>, size_t> intern;
  std::vector<Vec> cols;
  for (size_t i = 0; i < c.dim(); ++i) {
    Vec col;
    for (const auto& [key, s] : iterated_coproduct(c, unit(f, i), n, left)) {
      auto it = intern.emplace(key, intern.size()).first;
      col.emplace(it->second, s);
    }
    cols.push_back(std::move(col));
  }
  return span_of(f, kernel_of(f, cols));
}

ConilpotencyResult coradical_filtration(const DgCoalgebra& c) {
  const Field& f = c.field();
  ConilpotencyResult r;
  Subspace prev(f);
  if (c.dim() == 0) {
    r.conilpotent = true;
    return r;
  }
  for (size_t n = 1; n <= c.dim() + 1; ++n) {
    Subspace cur = delta_preimage(c, prev);
    bool stalled = cur.rank() == prev.rank();
    if (!stalled || r.coradical.stages.empty()) r.coradical.stages.push_back(cur);
    if (cur.rank() == c.dim()) {
      r.conilpotent = true;
      r.nilpotency = n;
      return r;
    }
    if (stalled) break;
    prev = std::move(cur);
  }
  const auto& top = r.coradical.stages.back();
  for (size_t i = 0; i < c.dim(); ++i)
    if (!top.contains(unit(f, i))) {
      r.witness = unit(f, i);
      break;
    }
  return r;
}

bool is_atom(const DgCoalgebra& c, const Vec& x) {
  return c.d().apply(x).empty() && c.coproduct(x) == tensor_vectors(x, x, c.dim());
}

std::vector<Vec> atoms(const DgCoalgebra& c, size_t limit) {
  std::vector<size_t> support;
  try {
    enumeration_size(c.field(), c.dim(), limit);
    for (size_t i = 0; i < c.dim(); ++i) support.push_back(i);
  } catch (const Unsupported&) {
    if (c.field().is_rational()) throw;
    // Atoms are concentrated in degree 0.
    support = c.space()->in_degree(0);
  }
  std::vector<Vec> out;
  enumerate_vectors(c.field(), support, limit, [&](const Vec& v) {
    if (is_atom(c, v)) out.push_back(v);
  });
  return out;
}

bool is_subcoalgebra(const DgCoalgebra& c, const Subspace& u) {
  for (const auto& row : u.basis()) {
    if (!u.contains(c.d().apply(row))) return false;
  }
  return same_subspace(largest_subcoalgebra(c, u), u);
}

SubCoalgebra restrict_coalgebra(const DgCoalgebra& c, const Subspace& u) {
  const Field& f = c.field();
  size_t n = c.dim();
  auto basis = u.basis();
  auto piv = u.pivots();
  size_t k = basis.size();
  std::map<size_t, size_t> pos;
  for (size_t i = 0; i < k; ++i) pos.emplace(piv[i], i);
  auto sp = subspace_space(*c.space(), u);
  PivotIndex idx(u);
  std::vector<Vec> dcols, delta(k);
  for (size_t i = 0; i < k; ++i) {
    Vec db = c.d().apply(basis[i]);
    if (!u.contains(db)) throw PreconditionError("subspace is not closed under d");
    dcols.push_back(idx.coords(u, db));
    Vec dl = c.coproduct(basis[i]);
    Vec check;
    for (const auto& [t, s] : dl) {
      auto a = pos.find(t / n), b = pos.find(t % n);
      if (a == pos.end() || b == pos.end()) continue;
      delta[i].emplace(a->second * k + b->second, s);
      axpy(check, s, tensor_vectors(basis[a->second], basis[b->second], n));
    }
    if (check != dl) throw PreconditionError("subspace is not closed under the coproduct");
  }
  return {DgCoalgebra(Complex(GradedMap(f, sp, sp, -1, std::move(dcols))), std::move(delta)),
          GradedMap(f, sp, c.space(), 0, basis)};
}

bool is_coideal(const DgCoalgebra& c, const Subspace& ideal) {
  const Field& f = c.field();
  size_t n = c.dim();
  for (const auto& row : ideal.basis()) {
    if (!ideal.contains(c.d().apply(row))) return false;
    Vec q;
    for (const auto& [t, s] : c.coproduct(row)) {
      Vec a = ideal.reduce(unit(f, t / n)), b = ideal.reduce(unit(f, t % n));
      axpy(q, s, tensor_vectors(a, b, n));
    }
    if (!q.empty()) return false;
  }
  return true;
}

QuotientCoalgebra quotient_coalgebra(const DgCoalgebra& c, const Subspace& ideal) {
  if (!is_coideal(c, ideal)) throw PreconditionError("not a d-stable coideal");
  const Field& f = c.field();
  size_t n = c.dim();
  std::vector<size_t> keep;
  std::map<size_t, size_t> pos;
  for (size_t i = 0; i < n; ++i)
    if (!ideal.rows().count(i)) {
      pos.emplace(i, keep.size());
      keep.push_back(i);
    }
  size_t m = keep.size();
  auto cls = [&](const Vec& v) {
    Vec out;
    for (const auto& [i, s] : ideal.reduce(v)) out.emplace(pos.at(i), s);
    return out;
  };
  std::vector<BasisElement> b;
  for (size_t i : keep) b.push_back(c.space()->at(i));
  auto sp = make_space(std::move(b));
  std::vector<Vec> dcols, delta(m), proj;
  for (size_t k = 0; k < m; ++k) {
    dcols.push_back(cls(c.d().col(keep[k])));
    for (const auto& [t, s] : c.delta[keep[k]])
      axpy(delta[k], s, tensor_vectors(cls(unit(f, t / n)), cls(unit(f, t % n)), m));
  }
  for (size_t i = 0; i < n; ++i) proj.push_back(cls(unit(f, i)));
  return {DgCoalgebra(Complex(GradedMap(f, sp, sp, -1, std::move(dcols))), std::move(delta)),
          GradedMap(f, c.space(), sp, 0, std::move(proj))};
}

Subspace largest_subcoalgebra(const DgCoalgebra& c, const Subspace& u) {
  const Field& f = c.field();
  size_t n = c.dim();
  Subspace e = u;
  while (true) {
    auto basis = e.basis();
    std::vector<Vec> proj(n);
    for (size_t i = 0; i < n; ++i) proj[i] = e.reduce(unit(f, i));
    std::vector<Vec> cols;
    for (const auto& b : basis) {
      Vec col = e.reduce(c.d().apply(b));
      for (const auto& [t, s] : c.coproduct(b)) {
        size_t a = t / n, bb = t % n;
        for (const auto& [a2, x] : proj[a]) add_term(col, n + a2 * n + bb, s * x);
        for (const auto& [b2, x] : proj[bb]) add_term(col, n + n * n + a * n + b2, s * x);
      }
      cols.push_back(std::move(col));
    }
    Subspace next(f);
    for (const auto& k : kernel_of(f, cols)) {
      Vec v;
      for (const auto& [j, s] : k) axpy(v, s, basis[j]);
      next.insert(v);
    }
    if (next.rank() == e.rank()) return e;
    e = std::move(next);
  }
}

Subspace subcoalgebra_generated(const DgCoalgebra& c, const std::vector<Vec>& gens) {
  const Field& f = c.field();
  size_t n = c.dim();
  Subspace s(f);
  std::vector<Vec> work;
  for (const auto& g : gens)
    if (s.insert(g)) work.push_back(g);
  while (!work.empty()) {
    Vec v = std::move(work.back());
    work.pop_back();
    std::map<size_t, Vec> left, right;
    for (const auto& [t, x] : c.coproduct(v)) {
      add_term(left[t % n], t / n, x);
      add_term(right[t / n], t % n, x);
    }
    std::vector<Vec> next{c.d().apply(v)};
    for (auto& [k, w] : left) next.push_back(std::move(w));
    for (auto& [k, w] : right) next.push_back(std::move(w));
    for (auto& x : next)
      if (!x.empty() && s.insert(x)) work.push_back(std::move(x));
  }
  return s;
}

SubCoalgebra conilpotent_radical(const DgCoalgebra& c) {
  auto r = coradical_filtration(c);
  Subspace top = r.coradical.stages.empty() ? Subspace(c.field()) : r.coradical.stages.back();
  return restrict_coalgebra(c, largest_subcoalgebra(c, top));
}

DgCoalgebra tensor_coalgebra(const DgCoalgebra& c, const DgCoalgebra& d) {
  const Field& f = c.field();
  Complex cx = tensor(c.cx, d.cx);
  size_t nc = c.dim(), nd = d.dim(), total = nc * nd;
  const auto& vc = *c.space();
  const auto& vd = *d.space();
  std::vector<Vec> delta(total);
  for (size_t x = 0; x < nc; ++x)
    for (size_t y = 0; y < nd; ++y) {
      Vec& out = delta[x * nd + y];
      for (const auto& [s, a] : c.delta[x])
        for (const auto& [t, b] : d.delta[y]) {
          size_t c1 = s / nc, c2 = s % nc, d1 = t / nd, d2 = t % nd;
          Scalar sg = sign(f, static_cast<long long>(vc.degree(c2)) * vd.degree(d1));
          add_term(out, (c1 * nd + d1) * total + (c2 * nd + d2), sg * a * b);
        }
    }
  return DgCoalgebra(cx, std::move(delta));
}

SumCoalgebra direct_sum_coalgebra(const DgCoalgebra& a, const DgCoalgebra& b) {
  const Field& f = a.field();
  Complex cx = direct_sum(a.cx, b.cx);
  size_t n = a.dim(), m = b.dim(), total = n + m;
  std::vector<Vec> delta(total);
  for (size_t i = 0; i < n; ++i)
    for (const auto& [t, s] : a.delta[i]) delta[i].emplace((t / n) * total + t % n, s);
  for (size_t j = 0; j < m; ++j)
    for (const auto& [t, s] : b.delta[j]) delta[n + j].emplace((n + t / m) * total + n + t % m, s);
  std::vector<Vec> i1(n), i2(m);
  for (size_t i = 0; i < n; ++i) i1[i] = unit(f, i);
  for (size_t j = 0; j < m; ++j) i2[j] = unit(f, n + j);
  auto sp = cx.space();
  return {DgCoalgebra(cx, std::move(delta)), GradedMap(f, a.space(), sp, 0, std::move(i1)),
          GradedMap(f, b.space(), sp, 0, std::move(i2))};
}

PushoutCoalgebra coalgebra_pushout(const GradedMap& i, const DgCoalgebra& c1, const GradedMap& j,
                                   const DgCoalgebra& c2) {
  if (!same_space(i.source(), j.source())) throw PreconditionError("pushout needs a common source");
  const Field& f = c1.field();
  auto sum = direct_sum_coalgebra(c1, c2);
  Subspace rel(f);
  for (size_t k = 0; k < i.source()->dim(); ++k)
    rel.insert(sub(sum.i1.apply(i.col(k)), sum.i2.apply(j.col(k))));
  auto q = quotient_coalgebra(sum.coalgebra, rel);
  return {q.coalgebra, q.projection.compose(sum.i1), q.projection.compose(sum.i2)};
}

Certificate validate_coalg_morphism(const GradedMap& m, const DgCoalgebra& c, const DgCoalgebra& d) {
  CheckResult deg{"degree", m.degree() == 0, {}}, chain{"chain_map", true, {}}, comult{"comultiplicative", true, {}};
  const auto& v = *c.space();
  for (size_t i = 0; i < c.dim(); ++i) {
    if (d.d().apply(m.col(i)) != m.apply(c.d().col(i))) chain.fail(v.name(i));
    if (d.coproduct(m.col(i)) != tensor_apply(m, m, c.delta[i])) comult.fail(v.name(i));
  }
  Certificate cert;
  cert.checks = {deg, chain, comult};
  return cert;
}

Certificate check_admissible(const DgCoalgebra& c, const Filtration& filt) {
  const Field& f = c.field();
  size_t n = c.dim();
  CheckResult inc{"increasing", is_increasing(filt), {}}, dst{"d_stable", true, {}}, split{"delta_split", true, {}},
      exh{"exhaustive", is_exhaustive(c.cx, filt), {}};
  for (size_t k = 1; k <= filt.length(); ++k) {
    const auto& fk = filt.stages[k - 1];
    Subspace target(f);
    for (size_t i = 1; i < k; ++i)
      for (const auto& a : filt.stage(f, k - i).basis())
        for (const auto& b : filt.stage(f, i).basis()) target.insert(tensor_vectors(a, b, n));
    for (const auto& row : fk.basis()) {
      if (!fk.contains(c.d().apply(row))) dst.fail("stage " + std::to_string(k));
      if (!target.contains(c.coproduct(row))) split.fail("stage " + std::to_string(k));
    }
  }
  Certificate cert;
  cert.checks = {inc, dst, split, exh};
  return cert;
}

CoalgMorphismClass classify_coalg_morphism(const GradedMap& m, const DgCoalgebra& c, const DgCoalgebra& d,
                                           const std::optional<Filtration>& fc, const std::optional<Filtration>& fd) {
  CoalgMorphismClass out;
  out.cofibration = is_injective(m);
  auto pick = [&](const DgCoalgebra& x, const std::optional<Filtration>& given) -> std::optional<Filtration> {
    if (given) {
      auto cert = check_admissible(x, *given);
      for (const auto& ch : cert.checks)
        if (!ch.passed)
          throw PreconditionError("inadmissible filtration: " + ch.name +
                                  (ch.witnesses.empty() ? "" : " at " + ch.witnesses.front()));
      return given;
    }
    auto r = coradical_filtration(x);
    if (!r.conilpotent) return std::nullopt;
    return r.coradical;
  };
  auto a = pick(c, fc), b = pick(d, fd);
  if (!a || !b) {
    out.reason = "no admissible filtration available";
    return out;
  }
  out.verdict = is_filtered_quasi_iso(m, c.cx, *a, d.cx, *b);
  out.filtered_weq = out.verdict->compatible && out.verdict->filtered_quasi_iso;
  if (!out.filtered_weq) out.reason = out.verdict->reason;
  return out;
}

}  // namespace kdual
