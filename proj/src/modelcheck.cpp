#include "kdual/modelcheck.hpp"

#include <random>

#include "kdual/cofree.hpp"

namespace kdual {

namespace {

void require_injective_coalgebra_map(const GradedMap& m, const DgCoalgebra& c, const DgCoalgebra& d, const char* what) {
  if (!is_injective(m)) throw PreconditionError(std::string(what) + " is not injective");
  if (!validate_coalg_morphism(m, c, d).passed())
    throw PreconditionError(std::string(what) + " is not a coalgebra map");
}

}  // namespace

LiftingProblemReport pushout_product(const GradedMap& i, const DgCoalgebra& c, const DgCoalgebra& cp,
                                     const GradedMap& j, const DgCoalgebra& d, const DgCoalgebra& dp) {
  require_injective_coalgebra_map(i, c, cp, "i");
  require_injective_coalgebra_map(j, d, dp, "j");
  const Field& f = c.field();
  DgCoalgebra cd = tensor_coalgebra(c, d);
  DgCoalgebra cpd = tensor_coalgebra(cp, d);
  DgCoalgebra cdp = tensor_coalgebra(c, dp);
  DgCoalgebra tgt = tensor_coalgebra(cp, dp);
  auto po = coalgebra_pushout(tensor_maps(i, identity_map(f, d.space())), cpd,
                              tensor_maps(identity_map(f, c.space()), j), cdp);
  GradedMap legs = hstack(po.j1, po.j2);
  GradedMap images = hstack(tensor_maps(identity_map(f, cp.space()), j), tensor_maps(i, identity_map(f, dp.space())));
  std::vector<Vec> cols;
  for (size_t k = 0; k < po.coalgebra.dim(); ++k) {
    auto pre = solve_with(f, legs.cols(), unit(f, k));
    if (!pre) throw Error("pushout legs are not jointly surjective");
    cols.push_back(images.apply(*pre));
  }
  LiftingProblemReport r{"pushout_product", cd.dim(), po.coalgebra.dim(), tgt.dim(),
                         GradedMap(f, po.coalgebra.space(), tgt.space(), 0, std::move(cols))};
  r.injective = is_injective(r.map);
  r.surjective = is_surjective(r.map);
  r.corank = tgt.dim() - r.map.rank();
  if (!validate_coalg_morphism(r.map, po.coalgebra, tgt).passed()) r.reason = "induced map is not a coalgebra map";
  r.weq = is_quasi_iso(r.map, po.coalgebra.cx, tgt.cx, full_window(po.coalgebra.cx, tgt.cx));
  auto cls = classify_coalg_morphism(r.map, po.coalgebra, tgt);
  r.filtered_weq = cls.filtered_weq;
  if (r.reason.empty() && !cls.filtered_weq) r.reason = cls.reason;
  return r;
}

FqiReport tensor_preserves_fqi(const GradedMap& f, const DgCoalgebra& c, const Filtration& fc, const DgCoalgebra& d,
                               const Filtration& fd, const DgCoalgebra& e) {
  if (!check_admissible(c, fc).passed()) throw PreconditionError("inadmissible source filtration");
  if (!check_admissible(d, fd).passed()) throw PreconditionError("inadmissible target filtration");
  DgCoalgebra ce = tensor_coalgebra(c, e);
  DgCoalgebra de = tensor_coalgebra(d, e);
  Filtration fce = filtration_tensor(fc, c.dim(), e.dim());
  Filtration fde = filtration_tensor(fd, d.dim(), e.dim());
  FqiReport r;
  r.source_admissible = check_admissible(ce, fce).passed();
  r.target_admissible = check_admissible(de, fde).passed();
  r.verdict = is_filtered_quasi_iso(tensor_maps(f, identity_map(f.field(), e.space())), ce.cx, fce, de.cx, fde);
  return r;
}

LiftingProblemReport pullback_product(const GradedMap& i, const DgCoalgebra& c, const DgCoalgebra& cp,
                                      const GradedMap& j, const DgAlgebra& a, const DgAlgebra& ap) {
  auto p = pullback_product_map(i, c, cp, j, a, ap);
  LiftingProblemReport r{"pullback_product", p.source.algebra.dim(), p.pullback.algebra.dim(),
                         p.pullback.algebra.dim(), p.map};
  r.injective = is_injective(p.map);
  r.surjective = p.surjective;
  r.corank = r.target_dim - p.map.rank();
  r.weq = p.weak_equivalence;
  if (!validate_alg_morphism(p.map, p.source.algebra, p.pullback.algebra).passed())
    r.reason = "induced map is not an algebra map";
  return r;
}

DgCoalgebra acyclic_coalgebra(const Field& f, int n) {
  auto v = make_space({{"u", n}, {"w", n - 1}});
  GradedMap d(f, v, v, -1, {unit(f, 1), {}});
  return DgCoalgebra(Complex(d));
}

DgAlgebra acyclic_algebra(const Field& f, int n) {
  auto v = make_space({{"u", n}, {"w", n - 1}});
  GradedMap d(f, v, v, -1, {unit(f, 1), {}});
  return DgAlgebra(Complex(d));
}

namespace {

class Sampler {
 public:
  Sampler(const Field& f, uint64_t seed, const CorpusSizes& s) : f_(f), rng_(seed), sizes_(s) {}

  int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return range(0, 1) == 1; }

  Scalar scalar() {
    if (f_.is_rational()) {
      int v = range(1, 2);
      return f_.from_int(coin() ? v : -v);
    }
    return f_.from_int(range(1, static_cast<int>(f_.characteristic()) - 1));
  }

  // Combination of one or two basis vectors of a common degree.
  Vec homogeneous(const GradedSpace& v) {
    Vec out;
    if (v.dim() == 0) return out;
    size_t first = static_cast<size_t>(range(0, static_cast<int>(v.dim()) - 1));
    const auto& same = v.in_degree(v.degree(first));
    add_term(out, first, scalar());
    if (same.size() > 1 && coin()) add_term(out, same[static_cast<size_t>(range(0, int(same.size()) - 1))], scalar());
    return out;
  }

  SpacePtr letters(int lo, int hi, bool paired) {
    int n = range(1, 2);
    std::vector<BasisElement> b;
    int d0 = range(lo, hi);
    b.push_back({"l0", d0});
    if (n == 2) b.push_back({"l1", paired ? d0 - 1 : range(lo, hi)});
    return make_space(b);
  }

  std::optional<DgCoalgebra> coalgebra(bool cocommutative) {
    bool paired = coin();
    auto v = letters(-1, 3, paired);
    int cap = range(1, sizes_.nilpotency);
    CoderivationComponents q;
    if (paired && v->dim() == 2)
      q = [this](const std::vector<size_t>& w) -> Vec {
        return w.size() == 1 && w[0] == 0 ? unit(f_, 1) : Vec{};
      };
    DgCoalgebra amb = cocommutative ? cofree_cocommutative(f_, v, cap, q).sub.coalgebra
                                    : cofree_tensor(f_, v, cap, q).coalgebra;
    std::vector<Vec> gens;
    for (int k = range(1, 2); k > 0; --k) gens.push_back(homogeneous(*amb.space()));
    Subspace u = subcoalgebra_generated(amb, gens);
    if (u.rank() == 0 || u.rank() > sizes_.max_dim) return std::nullopt;
    DgCoalgebra c = restrict_coalgebra(amb, u).coalgebra;
    if (!validate_coalgebra(c).passed()) return std::nullopt;
    auto conil = coradical_filtration(c);
    if (!conil.conilpotent || conil.nilpotency > static_cast<size_t>(sizes_.nilpotency)) return std::nullopt;
    if (cocommutative && !is_cocommutative(c)) return std::nullopt;
    return c;
  }

  std::optional<FreeDgAlgebra> free_algebra() {
    int cap = range(2, 3);
    if (range(0, 3) == 0) return mc_algebra(f_, cap);
    auto v = letters(-2, 2, false);
    std::vector<Vec> gd(v->dim());
    WordIndex words(v->dim(), cap);
    for (size_t k = 1; k < v->dim(); ++k) {
      if (!gd[0].empty() || !coin()) continue;
      for (size_t w = 0; w < words.size(); ++w) {
        auto word = words.word(w);
        if (word.size() > 2) continue;
        bool cycles = true;
        int deg = 0;
        for (size_t l : word) {
          cycles = cycles && l < k && gd[l].empty();
          deg += v->degree(l);
        }
        if (cycles && deg == v->degree(k) - 1 && coin()) add_term(gd[k], w, scalar());
      }
    }
    try {
      return FreeDgAlgebra(f_, v, gd, cap);
    } catch (const PreconditionError&) {
      return std::nullopt;
    }
  }

  std::optional<DgAlgebra> algebra() {
    bool paired = coin();
    auto v = letters(-2, 3, paired);
    std::vector<Vec> gd(v->dim());
    if (paired && v->dim() == 2) gd[0] = unit(f_, 1);
    FreeDgAlgebra t(f_, v, gd, range(1, 3));
    // Truncated words are an honest quotient, so every degree is exact.
    DgAlgebra a = t.algebra();
    a.cx.set_exact({});
    std::vector<Vec> rel;
    for (int k = range(0, 2); k > 0; --k) rel.push_back(homogeneous(*a.space()));
    DgAlgebra q = rel.empty() ? a : quotient_algebra(a, ideal_generated(a, rel)).algebra;
    if (q.dim() == 0 || q.dim() > sizes_.max_dim) return std::nullopt;
    if (!validate_algebra(q).passed()) return std::nullopt;
    return q;
  }

  template <class T, class Gen>
  void fill(std::vector<T>& out, size_t n, size_t& rejected, Gen gen) {
    size_t budget = sizes_.retries + n * 20;
    while (out.size() < n) {
      if (budget-- == 0) throw Error("random corpus: retries exhausted");
      auto x = gen();
      if (x)
        out.push_back(std::move(*x));
      else
        ++rejected;
    }
  }

  const Field& field() const { return f_; }

 private:
  Field f_;
  std::mt19937_64 rng_;
  CorpusSizes sizes_;
};

}  // namespace

RandomCorpus random_corpus(const Field& f, uint64_t seed, const CorpusSizes& sizes) {
  Sampler s(f, seed, sizes);
  RandomCorpus r;
  s.fill(r.coalgebras, sizes.coalgebras, r.rejected, [&] { return s.coalgebra(false); });
  if (f.is_rational() || f.characteristic() > static_cast<uint32_t>(sizes.nilpotency))
    s.fill(r.cocommutative, sizes.cocommutative, r.rejected, [&] { return s.coalgebra(true); });
  s.fill(r.algebras, sizes.algebras, r.rejected, [&] { return s.algebra(); });
  if (f.characteristic() != 2)
    s.fill(r.lie_algebras, sizes.lie_algebras, r.rejected, [&]() -> std::optional<DgLieAlgebra> {
      auto a = s.algebra();
      if (!a) return std::nullopt;
      DgLieAlgebra g = commutator_lie(*a);
      if (!validate_lie(g).passed()) return std::nullopt;
      return g;
    });
  s.fill(r.free_algebras, sizes.free_algebras, r.rejected, [&] { return s.free_algebra(); });

  s.fill(r.injections, sizes.injections, r.rejected, [&]() -> std::optional<CoalgebraInjection> {
    auto cp = s.coalgebra(false);
    if (!cp) return std::nullopt;
    std::optional<CoalgebraInjection> out;
    if (s.coin()) {
      auto e = s.coalgebra(false);
      if (!e) return std::nullopt;
      auto sum = direct_sum_coalgebra(*cp, *e);
      out.emplace(CoalgebraInjection{sum.i1, *cp, sum.coalgebra});
    } else {
      Subspace u = subcoalgebra_generated(*cp, {s.homogeneous(*cp->space())});
      auto sub = restrict_coalgebra(*cp, u);
      out.emplace(CoalgebraInjection{sub.inclusion, sub.coalgebra, *cp});
    }
    if (!is_injective(out->map) || !validate_coalg_morphism(out->map, out->source, out->target).passed())
      return std::nullopt;
    return out;
  });

  s.fill(r.surjections, sizes.surjections, r.rejected, [&]() -> std::optional<AlgebraSurjection> {
    auto a = s.algebra();
    if (!a) return std::nullopt;
    std::optional<AlgebraSurjection> out;
    if (s.coin()) {
      auto b = s.algebra();
      if (!b) return std::nullopt;
      auto p = product_algebra(*a, *b);
      out.emplace(AlgebraSurjection{p.p1, p.algebra, *a});
    } else {
      auto q = quotient_algebra(*a, ideal_generated(*a, {s.homogeneous(*a->space())}));
      out.emplace(AlgebraSurjection{q.projection, *a, q.algebra});
    }
    if (!is_surjective(out->map) || !validate_alg_morphism(out->map, out->source, out->target).passed())
      return std::nullopt;
    return out;
  });

  s.fill(r.quasi_isos, sizes.quasi_isos, r.rejected, [&]() -> std::optional<AlgebraQuasiIso> {
    auto a = s.algebra();
    if (!a) return std::nullopt;
    auto p = product_algebra(*a, acyclic_algebra(f, s.range(-1, 3)));
    std::optional<AlgebraQuasiIso> out;
    if (s.coin())
      out.emplace(AlgebraQuasiIso{p.i1, *a, p.algebra});
    else
      out.emplace(AlgebraQuasiIso{p.p1, p.algebra, *a});
    if (!validate_alg_morphism(out->map, out->source, out->target).passed()) return std::nullopt;
    auto v = is_quasi_iso(out->map, out->source.cx, out->target.cx, full_window(out->source.cx, out->target.cx));
    if (!v.quasi_iso) return std::nullopt;
    return out;
  });

  s.fill(r.filtered_weqs, sizes.filtered_weqs, r.rejected, [&]() -> std::optional<FilteredWeq> {
    auto c = s.coalgebra(false);
    if (!c) return std::nullopt;
    auto sum = direct_sum_coalgebra(*c, acyclic_coalgebra(f, s.range(0, 3)));
    auto fc = coradical_filtration(*c).coradical;
    auto fs = coradical_filtration(sum.coalgebra).coradical;
    if (!is_filtered_quasi_iso(sum.i1, c->cx, fc, sum.coalgebra.cx, fs).filtered_quasi_iso) return std::nullopt;
    return FilteredWeq{sum.i1, *c, sum.coalgebra, fc, fs};
  });
  return r;
}

}  // namespace kdual
