#include "kdual/barcobar.hpp"

#include <algorithm>

#include "kdual/errors.hpp"
#include "kdual/homology.hpp"

namespace kdual {

namespace {

DegreeRange shifted(DegreeRange r, int k) {
  if (r.empty()) return r;
  int lo = r.lo == INT_MIN ? INT_MIN : clamp_degree(static_cast<long long>(r.lo) + k);
  int hi = r.hi == INT_MAX ? INT_MAX : clamp_degree(static_cast<long long>(r.hi) + k);
  return {lo, hi};
}

void require_d_squared(const Complex& cx, const char* what) {
  if (!cx.d_squared_zero()) throw Error(std::string(what) + " differential does not square to zero");
}

GradedMap identity_into(const Field& f, const SpacePtr& v) { return identity_map(f, v); }

std::vector<Vec> cobar_generator_differential(const DgCoalgebra& c, const WordIndex& words) {
  const Field& f = c.field();
  size_t n = c.dim();
  const auto& v = *c.space();
  std::vector<Vec> out(n);
  for (size_t x = 0; x < n; ++x) {
    for (const auto& [y, s] : c.d().col(x)) add_term(out[x], y, -s);
    if (words.cap() < 2) continue;
    for (const auto& [t, s] : c.delta[x]) {
      size_t c1 = t / n, c2 = t % n;
      add_term(out[x], words.index({c1, c2}), -(s * sign(f, v.degree(c1))));
    }
  }
  return out;
}

void require_conilpotent(const DgCoalgebra& c) {
  if (!coradical_filtration(c).conilpotent) throw PreconditionError("cobar needs a conilpotent coalgebra");
}

std::vector<size_t> map_support(const GradedSpace& src, const GradedSpace& tgt, int degree) {
  std::vector<size_t> out;
  for (size_t i = 0; i < src.dim(); ++i)
    for (size_t j : tgt.in_degree(src.degree(i) + degree)) out.push_back(i * tgt.dim() + j);
  return out;
}

GradedMap map_from_vector(const Field& f, const SpacePtr& src, const SpacePtr& tgt, int degree, const Vec& v) {
  std::vector<Vec> cols(src->dim());
  for (const auto& [k, s] : v) cols[k / tgt->dim()].emplace(k % tgt->dim(), s);
  return GradedMap(f, src, tgt, degree, std::move(cols));
}

size_t nilpotency_cap(const DgCoalgebra& c) {
  auto r = coradical_filtration(c);
  if (!r.conilpotent) throw PreconditionError("coalgebra is not conilpotent");
  return std::max<size_t>(r.nilpotency, 1);
}

}  // namespace

GradedMap BarCoalgebra::corestrict(const GradedMap& into_ambient) const {
  if (!sym) return GradedMap(into_ambient.field(), into_ambient.source(), coalgebra.space(), into_ambient.degree(),
                             into_ambient.cols());
  PivotIndex idx(*sym);
  std::vector<Vec> cols;
  for (const auto& c : into_ambient.cols()) {
    if (!sym->contains(c)) throw PreconditionError("map leaves the symmetric tensors");
    cols.push_back(idx.coords(*sym, c));
  }
  return GradedMap(into_ambient.field(), into_ambient.source(), coalgebra.space(), into_ambient.degree(),
                   std::move(cols));
}

BarCoalgebra bar(const DgAlgebra& a, int cap) {
  const Field& f = a.field();
  const auto& va = *a.space();
  auto letters = shift_space(a.space(), 1);
  CoderivationComponents q = [&](const std::vector<size_t>& w) -> Vec {
    if (w.size() == 1) return negated(a.d().col(w[0]));
    if (w.size() == 2) return scaled(a.mul_basis(w[0], w[1]), sign(f, va.degree(w[0])));
    return {};
  };
  auto cf = cofree_tensor(f, letters, cap, q, shifted(a.cx.exact(), 1));
  require_d_squared(cf.coalgebra.cx, "bar");
  DgCoalgebra co = cf.coalgebra;
  GradedMap incl = identity_into(f, co.space());
  return {std::move(cf), std::move(co), std::nullopt, std::move(incl)};
}

BarCoalgebra bar_lie(const DgLieAlgebra& g, int cap) {
  const Field& f = g.field();
  require_char_above(f, std::max(2, cap), "the Lie bar construction");
  const auto& vg = *g.space();
  auto letters = shift_space(g.space(), 1);
  Scalar half = f.from_int(2).inverse();
  CoderivationComponents q = [&](const std::vector<size_t>& w) -> Vec {
    if (w.size() == 1) return negated(g.d().col(w[0]));
    if (w.size() == 2) return scaled(g.bracket_basis(w[0], w[1]), half * sign(f, vg.degree(w[0])));
    return {};
  };
  auto sc = cofree_cocommutative(f, letters, cap, q, shifted(g.cx.exact(), 1));
  require_d_squared(sc.sub.coalgebra.cx, "Lie bar");
  return {std::move(sc.ambient), std::move(sc.sub.coalgebra), std::move(sc.sym), std::move(sc.sub.inclusion)};
}

FreeDgAlgebra cobar(const DgCoalgebra& c, int cap) {
  require_conilpotent(c);
  WordIndex words(c.dim(), cap);
  auto gens = shift_space(c.space(), -1);
  return FreeDgAlgebra(c.field(), gens, cobar_generator_differential(c, words), cap, shifted(c.cx.exact(), -1));
}

FreeLie cobar_lie(const DgCoalgebra& c, int cap) {
  require_conilpotent(c);
  if (!is_cocommutative(c)) throw PreconditionError("the Lie cobar construction needs a cocommutative coalgebra");
  WordIndex words(c.dim(), cap);
  auto gens = shift_space(c.space(), -1);
  return FreeLie(c.field(), gens, cobar_generator_differential(c, words), cap, shifted(c.cx.exact(), -1));
}

GradedMap bar_map(const GradedMap& phi, const BarCoalgebra& source, const BarCoalgebra& target) {
  if (phi.degree() != 0) throw DegreeError("algebra maps have degree 0");
  const Field& f = phi.field();
  const auto& sw = source.cofree.words;
  const auto& tw = target.cofree.words;
  if (tw.cap() < sw.cap()) throw InsufficientTruncation("target bar construction has a smaller cap");
  std::vector<Vec> cols(sw.size());
  for (size_t idx = 0; idx < sw.size(); ++idx) {
    std::vector<std::pair<std::vector<size_t>, Scalar>> acc{{{}, f.one()}};
    for (size_t l : sw.word(idx)) {
      std::vector<std::pair<std::vector<size_t>, Scalar>> next;
      for (const auto& [w, a] : acc)
        for (const auto& [m, b] : phi.col(l)) {
          auto nw = w;
          nw.push_back(m);
          next.push_back({std::move(nw), a * b});
        }
      acc = std::move(next);
    }
    for (const auto& [w, a] : acc) add_term(cols[idx], tw.index(w), a);
  }
  return GradedMap(f, source.cofree.coalgebra.space(), target.cofree.coalgebra.space(), 0, std::move(cols));
}

GradedMap alg_map_from_twisting(const FreeDgAlgebra& omega, const DgAlgebra& a, const GradedMap& tau) {
  return extend_from_generators(omega, a, tau.cols());
}

GradedMap twisting_from_alg_map(const FreeDgAlgebra& omega, const SpacePtr& c, const GradedMap& f) {
  return GradedMap(f.field(), c, f.target(), -1, restrict_to_generators(omega, f));
}

GradedMap coalg_map_from_twisting(const DgCoalgebra& c, const BarCoalgebra& b, const GradedMap& tau) {
  GradedMap phi(tau.field(), c.space(), b.cofree.letters, 0, tau.cols());
  return b.corestrict(cofree_lift(c, phi, b.cofree));
}

GradedMap twisting_from_coalg_map(const BarCoalgebra& b, const SpacePtr& a, const GradedMap& g) {
  GradedMap w1 = corestrict_weight_one(b.inclusion.compose(g), b.cofree);
  return GradedMap(g.field(), g.source(), a, -1, w1.cols());
}

GradedMap lie_map_from_twisting(const FreeLie& omega, const DgLieAlgebra& g, const GradedMap& tau) {
  return extend_lie_from_generators(omega, g, tau.cols());
}

GradedMap twisting_from_lie_map(const FreeLie& omega, const SpacePtr& c, const GradedMap& f) {
  std::vector<Vec> cols;
  for (size_t k = 0; k < omega.generators()->dim(); ++k) cols.push_back(f.col(k));
  return GradedMap(f.field(), c, f.target(), -1, std::move(cols));
}

std::vector<GradedMap> coalgebra_maps_to_bar(const DgCoalgebra& c, const BarCoalgebra& b, size_t brute_limit,
                                             size_t limit) {
  const Field& f = c.field();
  std::vector<GradedMap> out;
  auto brute = map_support(*c.space(), *b.coalgebra.space(), 0);
  bool small = true;
  try {
    enumeration_size(f, brute.size(), brute_limit);
  } catch (const Unsupported&) {
    small = false;
  }
  if (small) {
    enumerate_vectors(f, brute, brute_limit, [&](const Vec& v) {
      auto m = map_from_vector(f, c.space(), b.coalgebra.space(), 0, v);
      if (validate_coalg_morphism(m, c, b.coalgebra).passed()) out.push_back(std::move(m));
    });
    return out;
  }
  auto letters = map_support(*c.space(), *b.cofree.letters, 0);
  enumerate_vectors(f, letters, limit, [&](const Vec& v) {
    auto phi = map_from_vector(f, c.space(), b.cofree.letters, 0, v);
    GradedMap lift = cofree_lift(c, phi, b.cofree);
    if (b.sym) {
      for (const auto& col : lift.cols())
        if (!b.sym->contains(col)) return;
    }
    auto m = b.corestrict(lift);
    if (validate_coalg_morphism(m, c, b.coalgebra).passed()) out.push_back(std::move(m));
  });
  return out;
}

AdjunctionReport adjunction_report(const DgCoalgebra& c, const DgAlgebra& a, size_t limit) {
  const Field& f = c.field();
  int n = static_cast<int>(nilpotency_cap(c));
  AdjunctionReport r;
  r.cap = n;
  FreeDgAlgebra omega = cobar(c, std::max(n, 2));
  BarCoalgebra b = bar(a, n);
  ConvolutionAlgebra conv = convolution_algebra(c, a);

  auto alg = enumerate_free_morphisms(omega, a, limit);
  auto tw = twisting_cochains(conv, limit);
  auto co = coalgebra_maps_to_bar(c, b, 1u << 16, limit);
  r.alg_maps = alg.size();
  r.twisting = tw.size();
  r.coalg_maps = co.size();

  enumerate_vectors(f, map_support(*c.space(), *a.space(), -1), limit, [&](const Vec& v) {
    auto tau = map_from_vector(f, c.space(), a.space(), -1, v);
    bool mc = is_twisting_cochain(conv, tau);
    bool fchain = generator_chain_condition(omega, a, tau.cols());
    bool gchain = validate_coalg_morphism(coalg_map_from_twisting(c, b, tau), c, b.coalgebra).passed();
    if (mc != fchain || mc != gchain) r.equivalence = false;
  });

  auto& t1 = r.round_trips.add("twisting_to_alg_to_twisting");
  auto& t2 = r.round_trips.add("twisting_to_coalg_to_twisting");
  for (const auto& tau : tw) {
    auto name = std::to_string(&tau - tw.data());
    if (!(twisting_from_alg_map(omega, c.space(), alg_map_from_twisting(omega, a, tau)) == tau)) t1.fail(name);
    if (!(twisting_from_coalg_map(b, a.space(), coalg_map_from_twisting(c, b, tau)) == tau)) t2.fail(name);
  }
  auto& t3 = r.round_trips.add("alg_to_twisting_to_alg");
  auto& t4 = r.round_trips.add("alg_to_coalg_to_alg");
  for (const auto& images : alg) {
    auto name = std::to_string(&images - alg.data());
    GradedMap m = extend_from_generators(omega, a, images);
    GradedMap tau = twisting_from_alg_map(omega, c.space(), m);
    if (!(alg_map_from_twisting(omega, a, tau) == m)) t3.fail(name);
    GradedMap g = coalg_map_from_twisting(c, b, tau);
    GradedMap back = alg_map_from_twisting(omega, a, twisting_from_coalg_map(b, a.space(), g));
    if (!(back == m)) t4.fail(name);
  }
  auto& t5 = r.round_trips.add("coalg_to_twisting_to_coalg");
  auto& t6 = r.round_trips.add("coalg_to_alg_to_coalg");
  for (const auto& g : co) {
    auto name = std::to_string(&g - co.data());
    GradedMap tau = twisting_from_coalg_map(b, a.space(), g);
    if (!(coalg_map_from_twisting(c, b, tau) == g)) t5.fail(name);
    GradedMap m = alg_map_from_twisting(omega, a, tau);
    GradedMap back = coalg_map_from_twisting(c, b, twisting_from_alg_map(omega, c.space(), m));
    if (!(back == g)) t6.fail(name);
  }
  return r;
}

LieAdjunctionReport lie_adjunction_check(const DgCoalgebra& c, const DgLieAlgebra& g,
                                         const std::vector<GradedMap>& cochains) {
  int n = static_cast<int>(nilpotency_cap(c));
  FreeLie omega = cobar_lie(c, std::max(n, 2));
  BarCoalgebra b = bar_lie(g, n);
  ConvolutionLie conv = convolution_lie(c, g);
  LieAdjunctionReport r;
  auto& t1 = r.round_trips.add("twisting_to_lie_to_twisting");
  auto& t2 = r.round_trips.add("twisting_to_coalg_to_twisting");
  auto& t3 = r.round_trips.add("lie_to_coalg_to_lie");
  auto& t4 = r.round_trips.add("coalg_to_lie_to_coalg");
  for (size_t k = 0; k < cochains.size(); ++k) {
    const auto& tau = cochains[k];
    auto name = std::to_string(k);
    bool mc = is_lie_twisting_cochain(conv, tau);
    bool fchain = lie_generator_chain_condition(omega, g, tau.cols());
    GradedMap gt = coalg_map_from_twisting(c, b, tau);
    bool gchain = validate_coalg_morphism(gt, c, b.coalgebra).passed();
    if (mc != fchain || mc != gchain) r.equivalence = false;
    GradedMap m = lie_map_from_twisting(omega, g, tau);
    if (!(twisting_from_lie_map(omega, c.space(), m) == tau)) t1.fail(name);
    if (!(twisting_from_coalg_map(b, g.space(), gt) == tau)) t2.fail(name);
    GradedMap m2 = lie_map_from_twisting(omega, g, twisting_from_coalg_map(b, g.space(), gt));
    if (!(m2 == m)) t3.fail(name);
    GradedMap g2 = coalg_map_from_twisting(c, b, twisting_from_lie_map(omega, c.space(), m));
    if (!(g2 == gt)) t4.fail(name);
  }
  return r;
}

GradedMap universal_twisting(const BarCoalgebra& b, const SpacePtr& a) {
  GradedMap w1 = corestrict_weight_one(b.inclusion, b.cofree);
  return GradedMap(w1.field(), b.coalgebra.space(), a, -1, w1.cols());
}

bool concentrated_from(const GradedSpace& v, int degree) {
  auto lo = v.min_degree();
  return !lo || *lo >= degree;
}

DualityMap counit(const DgAlgebra& a, int bar_cap, int cobar_cap, DegreeRange window, bool approximate) {
  bool gate = concentrated_from(*a.space(), 2);
  if (!gate && !approximate)
    throw PreconditionError("counit verification needs an algebra concentrated in degrees >= 2");
  BarCoalgebra b = bar(a, bar_cap);
  FreeDgAlgebra omega = cobar(b.coalgebra, cobar_cap);
  GradedMap m = alg_map_from_twisting(omega, a, universal_twisting(b, a.space()));
  auto v = is_quasi_iso(m, omega.complex(), a.cx, window, approximate);
  return {std::move(m), omega.complex(), a.cx, std::move(v), !gate};
}

DualityMap unit(const DgCoalgebra& c, int cobar_cap, int bar_cap, DegreeRange window, bool approximate) {
  bool gate = concentrated_from(*c.space(), 2);
  if (!gate && !approximate)
    throw PreconditionError("unit verification needs a coalgebra concentrated in degrees >= 2");
  FreeDgAlgebra omega = cobar(c, cobar_cap);
  DgAlgebra oa = omega.algebra();
  BarCoalgebra b = bar(oa, bar_cap);
  const Field& f = c.field();
  std::vector<Vec> iota;
  for (size_t k = 0; k < c.dim(); ++k) iota.push_back(unit(f, k));
  GradedMap g = coalg_map_from_twisting(c, b, GradedMap(f, c.space(), oa.space(), -1, std::move(iota)));
  auto v = is_quasi_iso(g, c.cx, b.coalgebra.cx, window, approximate);
  return {std::move(g), c.cx, b.coalgebra.cx, std::move(v), !gate};
}

namespace {

std::string dims_string(const std::map<int, size_t>& h) {
  std::string s;
  for (const auto& [n, d] : h) {
    if (d == 0) continue;
    if (!s.empty()) s += ",";
    s += std::to_string(n) + ":" + std::to_string(d);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

DualityReport verify_duality(const std::vector<NamedCoalgebra>& coalgebras, const std::vector<NamedAlgebra>& algebras,
                             int bar_cap, int cobar_cap, DegreeRange window, DegreeRange unit_window) {
  DualityReport rep;
  for (const auto& c : coalgebras)
    for (const auto& a : algebras) {
      DualityItem it;
      it.name = "adjunction/" + c.name + "/" + a.name;
      try {
        auto r = adjunction_report(c.coalgebra, a.algebra);
        it.data["cap"] = std::to_string(r.cap);
        it.data["alg_maps"] = std::to_string(r.alg_maps);
        it.data["twisting"] = std::to_string(r.twisting);
        it.data["coalg_maps"] = std::to_string(r.coalg_maps);
        it.data["equivalence"] = r.equivalence ? "true" : "false";
        it.data["round_trips"] = r.round_trips.passed() ? "true" : "false";
        it.passed = r.counts_agree() && r.equivalence && r.round_trips.passed();
      } catch (const Unsupported& e) {
        it.skipped = true;
        it.reason = e.what();
      } catch (const PreconditionError& e) {
        it.skipped = true;
        it.reason = e.what();
      }
      rep.items.push_back(std::move(it));
    }
  for (const auto& a : algebras) {
    DualityItem it;
    it.name = "counit/" + a.name;
    if (!concentrated_from(*a.algebra.space(), 2)) {
      it.skipped = true;
      it.reason = "algebra not concentrated in degrees >= 2";
    } else {
      try {
        auto d = counit(a.algebra, bar_cap, cobar_cap, window);
        it.passed = d.verdict.quasi_iso;
        it.data["source_homology"] = dims_string(homology(d.source, window));
        it.data["target_homology"] = dims_string(homology(d.target, window));
      } catch (const InsufficientTruncation& e) {
        it.skipped = true;
        it.reason = e.what();
      }
    }
    rep.items.push_back(std::move(it));
  }
  for (const auto& c : coalgebras) {
    DualityItem it;
    it.name = "unit/" + c.name;
    if (!concentrated_from(*c.coalgebra.space(), 2)) {
      it.skipped = true;
      it.reason = "coalgebra not concentrated in degrees >= 2";
    } else {
      try {
        auto d = unit(c.coalgebra, cobar_cap, bar_cap, unit_window);
        it.passed = d.verdict.quasi_iso;
        it.data["source_homology"] = dims_string(homology(d.source, unit_window));
        it.data["target_homology"] = dims_string(homology(d.target, unit_window));
      } catch (const InsufficientTruncation& e) {
        it.skipped = true;
        it.reason = e.what();
      } catch (const PreconditionError& e) {
        it.skipped = true;
        it.reason = e.what();
      }
    }
    rep.items.push_back(std::move(it));
  }
  return rep;
}

}  // namespace kdual
