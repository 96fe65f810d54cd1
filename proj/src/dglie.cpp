#include "kdual/dglie.hpp"

#include "kdual/cofree.hpp"

namespace kdual {

Vec DgLieAlgebra::bracket_basis(size_t i, size_t j) const {
  auto it = bracket.find({i, j});
  return it == bracket.end() ? Vec{} : it->second;
}

Vec DgLieAlgebra::apply_bracket(const Vec& x, const Vec& y) const {
  Vec out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      auto it = bracket.find({i, j});
      if (it != bracket.end()) axpy(out, a * b, it->second);
    }
  return out;
}

DgLieAlgebra abelian_lie(const Field& f, const SpacePtr& v) { return DgLieAlgebra(Complex::zero_differential(f, v)); }

namespace {

void reject_char_two(const Field& f) {
  if (f.characteristic() == 2) throw CharacteristicError("Lie algebras in characteristic 2 are not supported");
}

std::string names(const GradedSpace& v, std::initializer_list<size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (size_t i : idx) {
    if (!first) s += ",";
    s += v.name(i);
    first = false;
  }
  return s + ")";
}

}  // namespace

Certificate validate_lie(const DgLieAlgebra& g) {
  const Field& f = g.field();
  reject_char_two(f);
  const auto& v = *g.space();
  size_t n = g.dim();
  CheckResult dsq{"d_squared", true, {}}, hom{"homogeneity", true, {}}, anti{"antisymmetry", true, {}},
      jac{"jacobi", true, {}}, leib{"leibniz", true, {}};
  for (size_t i = 0; i < n; ++i)
    if (!g.d().apply(g.d().col(i)).empty()) dsq.fail(v.name(i));
  for (const auto& w : g.d().homogeneity_violations()) hom.fail("d: " + w);
  for (const auto& [ij, b] : g.bracket)
    for (const auto& [k, c] : b)
      if (v.degree(k) != v.degree(ij.first) + v.degree(ij.second))
        hom.fail("bracket" + names(v, {ij.first, ij.second}) + " -> " + v.name(k));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      long long e = static_cast<long long>(v.degree(i)) * v.degree(j);
      Vec ij = g.bracket_basis(i, j);
      if (ij != scaled(g.bracket_basis(j, i), -sign(f, e))) anti.fail(names(v, {i, j}));
      Vec lhs = g.d().apply(ij);
      Vec rhs = g.apply_bracket(g.d().col(i), unit(f, j));
      axpy(rhs, sign(f, v.degree(i)), g.apply_bracket(unit(f, i), g.d().col(j)));
      if (lhs != rhs) leib.fail(names(v, {i, j}));
      for (size_t k = 0; k < n; ++k) {
        // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
        Vec l = g.apply_bracket(unit(f, i), g.bracket_basis(j, k));
        Vec r = g.apply_bracket(ij, unit(f, k));
        axpy(r, sign(f, e), g.apply_bracket(unit(f, j), g.bracket_basis(i, k)));
        if (l != r) jac.fail(names(v, {i, j, k}));
      }
    }
  Certificate c;
  c.checks = {dsq, hom, anti, jac, leib};
  return c;
}

Certificate validate_lie_morphism(const GradedMap& m, const DgLieAlgebra& g, const DgLieAlgebra& h) {
  CheckResult deg{"degree", m.degree() == 0, {}}, chain{"chain_map", true, {}}, br{"bracket", true, {}};
  const auto& v = *g.space();
  for (size_t i = 0; i < g.dim(); ++i) {
    if (h.d().apply(m.col(i)) != m.apply(g.d().col(i))) chain.fail(v.name(i));
    for (size_t j = 0; j < g.dim(); ++j)
      if (m.apply(g.bracket_basis(i, j)) != h.apply_bracket(m.col(i), m.col(j))) br.fail(names(v, {i, j}));
  }
  Certificate c;
  c.checks = {deg, chain, br};
  return c;
}

Vec commutator(const DgAlgebra& a, const Vec& x, const Vec& y) {
  Vec out;
  for (const auto& [i, s] : x)
    for (const auto& [j, t] : y) {
      long long e = static_cast<long long>(a.space()->degree(i)) * a.space()->degree(j);
      axpy(out, s * t, a.mul_basis(i, j));
      axpy(out, -(s * t) * sign(a.field(), e), a.mul_basis(j, i));
    }
  return out;
}

DgLieAlgebra commutator_lie(const DgAlgebra& a) {
  ProductTable br;
  const Field& f = a.field();
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) {
      Vec c = commutator(a, unit(f, i), unit(f, j));
      if (!c.empty()) br.emplace(std::make_pair(i, j), std::move(c));
    }
  return DgLieAlgebra(a.cx, std::move(br));
}

FreeLie::FreeLie(Field f, SpacePtr gens, std::vector<Vec> gen_diff, int cap, DegreeRange gens_exact) {
  reject_char_two(f);
  require_char_above(f, cap, "free Lie algebras");
  ambient_ = std::make_shared<FreeDgAlgebra>(f, gens, std::move(gen_diff), cap, gens_exact);
  const auto& amb = *ambient_;
  const auto& tsp = *amb.space();
  Echelon ech(f);
  std::vector<BasisElement> basis;
  std::vector<size_t> prev;
  for (size_t g = 0; g < gens->dim(); ++g) {
    Vec e = unit(f, g);
    ech.insert(e);
    embed_.push_back(e);
    trees_.push_back({g, std::nullopt});
    basis.push_back(gens->at(g));
    prev.push_back(g);
  }
  for (int w = 2; w <= cap; ++w) {
    std::vector<size_t> cur;
    for (size_t g = 0; g < gens->dim(); ++g)
      for (size_t b : prev) {
        const Vec& eb = embed_[b];
        int db = *vector_degree(tsp, eb);
        Vec v = amb.concat(unit(f, g), eb);
        axpy(v, -sign(f, static_cast<long long>(gens->degree(g)) * db), amb.concat(eb, unit(f, g)));
        if (v.empty() || !ech.insert(v)) continue;
        cur.push_back(embed_.size());
        embed_.push_back(v);
        trees_.push_back({g, b});
        basis.push_back({"[" + gens->name(g) + "," + basis[b].name + "]", gens->degree(g) + db});
      }
    prev = std::move(cur);
  }
  coords_ = std::make_shared<CoordinateSystem>(f, embed_);
  auto sp = make_space(std::move(basis));
  size_t n = embed_.size();
  std::vector<Vec> dcols(n);
  for (size_t k = 0; k < n; ++k) {
    auto c = coords_->coords(amb.derivation(embed_[k]));
    if (!c) throw PreconditionError("differential leaves the free Lie algebra at " + sp->name(k));
    dcols[k] = std::move(*c);
  }
  ProductTable br;
  for (size_t k = 0; k < n; ++k)
    for (size_t l = 0; l < n; ++l) {
      Vec v = amb.concat(embed_[k], embed_[l]);
      axpy(v, -sign(f, static_cast<long long>(sp->degree(k)) * sp->degree(l)), amb.concat(embed_[l], embed_[k]));
      if (v.empty()) continue;
      br.emplace(std::make_pair(k, l), coords_->require(v));
    }
  lie_ = std::make_shared<DgLieAlgebra>(Complex(GradedMap(f, sp, sp, -1, std::move(dcols)), amb.complex().exact()),
                                        std::move(br));
}

GradedMap FreeLie::inclusion() const {
  return GradedMap(ambient_->field(), lie_->space(), ambient_->space(), 0, embed_);
}

FreeLie free_lie(const Field& f, const SpacePtr& v, int cap) {
  return FreeLie(f, v, std::vector<Vec>(v->dim()), cap);
}

FreeLie mc_lie_algebra(const Field& f, int cap, bool allow_positive_characteristic) {
  if (!f.is_rational()) {
    if (!allow_positive_characteristic) throw CharacteristicError("the Lie Maurer-Cartan algebra is built over Q");
    require_char_above(f, std::max(2, cap), "the Lie Maurer-Cartan algebra");
  }
  auto gens = make_space({{"x", -1}});
  WordIndex w(1, cap);
  // -1/2 [x,x] = -x^2 for odd x.
  Vec dx = word_combination(w, f, {{{0, 0}, -f.one()}});
  return FreeLie(f, gens, {dx}, cap);
}

bool is_mc_lie_element(const DgLieAlgebra& g, const Vec& x) {
  reject_char_two(g.field());
  auto deg = vector_degree(*g.space(), x);
  if (deg && *deg != -1) throw DegreeError("Maurer-Cartan candidates have degree -1");
  Vec r = g.d().apply(x);
  axpy(r, g.field().from_int(2).inverse(), g.apply_bracket(x, x));
  return r.empty();
}

std::vector<Vec> enumerate_mc_lie(const DgLieAlgebra& g, size_t limit) {
  reject_char_two(g.field());
  std::vector<Vec> out;
  enumerate_vectors(g.field(), g.space()->in_degree(-1), limit, [&](const Vec& v) {
    if (is_mc_lie_element(g, v)) out.push_back(v);
  });
  return out;
}

GradedMap extend_lie_from_generators(const FreeLie& f, const DgLieAlgebra& g, const std::vector<Vec>& images) {
  if (images.size() != f.generators()->dim()) throw PreconditionError("one image per generator required");
  const auto& trees = f.trees();
  std::vector<Vec> cols(trees.size());
  for (size_t k = 0; k < trees.size(); ++k) {
    const auto& node = trees[k];
    cols[k] = node.child ? g.apply_bracket(images[node.generator], cols[*node.child]) : images[node.generator];
  }
  return GradedMap(g.field(), f.lie().space(), g.space(), 0, std::move(cols));
}

bool lie_generator_chain_condition(const FreeLie& f, const DgLieAlgebra& g, const std::vector<Vec>& images) {
  auto m = extend_lie_from_generators(f, g, images);
  for (size_t k = 0; k < images.size(); ++k)
    if (m.apply(f.lie().d().col(k)) != g.d().apply(images[k])) return false;
  return true;
}

std::vector<std::vector<Vec>> enumerate_free_lie_morphisms(const FreeLie& f, const DgLieAlgebra& g, size_t limit) {
  const auto& gens = *f.generators();
  size_t m = g.dim();
  std::vector<size_t> support;
  for (size_t k = 0; k < gens.dim(); ++k)
    for (size_t i : g.space()->in_degree(gens.degree(k))) support.push_back(k * m + i);
  std::vector<std::vector<Vec>> out;
  enumerate_vectors(g.field(), support, limit, [&](const Vec& v) {
    std::vector<Vec> images(gens.dim());
    for (const auto& [k, c] : v) images[k / m].emplace(k % m, c);
    if (lie_generator_chain_condition(f, g, images)) out.push_back(std::move(images));
  });
  return out;
}

}  // namespace kdual
