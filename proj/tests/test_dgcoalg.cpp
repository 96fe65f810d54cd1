#include <catch_amalgamated.hpp>

#include <random>

#include "kdual/cofree.hpp"
#include "support.hpp"

using namespace kt;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

DgCoalgebra group_like(const Field& f) { return builtin_corpus(f).coalgebra("G"); }

DgCoalgebra group_like_plus_point(const Field& f) {
  return make_coalgebra(f, {{"g", 0}, {"p", 3}}, {}, {{0, 0, 0, f.one()}});
}

}  // namespace

TEST_CASE("validate_coalgebra and cocommutativity", "[dgcoalg]") {
  Corpus c = builtin_corpus(Q);
  auto c2 = validate_coalgebra(c.coalgebra("C2"));
  CHECK(c2.passed());
  CHECK_FALSE(c2.flags.at("cocommutative"));
  auto c3 = validate_coalgebra(c.coalgebra("C3"));
  CHECK(c3.passed());
  CHECK(c3.flags.at("cocommutative"));
  CHECK(validate_coalgebra(zero_coalgebra(Q)).passed());
}

TEST_CASE("coradical filtration and nilpotency", "[dgcoalg]") {
  Corpus c = builtin_corpus(Q);
  auto r = coradical_filtration(c.coalgebra("C2"));
  CHECK(r.conilpotent);
  CHECK(r.nilpotency == 2);
  CHECK(same_subspace(r.coradical.stages.at(0), span_of(Q, {unit(Q, 0)})));

  auto g = coradical_filtration(group_like(Q));
  CHECK_FALSE(g.conilpotent);
  REQUIRE(g.witness);
  CHECK(*g.witness == unit(Q, 0));

  auto t = cofree_tensor(Q, space({{"v", 1}}), 3);
  CHECK(coradical_filtration(t.coalgebra).nilpotency == 3);
}

TEST_CASE("atoms", "[dgcoalg]") {
  Corpus c = builtin_corpus(F2);
  auto a = atoms(c.coalgebra("C2"));
  REQUIRE(a.size() == 1);
  CHECK(a[0].empty());
  auto g = atoms(group_like(F2));
  REQUIRE(g.size() == 2);
  CHECK(g[0].empty());
  CHECK(g[1] == unit(F2, 0));
  auto gp = atoms(group_like_plus_point(F2));
  REQUIRE(gp.size() == 2);
  CHECK(gp[1] == unit(F2, 0));
}

TEST_CASE("conilpotent radical", "[dgcoalg]") {
  Corpus c = builtin_corpus(Q);
  CHECK(conilpotent_radical(c.coalgebra("C2")).coalgebra.dim() == 2);
  CHECK(conilpotent_radical(group_like(Q)).coalgebra.dim() == 0);
  auto r = conilpotent_radical(group_like_plus_point(Q));
  REQUIRE(r.coalgebra.dim() == 1);
  CHECK(r.inclusion.col(0) == unit(Q, 1));
}

TEST_CASE("tensor product of coalgebras", "[dgcoalg]") {
  Corpus c = builtin_corpus(Q);
  const auto& c2 = c.coalgebra("C2");
  auto ce = tensor_coalgebra(c2, point(Q, "z", 5));
  CHECK(validate_coalgebra(ce).passed());
  for (const auto& d : ce.delta) CHECK(d.empty());
  auto cc = tensor_coalgebra(c2, c2);
  CHECK(validate_coalgebra(cc).passed());
  CHECK(coradical_filtration(cc).nilpotency <= 2);
  CHECK(tensor_coalgebra(zero_coalgebra(Q), c2).dim() == 0);
}

TEST_CASE("cofree tensor coalgebra", "[dgcoalg]") {
  auto t = cofree_tensor(Q, space({{"v", 1}}), 3);
  const auto& sp = *t.coalgebra.space();
  REQUIRE(sp.dim() == 3);
  for (int k = 0; k < 3; ++k) CHECK(sp.degree(k) == k + 1);
  CHECK(t.coalgebra.delta[1] == unit(Q, 0));
  CHECK(validate_coalgebra(t.coalgebra).passed());
}

TEST_CASE("cofree cocommutative coalgebra", "[dgcoalg]") {
  auto s = cofree_cocommutative(Q, space({{"s", 3}}), 2);
  CHECK(s.sub.coalgebra.dim() == 1);
  auto t = cofree_cocommutative(Q, space({{"t", 2}}), 2);
  CHECK(t.sub.coalgebra.dim() == 2);
  CHECK(validate_coalgebra(t.sub.coalgebra).passed());
  CHECK(is_cocommutative(t.sub.coalgebra));
}

TEST_CASE("pushouts of coalgebras", "[dgcoalg]") {
  Corpus c = builtin_corpus(Q);
  const auto& c1 = c.coalgebra("C1");
  const auto& c2 = c.coalgebra("C2");
  DgCoalgebra zero = zero_coalgebra(Q);
  auto p0 = coalgebra_pushout(zero_map(Q, zero.space(), c1.space(), 0), c1, zero_map(Q, zero.space(), c2.space(), 0), c2);
  CHECK(p0.coalgebra.dim() == 3);
  CHECK(validate_coalgebra(p0.coalgebra).passed());

  GradedMap id = identity_map(Q, c1.space());
  CHECK(coalgebra_pushout(id, c1, id, c1).coalgebra.dim() == 1);

  auto x = point(Q, "x", 1);
  auto xp = make_coalgebra(Q, {{"x", 1}, {"p", 3}}, {}, {});
  auto po = coalgebra_pushout(inclusion_of(Q, x.space(), c2.space(), {0}), c2, inclusion_of(Q, x.space(), xp.space(), {0}), xp);
  CHECK(po.coalgebra.dim() == 3);
  CHECK(validate_coalgebra(po.coalgebra).passed());
  CHECK(validate_coalg_morphism(po.j1, c2, po.coalgebra).passed());
  CHECK(validate_coalg_morphism(po.j2, xp, po.coalgebra).passed());
}

TEST_CASE("largest subcoalgebra", "[dgcoalg]") {
  Corpus c = builtin_corpus(Q);
  const auto& c2 = c.coalgebra("C2");
  Subspace all = span_of(Q, {unit(Q, 0), unit(Q, 1)});
  CHECK(largest_subcoalgebra(c2, all).rank() == 2);

  auto t = cofree_tensor(Q, space({{"v", 1}}), 2);
  CHECK(largest_subcoalgebra(t.coalgebra, span_of(Q, {unit(Q, 1)})).rank() == 0);

  GradedMap f = identity_map(Q, c2.space());
  std::vector<Vec> diff = (f - f).cols();
  Subspace ker = span_of(Q, kernel_of(Q, diff));
  CHECK(largest_subcoalgebra(c2, ker).rank() == 2);
}

TEST_CASE("classification of coalgebra maps", "[dgcoalg]") {
  Corpus c = builtin_corpus(Q);
  const auto& c2 = c.coalgebra("C2");
  auto x = point(Q, "x", 1);
  CHECK(classify_coalg_morphism(inclusion_of(Q, x.space(), c2.space(), {0}), x, c2).cofibration);
  auto sum = direct_sum_coalgebra(c2, acyclic_d(Q));
  auto cls = classify_coalg_morphism(sum.i1, c2, sum.coalgebra);
  CHECK(cls.cofibration);
  CHECK(cls.filtered_weq);
  CHECK_FALSE(classify_coalg_morphism(zero_map(Q, c2.space(), c2.space(), 0), c2, c2).cofibration);
}

TEST_CASE("coradical stages are admissible", "[dgcoalg][property]") {
  for (const Field& f : {Q, F2, F3}) {
    Corpus c = builtin_corpus(f);
    for (const auto& name : conilpotent_names()) {
      const auto& co = c.coalgebra(name);
      CHECK(check_admissible(co, coradical_filtration(co).coradical).passed());
    }
    auto rc = random_corpus(f, 31, small_sizes());
    for (const auto& co : rc.coalgebras) CHECK(check_admissible(co, coradical_filtration(co).coradical).passed());
    for (const auto& co : rc.cocommutative) CHECK(check_admissible(co, coradical_filtration(co).coradical).passed());
  }
}

TEST_CASE("tensor products stay valid and conilpotent", "[dgcoalg][property]") {
  for (const Field& f : {Q, F2, F3}) {
    auto rc = random_corpus(f, 32, small_sizes());
    size_t n = rc.coalgebras.size();
    for (size_t k = 0; k < n; ++k) {
      const auto& a = rc.coalgebras[k];
      const auto& b = rc.coalgebras[(k + 3) % n];
      auto t = tensor_coalgebra(a, b);
      CHECK(validate_coalgebra(t).passed());
      auto na = coradical_filtration(a), nt = coradical_filtration(t);
      REQUIRE(nt.conilpotent);
      CHECK(nt.nilpotency <= na.nilpotency);
    }
  }
}

TEST_CASE("images of conilpotent elements are conilpotent", "[dgcoalg][property]") {
  auto rc = random_corpus(F3, 33, small_sizes());
  for (const auto& inj : rc.injections) {
    CHECK(validate_coalg_morphism(inj.map, inj.source, inj.target).passed());
    auto ns = coradical_filtration(inj.source);
    REQUIRE(ns.conilpotent);
    for (size_t i = 0; i < inj.source.dim(); ++i)
      CHECK(iterated_coproduct(inj.target, inj.map.col(i), ns.nilpotency).empty());
  }
}

TEST_CASE("largest subcoalgebra is idempotent and monotone", "[dgcoalg][property]") {
  std::mt19937_64 rng(5);
  auto rc = random_corpus(F2, 34, small_sizes());
  for (const auto& c : rc.coalgebras) {
    size_t n = c.dim();
    std::vector<Vec> small, big;
    for (size_t i = 0; i < n; ++i) {
      unsigned r = rng() % 3;
      if (r == 0) small.push_back(unit(F2, i));
      if (r <= 1) big.push_back(unit(F2, i));
    }
    Subspace u = span_of(F2, small), v = span_of(F2, big);
    Subspace lu = largest_subcoalgebra(c, u);
    CHECK(same_subspace(largest_subcoalgebra(c, lu), lu));
    CHECK(is_subspace_of(lu, largest_subcoalgebra(c, v)));
    CHECK(is_subcoalgebra(c, lu));
  }
}

TEST_CASE("maps into a cofree coalgebra respect the nilpotency bound", "[dgcoalg][property]") {
  auto rc = random_corpus(F3, 35, small_sizes());
  for (const auto& c : rc.coalgebras) {
    auto nc = coradical_filtration(c);
    int cap = static_cast<int>(nc.nilpotency) + 2;
    CoderivationComponents q = [&](const std::vector<size_t>& w) { return w.size() == 1 ? c.d().col(w[0]) : Vec{}; };
    auto t = cofree_tensor(F3, c.space(), cap, q);
    GradedMap g = cofree_lift(c, identity_map(F3, c.space()), t);
    CHECK(validate_coalg_morphism(g, c, t.coalgebra).passed());
    for (const auto& col : g.cols())
      for (const auto& [w, s] : col) CHECK(t.words.length(w) <= nc.nilpotency);
  }
}
