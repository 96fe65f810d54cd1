#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace kt;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

bool same(const DgCoalgebra& a, const DgCoalgebra& b) {
  return *a.space() == *b.space() && a.d() == b.d() && a.delta == b.delta;
}
bool same(const DgAlgebra& a, const DgAlgebra& b) { return *a.space() == *b.space() && a.d() == b.d() && a.mu == b.mu; }

}  // namespace

TEST_CASE("pushout-product with an identity is an isomorphism", "[modelcheck]") {
  Corpus c = builtin_corpus(Q);
  const auto& c2 = c.coalgebra("C2");
  auto x = point(Q, "x", 1);
  auto r = pushout_product(identity_map(Q, c2.space()), c2, c2, inclusion_of(Q, x.space(), c2.space(), {0}), x, c2);
  CHECK(r.kind == "pushout_product");
  CHECK(r.injective);
  CHECK(r.surjective);
  CHECK(r.object_dim == 4);
  CHECK(r.target_dim == 4);
  CHECK(r.reason.empty());
}

TEST_CASE("pushout-product of two inclusions", "[modelcheck]") {
  Corpus c = builtin_corpus(Q);
  const auto& c2 = c.coalgebra("C2");
  auto x = point(Q, "x", 1);
  auto z = point(Q, "z", 5);
  DgCoalgebra zero = zero_coalgebra(Q);
  auto r = pushout_product(inclusion_of(Q, x.space(), c2.space(), {0}), x, c2, zero_map(Q, zero.space(), z.space(), 0),
                           zero, z);
  CHECK(r.source_dim == 0);
  CHECK(r.object_dim == 1);
  CHECK(r.target_dim == 2);
  CHECK(r.injective);
  CHECK_FALSE(r.surjective);
  CHECK(r.corank == 1);
  CHECK_FALSE(r.weq.quasi_iso);
}

TEST_CASE("pushout-product with an acyclic inclusion is a weak equivalence", "[modelcheck]") {
  Corpus c = builtin_corpus(Q);
  const auto& c2 = c.coalgebra("C2");
  auto x = point(Q, "x", 1);
  DgCoalgebra zero = zero_coalgebra(Q);
  DgCoalgebra d = acyclic_d(Q);
  auto r = pushout_product(inclusion_of(Q, x.space(), c2.space(), {0}), x, c2, zero_map(Q, zero.space(), d.space(), 0),
                           zero, d);
  CHECK(r.object_dim == 2);
  CHECK(r.target_dim == 4);
  CHECK(r.injective);
  CHECK(r.corank == 2);
  CHECK(r.weq.quasi_iso);
}

TEST_CASE("pushout-product rejects non-injective legs", "[modelcheck]") {
  Corpus c = builtin_corpus(Q);
  const auto& c2 = c.coalgebra("C2");
  CHECK_THROWS_AS(pushout_product(zero_map(Q, c2.space(), c2.space(), 0), c2, c2, identity_map(Q, c2.space()), c2, c2),
                  PreconditionError);
}

TEST_CASE("tensoring preserves filtered quasi-isomorphisms", "[modelcheck]") {
  Corpus c = builtin_corpus(Q);
  const auto& c2 = c.coalgebra("C2");
  Filtration f2 = coradical_filtration(c2).coradical;
  CHECK(tensor_preserves_fqi(identity_map(Q, c2.space()), c2, f2, c2, f2, c2).holds());

  auto sum = direct_sum_coalgebra(c2, acyclic_d(Q));
  Filtration fs = coradical_filtration(sum.coalgebra).coradical;
  auto r = tensor_preserves_fqi(sum.i1, c2, f2, sum.coalgebra, fs, c2);
  CHECK(r.source_admissible);
  CHECK(r.target_admissible);
  CHECK(r.holds());

  CHECK(tensor_preserves_fqi(sum.i1, c2, f2, sum.coalgebra, fs, zero_coalgebra(Q)).holds());

  auto z = point(Q, "z", 5);
  Filtration fz = coradical_filtration(z).coradical;
  DgCoalgebra zero = zero_coalgebra(Q);
  auto nq = tensor_preserves_fqi(zero_map(Q, zero.space(), z.space(), 0), zero, Filtration{}, z, fz, c2);
  CHECK_FALSE(nq.holds());
}

TEST_CASE("pullback-product examples", "[modelcheck]") {
  Corpus c = builtin_corpus(Q);
  const auto& c2 = c.coalgebra("C2");
  const auto& a2 = c.algebra("A2");
  auto q = quotient_algebra(a2, span_of(Q, {unit(Q, 1)}));
  auto x = point(Q, "x", 1);
  GradedMap i = inclusion_of(Q, x.space(), c2.space(), {0});
  auto r = pullback_product(i, x, c2, q.projection, a2, q.algebra);
  CHECK(r.kind == "pullback_product");
  CHECK(r.surjective);
  CHECK(r.source_dim == 4);
  CHECK(r.reason.empty());

  auto prod = product_algebra(a2, acyclic_algebra(Q, 3));
  auto w = pullback_product(i, x, c2, prod.p1, prod.algebra, a2);
  CHECK(w.surjective);
  CHECK(w.weq.quasi_iso);
}

TEST_CASE("random corpus is deterministic and valid", "[modelcheck]") {
  CorpusSizes s = small_sizes();
  auto a = random_corpus(F3, 0, s);
  auto b = random_corpus(F3, 0, s);
  REQUIRE(a.coalgebras.size() == s.coalgebras);
  REQUIRE(a.algebras.size() == s.algebras);
  REQUIRE(a.injections.size() == s.injections);
  REQUIRE(a.surjections.size() == s.surjections);
  REQUIRE(a.quasi_isos.size() == s.quasi_isos);
  REQUIRE(a.filtered_weqs.size() == s.filtered_weqs);
  for (size_t k = 0; k < a.coalgebras.size(); ++k) CHECK(same(a.coalgebras[k], b.coalgebras[k]));
  for (size_t k = 0; k < a.algebras.size(); ++k) CHECK(same(a.algebras[k], b.algebras[k]));
  for (size_t k = 0; k < a.injections.size(); ++k) CHECK(a.injections[k].map == b.injections[k].map);
  CHECK(a.rejected == b.rejected);

  auto other = random_corpus(F3, 1, s);
  bool differs = false;
  for (size_t k = 0; k < a.coalgebras.size(); ++k) differs = differs || !same(a.coalgebras[k], other.coalgebras[k]);
  CHECK(differs);

  for (const auto& co : a.coalgebras) {
    CHECK(validate_coalgebra(co).passed());
    auto n = coradical_filtration(co);
    REQUIRE(n.conilpotent);
    CHECK(n.nilpotency <= static_cast<size_t>(s.nilpotency));
    CHECK(co.dim() <= s.max_dim);
  }
  for (const auto& co : a.cocommutative) CHECK(is_cocommutative(co));
  for (const auto& al : a.algebras) CHECK(validate_algebra(al).passed());
  for (const auto& g : a.lie_algebras) CHECK(validate_lie(g).passed());
  for (const auto& w : a.filtered_weqs)
    CHECK(is_filtered_quasi_iso(w.map, w.source.cx, w.source_filtration, w.target.cx, w.target_filtration)
              .filtered_quasi_iso);
}

TEST_CASE("pushout-products of random injections are injective", "[modelcheck][property]") {
  for (const Field& f : {F2, F3}) {
    auto rc = random_corpus(f, 51, small_sizes());
    size_t n = rc.injections.size(), pairs = 0;
    for (size_t k = 0; k < n; ++k)
      for (size_t l = k; l < n; l += 3) {
        const auto& i = rc.injections[k];
        const auto& j = rc.injections[l];
        auto r = pushout_product(i.map, i.source, i.target, j.map, j.source, j.target);
        CHECK(r.injective);
        INFO(r.reason);
        CHECK(r.reason.find("not a coalgebra map") == std::string::npos);
        ++pairs;
      }
    CHECK(pairs >= 20);
  }
}

TEST_CASE("tensoring random filtered weak equivalences", "[modelcheck][property]") {
  auto rc = random_corpus(F3, 52, small_sizes());
  for (const auto& w : rc.filtered_weqs)
    for (size_t k = 0; k < 3; ++k) {
      const auto& e = rc.coalgebras[k];
      CHECK(tensor_preserves_fqi(w.map, w.source, w.source_filtration, w.target, w.target_filtration, e).holds());
    }
}

TEST_CASE("pullback-products of random pairs are surjective", "[modelcheck][property]") {
  for (const Field& f : {F2, F3}) {
    auto rc = random_corpus(f, 53, small_sizes());
    size_t pairs = 0;
    for (size_t k = 0; k < rc.injections.size(); ++k)
      for (size_t l = k % 2; l < rc.surjections.size(); l += 2) {
        const auto& i = rc.injections[k];
        const auto& j = rc.surjections[l];
        auto r = pullback_product(i.map, i.source, i.target, j.map, j.source, j.target);
        CHECK(r.surjective);
        CHECK(r.reason.empty());
        ++pairs;
      }
    CHECK(pairs >= 20);
    for (const auto& q : rc.quasi_isos) {
      if (!is_surjective(q.map)) continue;
      const auto& i = rc.injections.front();
      auto r = pullback_product(i.map, i.source, i.target, q.map, q.source, q.target);
      CHECK(r.surjective);
      CHECK(r.weq.quasi_iso);
    }
  }
}
