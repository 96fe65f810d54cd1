#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kdual/certificate.hpp"
#include "kdual/homology.hpp"
#include "kdual/words.hpp"

namespace kdual {

// Nonzero products e_i e_j only.
using ProductTable = std::map<std::pair<size_t, size_t>, Vec>;

// Non-unital dg-algebra.
struct DgAlgebra {
  Complex cx;
  ProductTable mu;

  explicit DgAlgebra(Complex c, ProductTable m = {}) : cx(std::move(c)), mu(std::move(m)) {}

  const Field& field() const { return cx.field(); }
  const SpacePtr& space() const { return cx.space(); }
  size_t dim() const { return cx.dim(); }
  const GradedMap& d() const { return cx.d(); }

  Vec mul_basis(size_t i, size_t j) const;
  Vec multiply(const Vec& x, const Vec& y) const;
};

DgAlgebra zero_algebra(const Field& f);
// Degree -1 map with zero differential and the given products.
DgAlgebra algebra_from_table(const Field& f, const SpacePtr& v, ProductTable mu);

// Checks d^2 = 0, degrees of d and mu, associativity and Leibniz.
// Every failing basis triple is listed.
Certificate validate_algebra(const DgAlgebra& a);

// Multiplicative chain map.
Certificate validate_alg_morphism(const GradedMap& f, const DgAlgebra& a, const DgAlgebra& b);

// Free non-unital algebra on V truncated at word length cap, with the
// derivation differential induced by gen_diff.
class FreeDgAlgebra {
 public:
  // gen_diff[g] is a combination of word indices; throws PreconditionError
  // with the offending generator when d^2 g != 0.
  FreeDgAlgebra(Field f, SpacePtr gens, std::vector<Vec> gen_diff, int cap, DegreeRange gens_exact = {});

  const Field& field() const { return f_; }
  const SpacePtr& generators() const { return gens_; }
  int cap() const { return words_.cap(); }
  const WordIndex& words() const { return words_; }
  const SpacePtr& space() const { return cx_->space(); }
  const Complex& complex() const { return *cx_; }
  const std::vector<Vec>& gen_diff() const { return gen_diff_; }

  DgAlgebra algebra() const;
  // Product of word combinations, truncated.
  Vec concat(const Vec& a, const Vec& b) const;
  // Basis word, or zero when longer than the cap.
  Vec word(const std::vector<size_t>& letters) const;
  // Applies the derivation extending gen_diff.
  Vec derivation(const Vec& x) const { return cx_->d().apply(x); }

 private:
  Field f_;
  SpacePtr gens_;
  WordIndex words_;
  std::vector<Vec> gen_diff_;
  std::shared_ptr<Complex> cx_;
};

// Builds word indices for gen_diff entries given as letter sequences.
Vec word_combination(const WordIndex& w, const Field& f, const std::vector<std::pair<std::vector<size_t>, Scalar>>& terms);

// Exact range for words of length <= cap in generators with the given
// degrees.
DegreeRange free_exact_range(const GradedSpace& gens, int cap, DegreeRange gens_exact);

// Generator x of degree -1 with dx = -x^2.
FreeDgAlgebra mc_algebra(const Field& f, int cap);

bool is_mc_element(const DgAlgebra& a, const Vec& x);
// All degree -1 solutions of d x + x^2 = 0; F_p only.
std::vector<Vec> enumerate_mc(const DgAlgebra& a, size_t limit = 1u << 22);

// Multiplicative extension of generator images.
GradedMap extend_from_generators(const FreeDgAlgebra& f, const DgAlgebra& a, const std::vector<Vec>& images);
// f(dg) = d f(g) on generators, which characterises chain maps out of a
// free algebra.
bool generator_chain_condition(const FreeDgAlgebra& f, const DgAlgebra& a, const std::vector<Vec>& images);
std::vector<std::vector<Vec>> enumerate_free_morphisms(const FreeDgAlgebra& f, const DgAlgebra& a,
                                                       size_t limit = 1u << 22);
std::vector<Vec> restrict_to_generators(const FreeDgAlgebra& f, const GradedMap& m);

struct SubAlgebra {
  DgAlgebra algebra;
  GradedMap inclusion;
};

struct QuotientAlgebra {
  DgAlgebra algebra;
  GradedMap projection;
};

// Throws PreconditionError unless U is closed under d and products.
SubAlgebra restrict_algebra(const DgAlgebra& a, const Subspace& u);
// Throws PreconditionError unless I is a d-stable two-sided ideal.
QuotientAlgebra quotient_algebra(const DgAlgebra& a, const Subspace& ideal);
Subspace ideal_generated(const DgAlgebra& a, const std::vector<Vec>& gens);
bool is_ideal(const DgAlgebra& a, const Subspace& i);

struct ProductAlgebra {
  DgAlgebra algebra;
  GradedMap p1, p2;
  GradedMap i1, i2;
};
ProductAlgebra product_algebra(const DgAlgebra& a, const DgAlgebra& b);

struct PullbackAlgebra {
  DgAlgebra algebra;
  GradedMap p1, p2;
  GradedMap inclusion;  // into the product
};
// Pullback of f : A -> A'' and g : A' -> A''.
PullbackAlgebra pullback_algebra(const GradedMap& f, const DgAlgebra& a, const GradedMap& g, const DgAlgebra& ap);
// Unique map from a cone (h1 : X -> A, h2 : X -> A') into the pullback.
std::optional<GradedMap> pullback_cone_map(const PullbackAlgebra& p, const GradedMap& h1, const GradedMap& h2);

struct AlgMorphismClass {
  bool fibration = false;
  bool weak_equivalence = false;
  QuasiIsoVerdict homology;
};
AlgMorphismClass classify_alg_morphism(const GradedMap& f, const DgAlgebra& a, const DgAlgebra& b, DegreeRange window);

bool is_surjective(const GradedMap& f);
bool is_injective(const GradedMap& f);

// Re-indexes pivot coordinates of a reduced basis to positions 0..k-1.
class PivotIndex {
 public:
  explicit PivotIndex(const Subspace& s);
  Vec coords(const Subspace& s, const Vec& v) const;
  const std::vector<size_t>& pivots() const { return piv_; }

 private:
  std::vector<size_t> piv_;
  std::map<size_t, size_t> pos_;
};

// Subspace spanned by homogeneous vectors, basis named after pivots.
SpacePtr subspace_space(const GradedSpace& ambient, const Subspace& s);

}  // namespace kdual
