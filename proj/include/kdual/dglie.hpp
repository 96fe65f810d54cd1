#pragma once

#include <memory>
#include <vector>

#include "kdual/dgalg.hpp"

namespace kdual {

struct DgLieAlgebra {
  Complex cx;
  ProductTable bracket;

  explicit DgLieAlgebra(Complex c, ProductTable b = {}) : cx(std::move(c)), bracket(std::move(b)) {}

  const Field& field() const { return cx.field(); }
  const SpacePtr& space() const { return cx.space(); }
  size_t dim() const { return cx.dim(); }
  const GradedMap& d() const { return cx.d(); }

  Vec bracket_basis(size_t i, size_t j) const;
  Vec apply_bracket(const Vec& x, const Vec& y) const;
};

DgLieAlgebra abelian_lie(const Field& f, const SpacePtr& v);

// Antisymmetry, Jacobi, Leibniz, d^2, homogeneity. Characteristic 2 is
// rejected with CharacteristicError.
Certificate validate_lie(const DgLieAlgebra& g);
Certificate validate_lie_morphism(const GradedMap& f, const DgLieAlgebra& g, const DgLieAlgebra& h);

// Graded commutator ab - (-1)^{|a||b|} ba in a dg-algebra.
Vec commutator(const DgAlgebra& a, const Vec& x, const Vec& y);
// Commutator dg-Lie algebra of an associative dg-algebra.
DgLieAlgebra commutator_lie(const DgAlgebra& a);

// Free graded Lie algebra on V, realised by right-normed commutators inside
// the truncated free associative algebra.
class FreeLie {
 public:
  // gen_diff is given in the ambient word basis and must be a Lie element.
  FreeLie(Field f, SpacePtr gens, std::vector<Vec> gen_diff, int cap, DegreeRange gens_exact = {});

  const FreeDgAlgebra& ambient() const { return *ambient_; }
  const DgLieAlgebra& lie() const { return *lie_; }
  const SpacePtr& generators() const { return ambient_->generators(); }
  int cap() const { return ambient_->cap(); }
  // Basis element k as a vector of the ambient algebra.
  const std::vector<Vec>& embedding() const { return embed_; }
  GradedMap inclusion() const;
  std::optional<Vec> lie_coords(const Vec& t) const { return coords_->coords(t); }

  struct Node {
    size_t generator;
    std::optional<size_t> child;
  };
  const std::vector<Node>& trees() const { return trees_; }

 private:
  std::shared_ptr<FreeDgAlgebra> ambient_;
  std::vector<Vec> embed_;
  std::vector<Node> trees_;
  std::shared_ptr<CoordinateSystem> coords_;
  std::shared_ptr<DgLieAlgebra> lie_;
};

FreeLie free_lie(const Field& f, const SpacePtr& v, int cap);
// Generator x of degree -1 with dx = -1/2 [x,x]. Over F_p only when
// allow_positive_characteristic is set and p > max(2, cap).
FreeLie mc_lie_algebra(const Field& f, int cap, bool allow_positive_characteristic = false);

bool is_mc_lie_element(const DgLieAlgebra& g, const Vec& x);
std::vector<Vec> enumerate_mc_lie(const DgLieAlgebra& g, size_t limit = 1u << 22);

GradedMap extend_lie_from_generators(const FreeLie& f, const DgLieAlgebra& g, const std::vector<Vec>& images);
bool lie_generator_chain_condition(const FreeLie& f, const DgLieAlgebra& g, const std::vector<Vec>& images);
std::vector<std::vector<Vec>> enumerate_free_lie_morphisms(const FreeLie& f, const DgLieAlgebra& g,
                                                           size_t limit = 1u << 22);

}  // namespace kdual
