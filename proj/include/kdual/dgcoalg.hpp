#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kdual/certificate.hpp"
#include "kdual/dgalg.hpp"

namespace kdual {

// Non-counital dg-coalgebra; delta[i] lives in C (x) C with index a*n + b.
struct DgCoalgebra {
  Complex cx;
  std::vector<Vec> delta;

  explicit DgCoalgebra(Complex c, std::vector<Vec> d = {});

  const Field& field() const { return cx.field(); }
  const SpacePtr& space() const { return cx.space(); }
  size_t dim() const { return cx.dim(); }
  const GradedMap& d() const { return cx.d(); }

  Vec coproduct(const Vec& x) const;
};

DgCoalgebra zero_coalgebra(const Field& f);

// (f (x) g) applied to a vector of src(f) (x) src(g), Koszul signs included.
Vec tensor_apply(const GradedMap& f, const GradedMap& g, const Vec& x);
// x (x) y as a vector of V (x) W, given dim W.
Vec tensor_vectors(const Vec& x, const Vec& y, size_t dim_w);

// Coassociativity, coderivation, d^2, homogeneity; flag "cocommutative".
Certificate validate_coalgebra(const DgCoalgebra& c);
bool is_cocommutative(const DgCoalgebra& c);

using MultiVec = std::map<std::vector<size_t>, Scalar>;
// Delta^n x in C^{(x)(n+1)}; left bracketing applies Delta to the first
// factor at every step, right bracketing to the last.
MultiVec iterated_coproduct(const DgCoalgebra& c, const Vec& x, size_t n, bool left = true);
Subspace kernel_of_iterated(const DgCoalgebra& c, size_t n, bool left = true);

struct ConilpotencyResult {
  bool conilpotent = false;
  size_t nilpotency = 0;
  // F_n = ker Delta^n until the chain stabilises.
  Filtration coradical;
  std::optional<Vec> witness;
};
ConilpotencyResult coradical_filtration(const DgCoalgebra& c);

bool is_atom(const DgCoalgebra& c, const Vec& x);
std::vector<Vec> atoms(const DgCoalgebra& c, size_t limit = 1u << 20);

struct SubCoalgebra {
  DgCoalgebra coalgebra;
  GradedMap inclusion;
};
struct QuotientCoalgebra {
  DgCoalgebra coalgebra;
  GradedMap projection;
};

bool is_subcoalgebra(const DgCoalgebra& c, const Subspace& u);
SubCoalgebra restrict_coalgebra(const DgCoalgebra& c, const Subspace& u);
bool is_coideal(const DgCoalgebra& c, const Subspace& i);
QuotientCoalgebra quotient_coalgebra(const DgCoalgebra& c, const Subspace& i);
// Largest dg-subcoalgebra contained in U.
Subspace largest_subcoalgebra(const DgCoalgebra& c, const Subspace& u);
// Smallest dg-subcoalgebra containing the given vectors (conilpotent C).
Subspace subcoalgebra_generated(const DgCoalgebra& c, const std::vector<Vec>& gens);
SubCoalgebra conilpotent_radical(const DgCoalgebra& c);

// Delta(c (x) d) = sum (-1)^{|c2||d1|} (c1 (x) d1) (x) (c2 (x) d2).
DgCoalgebra tensor_coalgebra(const DgCoalgebra& c, const DgCoalgebra& d);

struct SumCoalgebra {
  DgCoalgebra coalgebra;
  GradedMap i1, i2;
};
SumCoalgebra direct_sum_coalgebra(const DgCoalgebra& a, const DgCoalgebra& b);

struct PushoutCoalgebra {
  DgCoalgebra coalgebra;
  GradedMap j1, j2;
};
// Pushout of i : C0 -> C1 and j : C0 -> C2.
PushoutCoalgebra coalgebra_pushout(const GradedMap& i, const DgCoalgebra& c1, const GradedMap& j,
                                   const DgCoalgebra& c2);

Certificate validate_coalg_morphism(const GradedMap& f, const DgCoalgebra& c, const DgCoalgebra& d);

// d(F_n) in F_n and Delta(F_n) in sum_{0<k<n} F_{n-k} (x) F_k, plus
// monotonicity and exhaustiveness.
Certificate check_admissible(const DgCoalgebra& c, const Filtration& f);

struct CoalgMorphismClass {
  bool cofibration = false;
  bool filtered_weq = false;
  std::optional<FilteredVerdict> verdict;
  std::string reason;
};
// Uses the coradical filtrations when none are supplied.
CoalgMorphismClass classify_coalg_morphism(const GradedMap& f, const DgCoalgebra& c, const DgCoalgebra& d,
                                           const std::optional<Filtration>& fc = std::nullopt,
                                           const std::optional<Filtration>& fd = std::nullopt);

}  // namespace kdual
