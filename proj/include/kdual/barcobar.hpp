#pragma once

#include <optional>
#include <string>

#include "kdual/cofree.hpp"
#include "kdual/convolution.hpp"

namespace kdual {

// Bar construction truncated at weight cap. Letters are shift(A,+1) with
// letter k = s(e_k).
struct BarCoalgebra {
  CofreeCoalgebra cofree;
  DgCoalgebra coalgebra;
  // Lie flavor: graded symmetric tensors inside the tensor coalgebra.
  std::optional<Subspace> sym;
  GradedMap inclusion;

  int cap() const { return cofree.words.cap(); }
  // Re-expresses a map into the tensor coalgebra as a map into `coalgebra`.
  GradedMap corestrict(const GradedMap& into_ambient) const;
};

BarCoalgebra bar(const DgAlgebra& a, int cap);
// Graded symmetric flavor; needs characteristic 0 or p > max(2, cap).
BarCoalgebra bar_lie(const DgLieAlgebra& g, int cap);

// Generators ~c of degree |c| - 1 with
// d(~c) = -~(dc) - sum (-1)^{|c1|} ~c1 ~c2.
// Throws PreconditionError when C is not conilpotent.
FreeDgAlgebra cobar(const DgCoalgebra& c, int cap);
// Same generator differential read in the free Lie algebra; C must be
// cocommutative.
FreeLie cobar_lie(const DgCoalgebra& c, int cap);

// Weight-one part of B(phi) extended word by word.
GradedMap bar_map(const GradedMap& phi, const BarCoalgebra& source, const BarCoalgebra& target);

// tau : C -> A of degree -1 and the algebra map ~c -> tau(c).
GradedMap alg_map_from_twisting(const FreeDgAlgebra& omega, const DgAlgebra& a, const GradedMap& tau);
GradedMap twisting_from_alg_map(const FreeDgAlgebra& omega, const SpacePtr& c, const GradedMap& f);
// g_tau = sum_n (s tau)^{(x)n} Delta^{(n-1)}.
GradedMap coalg_map_from_twisting(const DgCoalgebra& c, const BarCoalgebra& b, const GradedMap& tau);
GradedMap twisting_from_coalg_map(const BarCoalgebra& b, const SpacePtr& a, const GradedMap& g);

GradedMap lie_map_from_twisting(const FreeLie& omega, const DgLieAlgebra& g, const GradedMap& tau);
GradedMap twisting_from_lie_map(const FreeLie& omega, const SpacePtr& c, const GradedMap& f);

// Coalgebra chain maps C -> B. Brute force over all degree 0 maps when the
// search space is below `brute_limit`, otherwise through cofree lifts.
std::vector<GradedMap> coalgebra_maps_to_bar(const DgCoalgebra& c, const BarCoalgebra& b, size_t brute_limit = 1u << 16,
                                             size_t limit = 1u << 22);

struct AdjunctionReport {
  int cap = 0;
  size_t alg_maps = 0;
  size_t twisting = 0;
  size_t coalg_maps = 0;
  // For every degree -1 map tau: f_tau chain <=> tau MC <=> g_tau chain.
  bool equivalence = true;
  Certificate round_trips;
  bool counts_agree() const { return alg_maps == twisting && twisting == coalg_maps; }
};

// Exhaustive over F_p; bar and cobar caps are the nilpotency of C.
AdjunctionReport adjunction_report(const DgCoalgebra& c, const DgAlgebra& a, size_t limit = 1u << 22);

struct LieAdjunctionReport {
  bool equivalence = true;
  Certificate round_trips;
};

// Checks the Lie correspondences on the supplied cochains.
LieAdjunctionReport lie_adjunction_check(const DgCoalgebra& c, const DgLieAlgebra& g,
                                         const std::vector<GradedMap>& cochains);

// s^{-1} on weight one, zero on longer words.
GradedMap universal_twisting(const BarCoalgebra& b, const SpacePtr& a);

struct DualityMap {
  GradedMap map;
  Complex source;
  Complex target;
  QuasiIsoVerdict verdict;
  bool approximate = false;
};

// Counit Omega B A -> A. A must sit in degrees >= 2 unless approximate.
DualityMap counit(const DgAlgebra& a, int bar_cap, int cobar_cap, DegreeRange window, bool approximate = false);
// Unit C -> B Omega C. C must sit in degrees >= 2 unless approximate.
DualityMap unit(const DgCoalgebra& c, int cobar_cap, int bar_cap, DegreeRange window, bool approximate = false);

bool concentrated_from(const GradedSpace& v, int degree);

struct NamedCoalgebra {
  std::string name;
  DgCoalgebra coalgebra;
};
struct NamedAlgebra {
  std::string name;
  DgAlgebra algebra;
};

struct DualityItem {
  std::string name;
  bool skipped = false;
  std::string reason;
  bool passed = false;
  std::map<std::string, std::string> data;
};

struct DualityReport {
  std::vector<DualityItem> items;
};

// Counits are checked on `window`, units on `unit_window`.
DualityReport verify_duality(const std::vector<NamedCoalgebra>& coalgebras, const std::vector<NamedAlgebra>& algebras,
                             int bar_cap, int cobar_cap, DegreeRange window, DegreeRange unit_window);

}  // namespace kdual
