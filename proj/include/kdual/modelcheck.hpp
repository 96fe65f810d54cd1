#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kdual/convolution.hpp"
#include "kdual/dglie.hpp"

namespace kdual {

// Induced map of a pushout-product or pullback-product square, with the
// verdicts computed from it.
struct LiftingProblemReport {
  LiftingProblemReport(std::string k, size_t s, size_t o, size_t t, GradedMap m)
      : kind(std::move(k)), source_dim(s), object_dim(o), target_dim(t), map(std::move(m)) {}

  std::string kind;
  size_t source_dim = 0;
  size_t object_dim = 0;
  size_t target_dim = 0;
  GradedMap map;
  bool injective = false;
  bool surjective = false;
  size_t corank = 0;
  QuasiIsoVerdict weq;
  bool filtered_weq = false;
  std::string reason;
};

// (C' (x) D) +_{C (x) D} (C (x) D') -> C' (x) D'. Throws PreconditionError
// unless i and j are injective coalgebra maps.
LiftingProblemReport pushout_product(const GradedMap& i, const DgCoalgebra& c, const DgCoalgebra& cp,
                                     const GradedMap& j, const DgCoalgebra& d, const DgCoalgebra& dp);

struct FqiReport {
  bool source_admissible = false;
  bool target_admissible = false;
  FilteredVerdict verdict;
  bool holds() const { return source_admissible && target_admissible && verdict.filtered_quasi_iso; }
};

// f (x) 1_E with the filtrations F (x) E on both sides.
FqiReport tensor_preserves_fqi(const GradedMap& f, const DgCoalgebra& c, const Filtration& fc, const DgCoalgebra& d,
                               const Filtration& fd, const DgCoalgebra& e);

// {C',A} -> {C,A} x_{C,A'} {C',A'} for i : C -> C' injective and
// j : A -> A' surjective.
LiftingProblemReport pullback_product(const GradedMap& i, const DgCoalgebra& c, const DgCoalgebra& cp,
                                      const GradedMap& j, const DgAlgebra& a, const DgAlgebra& ap);

struct CoalgebraInjection {
  GradedMap map;
  DgCoalgebra source;
  DgCoalgebra target;
};

struct AlgebraSurjection {
  GradedMap map;
  DgAlgebra source;
  DgAlgebra target;
};

struct AlgebraQuasiIso {
  GradedMap map;
  DgAlgebra source;
  DgAlgebra target;
};

struct FilteredWeq {
  GradedMap map;
  DgCoalgebra source;
  DgCoalgebra target;
  Filtration source_filtration;
  Filtration target_filtration;
};

struct CorpusSizes {
  size_t coalgebras = 50;
  size_t cocommutative = 50;
  size_t algebras = 50;
  size_t lie_algebras = 50;
  size_t free_algebras = 50;
  size_t injections = 100;
  size_t surjections = 100;
  size_t quasi_isos = 20;
  size_t filtered_weqs = 20;
  int nilpotency = 3;
  size_t max_dim = 6;
  size_t retries = 200;
};

struct RandomCorpus {
  std::vector<DgCoalgebra> coalgebras;
  std::vector<DgCoalgebra> cocommutative;
  std::vector<DgAlgebra> algebras;
  std::vector<DgLieAlgebra> lie_algebras;
  std::vector<FreeDgAlgebra> free_algebras;
  std::vector<CoalgebraInjection> injections;
  std::vector<AlgebraSurjection> surjections;
  std::vector<AlgebraQuasiIso> quasi_isos;
  std::vector<FilteredWeq> filtered_weqs;
  size_t rejected = 0;
};

// Deterministic in (field, seed, sizes). Every object is re-validated before
// it is kept; throws Error when the retry budget runs out.
RandomCorpus random_corpus(const Field& f, uint64_t seed, const CorpusSizes& sizes = {});

// Acyclic pair u, w with du = w, |u| = n, zero coproduct.
DgCoalgebra acyclic_coalgebra(const Field& f, int n);
DgAlgebra acyclic_algebra(const Field& f, int n);

}  // namespace kdual
