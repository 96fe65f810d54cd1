#pragma once

#include "kdual/barcobar.hpp"

namespace kdual {

// f : C (x) A -> B of degree 0 with
// f(c (x) a a') = sum (-1)^{|c2||a|} f(c1 (x) a) f(c2 (x) a'), and a chain map.
Certificate is_measuring(const DgCoalgebra& c, const DgAlgebra& a, const DgAlgebra& b, const GradedMap& f);
// Bracket version of the same identity.
Certificate is_lie_measuring(const DgCoalgebra& c, const DgLieAlgebra& g, const DgLieAlgebra& h, const GradedMap& f);

// A -> {C,B}, a -> (c -> (-1)^{|a||c|} f(c (x) a)).
GradedMap measuring_adjoint(const DgCoalgebra& c, const DgAlgebra& a, const ConvolutionAlgebra& cb, const GradedMap& f);
GradedMap measuring_from_adjoint(const DgCoalgebra& c, const DgAlgebra& a, const DgAlgebra& b, const GradedMap& phi);

// Unique extension of f : C (x) V -> A to C (x) T_0 V:
// f(c (x) v1..vk) = sum (-1)^{sum_{i<j}|c_j||v_i|} f(c1 (x) v1) ... f(ck (x) vk).
GradedMap extend_measuring(const DgCoalgebra& c, const FreeDgAlgebra& t, const DgAlgebra& a, const GradedMap& f);
GradedMap restrict_measuring(const DgCoalgebra& c, const FreeDgAlgebra& t, const GradedMap& f);

// C |> T_0 V = T_0(C (x) V) with its universal measuring u.
struct Tensoring {
  FreeDgAlgebra algebra;
  GradedMap u;  // C (x) T_0 V -> C |> T_0 V
};
Tensoring tensoring_free(const DgCoalgebra& c, const FreeDgAlgebra& f);

struct LieTensoring {
  FreeLie lie;
  GradedMap u;  // C (x) L -> C |> L
};
// C must be cocommutative.
LieTensoring tensoring_free_lie(const DgCoalgebra& c, const FreeLie& f);

// Algebra map C |> F -> B with generator images f(c (x) v).
GradedMap alg_map_from_measuring(const Tensoring& t, const DgCoalgebra& c, const FreeDgAlgebra& f, const DgAlgebra& b,
                                 const GradedMap& meas);
GradedMap measuring_from_alg_map(const Tensoring& t, const GradedMap& g);
// C |> phi for an algebra map phi : F -> F' of free algebras.
GradedMap tensoring_map(const DgCoalgebra& c, const FreeDgAlgebra& f, const Tensoring& src, const Tensoring& tgt,
                        const GradedMap& phi);

struct CobarTensoringIso {
  FreeDgAlgebra omega;
  Tensoring tensoring;
  GradedMap iso;
  Certificate certificate;
};
// ~c -> (-1)^{|c|} c (x) x.
CobarTensoringIso identify_cobar_as_tensoring(const DgCoalgebra& c, int cap);

struct LieCobarTensoringIso {
  FreeLie omega;
  LieTensoring tensoring;
  GradedMap iso;
  Certificate certificate;
};
LieCobarTensoringIso identify_lie_cobar_as_tensoring(const DgCoalgebra& c, int cap);

// Truncated enrichment e_{<=W}(A,B) inside T^co_{<=W}(hom(V,B)) or
// T^co_{<=W}(hom(A,B)); letter E_{b,v} has index v * dim B + b.
struct Enrichment {
  CofreeCoalgebra cofree;
  SubCoalgebra sub;
  SpacePtr source;  // V or A
  SpacePtr target;  // B
  std::optional<Subspace> span;
};

Enrichment enrichment_free(const FreeDgAlgebra& f, const DgAlgebra& b, int cap);
Enrichment enrichment_general(const DgAlgebra& a, const DgAlgebra& b, int cap);
// Graded symmetric flavor for a free Lie algebra with quadratic differential.
Enrichment enrichment_free_lie(const FreeLie& f, const DgLieAlgebra& g, int cap);

struct BarEnrichmentIso {
  BarCoalgebra bar;
  Enrichment enrichment;
  GradedMap iso;  // enrichment -> bar
  Certificate certificate;
};
// E_{a,x} -> (-1)^{|a|+1} s a on every letter.
BarEnrichmentIso identify_bar_as_enrichment(const DgAlgebra& a, int cap);
BarEnrichmentIso identify_lie_bar_as_enrichment(const DgLieAlgebra& g, int cap);

// Weight-one evaluation e(A,B) (x) A -> B.
GradedMap evaluation_measuring(const Enrichment& e, const DgAlgebra& a, const DgAlgebra& b);
// Word pairing e(T_0 V, B) (x) T_0 V -> B.
GradedMap evaluation_measuring_free(const Enrichment& e, const FreeDgAlgebra& f, const DgAlgebra& b);
// e(A,j) : e(A,B) -> e(A,B') for the general flavor.
GradedMap enrichment_postcompose(const Enrichment& e, const Enrichment& e2, const GradedMap& j);

// Enumerations over F_p.
std::vector<GradedMap> enumerate_measurings(const DgCoalgebra& c, const DgAlgebra& a, const DgAlgebra& b,
                                            size_t limit = 1u << 20);
std::vector<GradedMap> coalgebra_maps(const DgCoalgebra& c, const DgCoalgebra& d, size_t limit = 1u << 20);
std::vector<GradedMap> coalgebra_maps_to_enrichment(const DgCoalgebra& c, const Enrichment& e, size_t limit = 1u << 20);

struct InternalHom {
  CofreeCoalgebra cofree;
  SubCoalgebra sub;
  std::optional<Subspace> span;
};
// Largest subcoalgebra of T^co_{<=W}(hom(C,D)) equalising the maps into
// hom(C, T^co_{<=W} D) induced by e -> rho e and by iterated evaluation.
InternalHom internal_hom_conil(const DgCoalgebra& c, const DgCoalgebra& d, int cap);
std::vector<GradedMap> coalgebra_maps_to_internal_hom(const DgCoalgebra& c0, const InternalHom& h,
                                                      size_t limit = 1u << 20);

struct SweedlerCounts {
  size_t measurings = 0;
  size_t from_tensoring = 0;
  size_t to_convolution = 0;
  bool round_trips = true;
};
// |DGA(C|>F, B)| = |Meas(C,F,B)| = |DGA(F,{C,B})|.
SweedlerCounts tensoring_counts(const DgCoalgebra& c, const FreeDgAlgebra& f, const DgAlgebra& b,
                                size_t limit = 1u << 20);

// Associator of the tensoring, its u-square, the coherence face, the
// pentagon and hexagon of the coalgebra tensor product.
Certificate associator_and_coherence(const DgCoalgebra& c, const DgCoalgebra& d, const DgCoalgebra& e,
                                     const FreeDgAlgebra& f);

}  // namespace kdual
