#pragma once

#include <optional>

#include "kdual/dgcoalg.hpp"
#include "kdual/dglie.hpp"

namespace kdual {

// {C,A}: the hom complex with product (f*g)(c) = sum (-1)^{|g||c1|} f(c1) g(c2).
struct ConvolutionAlgebra {
  SpacePtr coalgebra_space;
  SpacePtr algebra_space;
  DgAlgebra algebra;

  Vec from_map(const GradedMap& f) const { return to_hom_vector(f); }
  GradedMap to_map(const Vec& v, int degree) const;
};

ConvolutionAlgebra convolution_algebra(const DgCoalgebra& c, const DgAlgebra& a);

struct ConvolutionLie {
  SpacePtr coalgebra_space;
  SpacePtr lie_space;
  DgLieAlgebra lie;

  GradedMap to_map(const Vec& v, int degree) const;
};

// Throws PreconditionError unless C is cocommutative.
ConvolutionLie convolution_lie(const DgCoalgebra& c, const DgLieAlgebra& g);

bool is_twisting_cochain(const ConvolutionAlgebra& conv, const GradedMap& tau);
std::vector<GradedMap> twisting_cochains(const ConvolutionAlgebra& conv, size_t limit = 1u << 22);
bool is_lie_twisting_cochain(const ConvolutionLie& conv, const GradedMap& tau);
std::vector<GradedMap> lie_twisting_cochains(const ConvolutionLie& conv, size_t limit = 1u << 22);

// {i,A} : {C',A} -> {C,A}, f -> f i.
GradedMap convolution_precompose(const GradedMap& i, const ConvolutionAlgebra& source, const ConvolutionAlgebra& target);
// {C,j} : {C,A} -> {C,A'}, f -> j f.
GradedMap convolution_postcompose(const GradedMap& j, const ConvolutionAlgebra& source, const ConvolutionAlgebra& target);

struct PullbackProductReport {
  ConvolutionAlgebra source;  // {C',A}
  PullbackAlgebra pullback;   // {C,A} x_{C,A'} {C',A'}
  GradedMap map;
  bool surjective = false;
  QuasiIsoVerdict weak_equivalence;
};

// i : C -> C' injective, j : A -> A' surjective.
PullbackProductReport pullback_product_map(const GradedMap& i, const DgCoalgebra& c, const DgCoalgebra& cp,
                                           const GradedMap& j, const DgAlgebra& a, const DgAlgebra& ap);

}  // namespace kdual
