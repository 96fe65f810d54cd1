#pragma once

#include <functional>
#include <vector>

#include "kdual/dgcoalg.hpp"

namespace kdual {

// Component q_k : V^{(x)k} -> V of a coderivation, evaluated on a word of
// letters; returns a vector over the letters of degree (sum of degrees) - 1.
using CoderivationComponents = std::function<Vec(const std::vector<size_t>& letters)>;

// T^co_{<=cap}(V): words of length 1..cap with the cut coproduct and the
// coderivation
//   D(v1..vn) = sum (-1)^{|v1|+...+|v_{i-1}|} v1..q_k(v_i..v_{i+k-1})..vn.
struct CofreeCoalgebra {
  SpacePtr letters;
  WordIndex words;
  DgCoalgebra coalgebra;
};

CofreeCoalgebra cofree_tensor(const Field& f, const SpacePtr& letters, int cap, const CoderivationComponents& q = {},
                              DegreeRange letters_exact = {});

// Orbit sum of a sorted multiset of letters under the graded symmetric
// group action; zero when an odd letter repeats.
Vec symmetrize(const Field& f, const SpacePtr& letters, const WordIndex& words, const std::vector<size_t>& multiset);
// Requires characteristic 0 or p > cap.
Subspace symmetric_tensors(const Field& f, const SpacePtr& letters, const WordIndex& words);

struct SymmetricCoalgebra {
  CofreeCoalgebra ambient;
  Subspace sym;
  SubCoalgebra sub;
};
// S^co_{<=cap}(V) realised as invariant tensors inside T^co_{<=cap}(V).
SymmetricCoalgebra cofree_cocommutative(const Field& f, const SpacePtr& letters, int cap,
                                        const CoderivationComponents& q = {}, DegreeRange letters_exact = {});

enum class CofreeFlavor { Tensor, Cocommutative };
DgCoalgebra cofree_truncated(const Field& f, const SpacePtr& v, int cap, CofreeFlavor flavor);

// Coalgebra map C -> T^co_{<=cap}(V) lifting a degree 0 linear map
// phi : C -> V, namely sum_n phi^{(x)n} Delta^{(n-1)}. Throws
// InsufficientTruncation when a weight above the cap would be nonzero.
GradedMap cofree_lift(const DgCoalgebra& c, const GradedMap& phi, const CofreeCoalgebra& target);

// Weight-one component of a map into T^co.
GradedMap corestrict_weight_one(const GradedMap& g, const CofreeCoalgebra& target);

void require_char_above(const Field& f, int bound, const char* what);

}  // namespace kdual
