#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "kdual/barcobar.hpp"

namespace kdual {

// Entry (i, j, s): the image of e_i has coefficient s on e_j.
using MapEntry = std::tuple<size_t, size_t, Scalar>;
// Entry (i, j, k, s): e_i . e_j has coefficient s on e_k.
using ProductEntry = std::tuple<size_t, size_t, size_t, Scalar>;
// Entry (i, a, b, s): Delta e_i has coefficient s on e_a (x) e_b.
using CoproductEntry = std::tuple<size_t, size_t, size_t, Scalar>;

std::vector<Vec> columns_from_entries(size_t n, const std::vector<MapEntry>& entries);
DgAlgebra make_algebra(const Field& f, std::vector<BasisElement> basis, const std::vector<MapEntry>& d,
                       const std::vector<ProductEntry>& mu);
DgCoalgebra make_coalgebra(const Field& f, std::vector<BasisElement> basis, const std::vector<MapEntry>& d,
                           const std::vector<CoproductEntry>& delta);
DgLieAlgebra make_lie(const Field& f, std::vector<BasisElement> basis, const std::vector<MapEntry>& d,
                      const std::vector<ProductEntry>& bracket);

struct NamedLie {
  std::string name;
  DgLieAlgebra lie;
};

struct Corpus {
  std::vector<NamedCoalgebra> coalgebras;
  std::vector<NamedAlgebra> algebras;
  std::vector<NamedLie> lies;

  const DgCoalgebra& coalgebra(const std::string& name) const;
  const DgAlgebra& algebra(const std::string& name) const;
  const DgLieAlgebra& lie(const std::string& name) const;
};

// C1 (x:2), C2 (x:1, y:2, Dy = x x), C3 (x:2, y:4, Dy = x x),
// P2 (p:0, q:0, Dq = p p), D (u:3, w:2, du = w), G (g:0, Dg = g g);
// A1 (a:2), A2 (a:1, b:2, aa = b), A3 (a:-1, b:-2), A3p (A3 with aa = b),
// A4 (a:2, b:4, aa = b), A5 (a:3); g1 (p:1, z:2, [p,p] = z),
// g1s (p:-1, z:-2, [p,p] = z).
Corpus builtin_corpus(const Field& f);

// Conilpotent coalgebras of the corpus, in order.
std::vector<std::string> conilpotent_names();

}  // namespace kdual
