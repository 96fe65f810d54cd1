#pragma once

#include <string>
#include <vector>

#include "kdual/corpus.hpp"
#include "kdual/modelcheck.hpp"
#include "oracle.hpp"

namespace kt {

using namespace kdual;

inline SpacePtr space(std::vector<BasisElement> b) { return make_space(std::move(b)); }

inline Complex complex_of(const Field& f, std::vector<BasisElement> b, const std::vector<MapEntry>& d = {}) {
  auto v = make_space(std::move(b));
  return Complex(GradedMap(f, v, v, -1, columns_from_entries(v->dim(), d)));
}

inline GradedMap map_of(const Field& f, const SpacePtr& src, const SpacePtr& tgt, int degree,
                        const std::vector<MapEntry>& entries) {
  return GradedMap(f, src, tgt, degree, columns_from_entries(src->dim(), entries));
}

inline Vec vec(const Field& f, const std::vector<std::pair<size_t, long>>& terms) {
  Vec v;
  for (const auto& [i, s] : terms) add_term(v, i, f.from_int(s));
  return v;
}

// Acyclic pair (u:3, w:2, du = w) with zero coproduct.
inline DgCoalgebra acyclic_d(const Field& f) { return acyclic_coalgebra(f, 3); }

inline DgCoalgebra point(const Field& f, const std::string& name, int degree) {
  return make_coalgebra(f, {{name, degree}}, {}, {});
}

// Inclusion of the first summand.
inline GradedMap first_inclusion(const Field& f, const SpacePtr& a, const SpacePtr& sum) {
  std::vector<Vec> cols(a->dim());
  for (size_t i = 0; i < a->dim(); ++i) cols[i] = unit(f, i);
  return GradedMap(f, a, sum, 0, cols);
}

inline GradedMap inclusion_of(const Field& f, const SpacePtr& src, const SpacePtr& tgt, const std::vector<size_t>& idx) {
  std::vector<Vec> cols;
  for (size_t i : idx) cols.push_back(unit(f, i));
  return GradedMap(f, src, tgt, 0, cols);
}

// Raw tables of the corpus for the oracle.
inline oracle::Table table_c(const std::string& n) {
  if (n == "C1") return {{2}, {}, {}};
  if (n == "C2") return {{1, 2}, {}, {{1, 0, 0, 1}}};
  if (n == "C3") return {{2, 4}, {}, {{1, 0, 0, 1}}};
  if (n == "P2") return {{0, 0}, {}, {{1, 0, 0, 1}}};
  if (n == "D") return {{3, 2}, {{0, 1, 1}}, {}};
  throw std::out_of_range(n);
}

inline oracle::Table table_a(const std::string& n) {
  if (n == "A1") return {{2}, {}, {}};
  if (n == "A2") return {{1, 2}, {}, {{0, 0, 1, 1}}};
  if (n == "A3") return {{-1, -2}, {}, {}};
  if (n == "A3p") return {{-1, -2}, {}, {{0, 0, 1, 1}}};
  if (n == "A4") return {{2, 4}, {}, {{0, 0, 1, 1}}};
  if (n == "A5") return {{3}, {}, {}};
  throw std::out_of_range(n);
}

inline const std::vector<std::string>& algebra_names() {
  static const std::vector<std::string> n{"A1", "A2", "A3", "A3p", "A4", "A5"};
  return n;
}

inline CorpusSizes small_sizes() {
  CorpusSizes s;
  s.coalgebras = s.cocommutative = s.algebras = s.lie_algebras = s.free_algebras = 10;
  s.injections = s.surjections = 10;
  s.quasi_isos = s.filtered_weqs = 5;
  return s;
}

}  // namespace kt
