#include "kdual/corpus.hpp"

namespace kdual {

std::vector<Vec> columns_from_entries(size_t n, const std::vector<MapEntry>& entries) {
  std::vector<Vec> cols(n);
  for (const auto& [i, j, s] : entries) add_term(cols.at(i), j, s);
  return cols;
}

DgAlgebra make_algebra(const Field& f, std::vector<BasisElement> basis, const std::vector<MapEntry>& d,
                       const std::vector<ProductEntry>& mu) {
  auto v = make_space(std::move(basis));
  ProductTable table;
  for (const auto& [i, j, k, s] : mu) add_term(table[{i, j}], k, s);
  for (auto it = table.begin(); it != table.end();) it = it->second.empty() ? table.erase(it) : std::next(it);
  return DgAlgebra(Complex(GradedMap(f, v, v, -1, columns_from_entries(v->dim(), d))), std::move(table));
}

DgCoalgebra make_coalgebra(const Field& f, std::vector<BasisElement> basis, const std::vector<MapEntry>& d,
                           const std::vector<CoproductEntry>& delta) {
  auto v = make_space(std::move(basis));
  size_t n = v->dim();
  std::vector<Vec> cop(n);
  for (const auto& [i, a, b, s] : delta) add_term(cop.at(i), a * n + b, s);
  return DgCoalgebra(Complex(GradedMap(f, v, v, -1, columns_from_entries(n, d))), std::move(cop));
}

DgLieAlgebra make_lie(const Field& f, std::vector<BasisElement> basis, const std::vector<MapEntry>& d,
                      const std::vector<ProductEntry>& bracket) {
  auto v = make_space(std::move(basis));
  ProductTable table;
  for (const auto& [i, j, k, s] : bracket) add_term(table[{i, j}], k, s);
  for (auto it = table.begin(); it != table.end();) it = it->second.empty() ? table.erase(it) : std::next(it);
  return DgLieAlgebra(Complex(GradedMap(f, v, v, -1, columns_from_entries(v->dim(), d))), std::move(table));
}

namespace {

template <class T>
const T& lookup(const std::vector<T>& xs, const std::string& name) {
  for (const auto& x : xs)
    if (x.name == name) return x;
  throw PreconditionError("unknown corpus object " + name);
}

}  // namespace

const DgCoalgebra& Corpus::coalgebra(const std::string& name) const { return lookup(coalgebras, name).coalgebra; }
const DgAlgebra& Corpus::algebra(const std::string& name) const { return lookup(algebras, name).algebra; }
const DgLieAlgebra& Corpus::lie(const std::string& name) const { return lookup(lies, name).lie; }

Corpus builtin_corpus(const Field& f) {
  Scalar one = f.one();
  Corpus c;
  c.coalgebras = {
      {"C1", make_coalgebra(f, {{"x", 2}}, {}, {})},
      {"C2", make_coalgebra(f, {{"x", 1}, {"y", 2}}, {}, {{1, 0, 0, one}})},
      {"C3", make_coalgebra(f, {{"x", 2}, {"y", 4}}, {}, {{1, 0, 0, one}})},
      {"P2", make_coalgebra(f, {{"p", 0}, {"q", 0}}, {}, {{1, 0, 0, one}})},
      {"D", make_coalgebra(f, {{"u", 3}, {"w", 2}}, {{0, 1, one}}, {})},
      {"G", make_coalgebra(f, {{"g", 0}}, {}, {{0, 0, 0, one}})},
  };
  c.algebras = {
      {"A1", make_algebra(f, {{"a", 2}}, {}, {})},
      {"A2", make_algebra(f, {{"a", 1}, {"b", 2}}, {}, {{0, 0, 1, one}})},
      {"A3", make_algebra(f, {{"a", -1}, {"b", -2}}, {}, {})},
      {"A3p", make_algebra(f, {{"a", -1}, {"b", -2}}, {}, {{0, 0, 1, one}})},
      {"A4", make_algebra(f, {{"a", 2}, {"b", 4}}, {}, {{0, 0, 1, one}})},
      {"A5", make_algebra(f, {{"a", 3}}, {}, {})},
  };
  c.lies = {
      {"g1", make_lie(f, {{"p", 1}, {"z", 2}}, {}, {{0, 0, 1, one}})},
      {"g1s", make_lie(f, {{"p", -1}, {"z", -2}}, {}, {{0, 0, 1, one}})},
  };
  return c;
}

std::vector<std::string> conilpotent_names() { return {"C1", "C2", "C3", "P2", "D"}; }

}  // namespace kdual
