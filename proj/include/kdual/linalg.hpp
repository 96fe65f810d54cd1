#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "kdual/scalar.hpp"

namespace kdual {

// Sparse vector; zero entries are never stored.
using Vec = std::map<size_t, Scalar>;

void add_term(Vec& y, size_t i, const Scalar& c);
// y += a * x
void axpy(Vec& y, const Scalar& a, const Vec& x);
Vec scaled(const Vec& x, const Scalar& a);
Vec add(const Vec& x, const Vec& y);
Vec sub(const Vec& x, const Vec& y);
Vec negated(const Vec& x);
Vec unit(const Field& f, size_t i);
Scalar coeff(const Field& f, const Vec& v, size_t i);
// Index and coefficient of the smallest stored entry.
std::optional<size_t> leading_index(const Vec& v);

// Gauss-Jordan elimination with rows kept fully reduced. The pivot of a
// row is its smallest index and its coefficient there is 1. With tracking
// enabled every row remembers its expression in the inserted vectors.
class Echelon {
 public:
  explicit Echelon(Field f, bool track = false) : f_(std::move(f)), track_(track) {}

  const Field& field() const { return f_; }

  bool insert(const Vec& v);
  void insert_all(const std::vector<Vec>& vs) {
    for (const auto& v : vs) insert(v);
  }

  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return reduce(v).empty(); }
  size_t rank() const { return rows_.size(); }
  size_t inserted() const { return inserted_; }

  // Pivot coefficients of v: for v in the span these are its coordinates
  // in the reduced basis.
  Vec pivot_coords(const Vec& v) const;

  // Tracked mode only.
  const std::vector<Vec>& kernel() const { return kernel_; }
  std::optional<Vec> solve(const Vec& b) const;

  std::vector<size_t> pivots() const;
  std::vector<Vec> basis() const;
  const std::map<size_t, Vec>& rows() const { return rows_; }

 private:
  Field f_;
  bool track_;
  size_t inserted_ = 0;
  std::map<size_t, Vec> rows_;
  std::map<size_t, Vec> combos_;
  std::vector<Vec> kernel_;
};

using Subspace = Echelon;

size_t rank_of(const Field& f, const std::vector<Vec>& cols);
// Basis of the null space of the matrix with the given columns.
std::vector<Vec> kernel_of(const Field& f, const std::vector<Vec>& cols);
// x with sum x_k cols[k] = b, if one exists.
std::optional<Vec> solve_with(const Field& f, const std::vector<Vec>& cols, const Vec& b);

Subspace span_of(const Field& f, const std::vector<Vec>& vs);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
bool is_subspace_of(const Subspace& a, const Subspace& b);
bool same_subspace(const Subspace& a, const Subspace& b);

// Coordinates relative to an arbitrary independent family.
class CoordinateSystem {
 public:
  CoordinateSystem(Field f, const std::vector<Vec>& basis);
  size_t size() const { return n_; }
  std::optional<Vec> coords(const Vec& v) const { return ech_.solve(v); }
  // Throws PreconditionError when v is outside the span.
  Vec require(const Vec& v) const;
  bool independent() const { return ech_.kernel().empty(); }

 private:
  size_t n_;
  Echelon ech_;
};

}  // namespace kdual
