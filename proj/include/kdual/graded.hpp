#pragma once

#include <climits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kdual/linalg.hpp"

namespace kdual {

struct BasisElement {
  std::string name;
  int degree = 0;
  bool operator==(const BasisElement&) const = default;
};

class GradedSpace {
 public:
  GradedSpace() = default;
  // Throws PreconditionError on duplicate labels.
  explicit GradedSpace(std::vector<BasisElement> basis);

  size_t dim() const { return basis_.size(); }
  const BasisElement& at(size_t i) const { return basis_.at(i); }
  int degree(size_t i) const { return basis_[i].degree; }
  const std::string& name(size_t i) const { return basis_[i].name; }
  const std::vector<BasisElement>& elements() const { return basis_; }

  std::optional<size_t> find(const std::string& name) const;
  const std::vector<size_t>& in_degree(int d) const;
  size_t dim_in_degree(int d) const { return in_degree(d).size(); }
  std::vector<int> degrees() const;
  std::optional<int> min_degree() const;
  std::optional<int> max_degree() const;

  bool operator==(const GradedSpace& o) const { return basis_ == o.basis_; }

 private:
  std::vector<BasisElement> basis_;
  std::map<int, std::vector<size_t>> by_degree_;
  std::unordered_map<std::string, size_t> by_name_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

SpacePtr make_space(std::vector<BasisElement> basis);
SpacePtr empty_space();
bool same_space(const SpacePtr& a, const SpacePtr& b);
// Basis index i * dim(b) + j for the pair (i, j).
SpacePtr tensor_space(const SpacePtr& a, const SpacePtr& b);
// (shift(V,k))_n = V_{n-k}.
SpacePtr shift_space(const SpacePtr& v, int k);
std::string shift_name(const std::string& name, int k);
SpacePtr direct_sum_space(const SpacePtr& a, const SpacePtr& b);

// Degree of a vector when all its terms share one degree.
std::optional<int> vector_degree(const GradedSpace& v, const Vec& x);

class GradedMap {
 public:
  GradedMap(Field f, SpacePtr src, SpacePtr tgt, int degree);
  // Throws DegreeError when a column is not of the stated degree.
  GradedMap(Field f, SpacePtr src, SpacePtr tgt, int degree, std::vector<Vec> cols);
  static GradedMap unchecked(Field f, SpacePtr src, SpacePtr tgt, int degree, std::vector<Vec> cols);

  const Field& field() const { return f_; }
  const SpacePtr& source() const { return src_; }
  const SpacePtr& target() const { return tgt_; }
  int degree() const { return degree_; }
  const Vec& col(size_t i) const { return cols_.at(i); }
  const std::vector<Vec>& cols() const { return cols_; }
  void set_col(size_t i, Vec v);

  Vec apply(const Vec& x) const;
  // this after g
  GradedMap compose(const GradedMap& g) const;
  GradedMap operator+(const GradedMap& o) const;
  GradedMap operator-(const GradedMap& o) const;
  GradedMap scaled(const Scalar& c) const;

  bool is_zero() const;
  bool operator==(const GradedMap& o) const;

  size_t rank() const;
  // Rank of the block leaving source degree n.
  size_t rank_in_degree(int n) const;
  std::vector<Vec> cols_in_degree(int n) const;
  std::vector<std::string> homogeneity_violations() const;

 private:
  Field f_;
  SpacePtr src_, tgt_;
  int degree_;
  std::vector<Vec> cols_;
};

GradedMap identity_map(const Field& f, const SpacePtr& v);
GradedMap zero_map(const Field& f, const SpacePtr& src, const SpacePtr& tgt, int degree);
// (f (x) g)(x (x) y) = (-1)^{|g||x|} f(x) (x) g(y)
GradedMap tensor_maps(const GradedMap& f, const GradedMap& g);
// x (x) y -> (-1)^{|x||y|} y (x) x
GradedMap braid(const Field& f, const SpacePtr& v, const SpacePtr& w);
// V -> shift(V,k), v -> s^k v; degree k.
GradedMap suspension(const Field& f, const SpacePtr& v, int k);
// Block matrix [f, g] : V (+) W -> X.
GradedMap hstack(const GradedMap& f, const GradedMap& g);

struct DegreeRange {
  int lo = INT_MIN;
  int hi = INT_MAX;
  bool contains(long long n) const { return n >= lo && n <= hi; }
  bool covers(long long a, long long b) const { return a > b || (a >= lo && b <= hi); }
  bool empty() const { return lo > hi; }
  bool everything() const { return lo == INT_MIN && hi == INT_MAX; }
  bool operator==(const DegreeRange&) const = default;
};

DegreeRange intersect(const DegreeRange& a, const DegreeRange& b);
// Clamps to the int range with the sentinels preserved.
int clamp_degree(long long n);

// Chain complex with a degree -1 differential. `exact` is the range of
// degrees in which a truncated object agrees with the one it models.
class Complex {
 public:
  explicit Complex(GradedMap d, DegreeRange exact = {});
  static Complex zero_differential(const Field& f, const SpacePtr& v);

  const GradedMap& d() const { return d_; }
  const SpacePtr& space() const { return d_.source(); }
  const Field& field() const { return d_.field(); }
  size_t dim() const { return space()->dim(); }
  const DegreeRange& exact() const { return exact_; }
  void set_exact(DegreeRange r) { exact_ = r; }
  bool d_squared_zero() const { return d_.compose(d_).is_zero(); }

 private:
  GradedMap d_;
  DegreeRange exact_;
};

Complex tensor(const Complex& x, const Complex& y);
Complex shift(const Complex& x, int k);
Complex direct_sum(const Complex& x, const Complex& y);
// Basis E_{y,x} at index ix * dim(Y) + iy, degree |y| - |x|;
// d f = d_Y f - (-1)^{|f|} f d_X.
Complex hom_complex(const Complex& x, const Complex& y);
Vec to_hom_vector(const GradedMap& f);
GradedMap from_hom_vector(const Field& fld, const SpacePtr& x, const SpacePtr& y, int degree, const Vec& v);

}  // namespace kdual
