#pragma once

#include <map>
#include <string>
#include <vector>

#include "kdual/graded.hpp"

namespace kdual {

// Smallest window covering every degree of X.
DegreeRange full_window(const Complex& x);
// Smallest window covering the degrees of both complexes.
DegreeRange full_window(const Complex& x, const Complex& y);

// dim H_n for n in the window. Throws InsufficientTruncation when the
// degrees lo-1..hi+1 are not all exact, unless approximate is set.
std::map<int, size_t> homology(const Complex& x, DegreeRange window, bool approximate = false);

struct HomologyWitness {
  size_t source_dim = 0;
  size_t target_dim = 0;
  size_t rank = 0;
};

struct QuasiIsoVerdict {
  bool chain_map = false;
  bool quasi_iso = false;
  std::map<int, HomologyWitness> witnesses;
  std::string reason;
};

// Checks f d = d f on source degrees lo..hi+1, then bijectivity of H(f).
QuasiIsoVerdict is_quasi_iso(const GradedMap& f, const Complex& x, const Complex& y, DegreeRange window,
                             bool approximate = false);

bool is_chain_map(const GradedMap& f, const Complex& x, const Complex& y);

// Increasing stages F_1 ⊆ ... ⊆ F_N of homogeneous subspaces.
struct Filtration {
  std::vector<Subspace> stages;
  size_t length() const { return stages.size(); }
  // F_n with F_0 = 0 and F_n = F_N for n > N.
  Subspace stage(const Field& f, size_t n) const;
};

bool is_d_stable(const Complex& x, const Filtration& f);
bool is_increasing(const Filtration& f);
bool is_exhaustive(const Complex& x, const Filtration& f);

// gr^n = F_n / F_{n-1}, n = 1..N.
std::vector<Complex> associated_graded(const Complex& x, const Filtration& f);

// Stage n is F_n (x) E inside C (x) E.
Filtration filtration_tensor(const Filtration& f, size_t dim_c, size_t dim_e);

struct FilteredVerdict {
  bool compatible = false;
  bool filtered_quasi_iso = false;
  std::vector<QuasiIsoVerdict> stages;
  std::string reason;
};

FilteredVerdict is_filtered_quasi_iso(const GradedMap& f, const Complex& x, const Filtration& fx, const Complex& y,
                                      const Filtration& fy);

// Map induced on F_n/F_{n-1}.
GradedMap graded_piece_map(const GradedMap& f, const Filtration& fx, const Filtration& fy, size_t n,
                           const Complex& grx, const Complex& gry);

}  // namespace kdual
