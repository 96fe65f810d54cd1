#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kdual/graded.hpp"

namespace kdual {

// Words of length 1..cap in n letters. Length-one words come first, so the
// word of a single letter l has index l; longer words are ordered by
// length and then lexicographically.
class WordIndex {
 public:
  WordIndex() = default;
  WordIndex(size_t letters, int cap);

  size_t letters() const { return n_; }
  int cap() const { return cap_; }
  size_t size() const { return offset_.empty() ? 0 : offset_.back(); }
  size_t count_of_length(size_t len) const { return offset_[len] - offset_[len - 1]; }
  size_t first_of_length(size_t len) const { return offset_[len - 1]; }

  size_t index(const std::vector<size_t>& w) const;
  std::vector<size_t> word(size_t idx) const;
  size_t length(size_t idx) const;

 private:
  size_t n_ = 0;
  int cap_ = 0;
  std::vector<size_t> offset_;
};

// Labels are the letter labels joined by sep; degrees add.
SpacePtr word_space(const SpacePtr& letters, const WordIndex& words, const std::string& sep);

// Calls fn on every vector supported on `support` over F_p, the zero
// vector first. Throws Unsupported over Q or when p^|support| > limit.
void enumerate_vectors(const Field& f, const std::vector<size_t>& support, size_t limit,
                       const std::function<void(const Vec&)>& fn);
size_t enumeration_size(const Field& f, size_t dims, size_t limit);

}  // namespace kdual
