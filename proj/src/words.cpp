#include "kdual/words.hpp"

namespace kdual {

namespace {
constexpr size_t kMaxWords = 4'000'000;
}

WordIndex::WordIndex(size_t letters, int cap) : n_(letters), cap_(cap) {
  if (cap < 0) throw PreconditionError("negative weight cap");
  offset_.push_back(0);
  size_t block = 1;
  for (int len = 1; len <= cap; ++len) {
    block *= n_;
    if (offset_.back() + block > kMaxWords) throw Unsupported("word space too large");
    offset_.push_back(offset_.back() + block);
  }
}

size_t WordIndex::index(const std::vector<size_t>& w) const {
  if (w.empty() || w.size() > static_cast<size_t>(cap_)) throw PreconditionError("word length outside 1..cap");
  size_t r = 0;
  for (size_t l : w) r = r * n_ + l;
  return offset_[w.size() - 1] + r;
}

size_t WordIndex::length(size_t idx) const {
  size_t len = 1;
  while (idx >= offset_[len]) ++len;
  return len;
}

std::vector<size_t> WordIndex::word(size_t idx) const {
  size_t len = length(idx);
  size_t r = idx - offset_[len - 1];
  std::vector<size_t> w(len);
  for (size_t i = len; i-- > 0;) {
    w[i] = r % n_;
    r /= n_;
  }
  return w;
}

SpacePtr word_space(const SpacePtr& letters, const WordIndex& words, const std::string& sep) {
  std::vector<BasisElement> b;
  b.reserve(words.size());
  for (size_t i = 0; i < words.size(); ++i) {
    auto w = words.word(i);
    std::string name;
    int deg = 0;
    for (size_t k = 0; k < w.size(); ++k) {
      if (k) name += sep;
      const std::string& l = letters->name(w[k]);
      // Labels that already contain the separator are bracketed.
      name += l.find(sep) == std::string::npos ? l : "(" + l + ")";
      deg += letters->degree(w[k]);
    }
    b.push_back({std::move(name), deg});
  }
  return make_space(std::move(b));
}

size_t enumeration_size(const Field& f, size_t dims, size_t limit) {
  if (f.is_rational()) throw Unsupported("enumeration over the rationals is not implemented");
  size_t total = 1;
  for (size_t i = 0; i < dims; ++i) {
    total *= f.characteristic();
    if (total > limit) throw Unsupported("enumeration exceeds the size guard");
  }
  return total;
}

void enumerate_vectors(const Field& f, const std::vector<size_t>& support, size_t limit,
                       const std::function<void(const Vec&)>& fn) {
  size_t total = enumeration_size(f, support.size(), limit);
  uint32_t p = f.characteristic();
  std::vector<uint32_t> digits(support.size(), 0);
  for (size_t count = 0; count < total; ++count) {
    Vec v;
    for (size_t k = 0; k < digits.size(); ++k)
      if (digits[k]) v.emplace(support[k], f.from_int(digits[k]));
    fn(v);
    for (size_t k = 0; k < digits.size(); ++k) {
      if (++digits[k] < p) break;
      digits[k] = 0;
    }
  }
}

}  // namespace kdual
