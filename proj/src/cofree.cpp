#include "kdual/cofree.hpp"

#include <algorithm>
#include <map>

namespace kdual {

void require_char_above(const Field& f, int bound, const char* what) {
  if (!f.is_rational() && static_cast<long long>(f.characteristic()) <= bound)
    throw CharacteristicError(std::string(what) + " needs characteristic 0 or p > " + std::to_string(bound));
}

CofreeCoalgebra cofree_tensor(const Field& f, const SpacePtr& letters, int cap, const CoderivationComponents& q,
                              DegreeRange letters_exact) {
  if (cap < 1) throw PreconditionError("weight cap must be at least 1");
  WordIndex words(letters->dim(), cap);
  auto sp = word_space(letters, words, "|");
  size_t n = words.size();
  std::map<std::vector<size_t>, Vec> memo;
  auto component = [&](const std::vector<size_t>& w) -> const Vec& {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    return memo.emplace(w, q ? q(w) : Vec{}).first->second;
  };
  std::vector<Vec> dcols(n), delta(n);
  for (size_t idx = 0; idx < n; ++idx) {
    auto w = words.word(idx);
    size_t len = w.size();
    for (size_t k = 1; k < len; ++k) {
      std::vector<size_t> a(w.begin(), w.begin() + k), b(w.begin() + k, w.end());
      delta[idx].emplace(words.index(a) * n + words.index(b), f.one());
    }
    if (!q) continue;
    long long before = 0;
    for (size_t i = 0; i < len; ++i) {
      Scalar s = sign(f, before);
      for (size_t k = 1; i + k <= len; ++k) {
        std::vector<size_t> sub(w.begin() + i, w.begin() + i + k);
        for (const auto& [l, c] : component(sub)) {
          std::vector<size_t> nw(w.begin(), w.begin() + i);
          nw.push_back(l);
          nw.insert(nw.end(), w.begin() + i + k, w.end());
          add_term(dcols[idx], words.index(nw), s * c);
        }
      }
      before += letters->degree(w[i]);
    }
  }
  Complex cx(GradedMap(f, sp, sp, -1, std::move(dcols)), free_exact_range(*letters, cap, letters_exact));
  return {letters, words, DgCoalgebra(std::move(cx), std::move(delta))};
}

Vec symmetrize(const Field& f, const SpacePtr& letters, const WordIndex& words, const std::vector<size_t>& multiset) {
  auto m = multiset;
  std::sort(m.begin(), m.end());
  for (size_t i = 1; i < m.size(); ++i)
    if (m[i] == m[i - 1] && is_odd(letters->degree(m[i]))) return {};
  Vec out;
  auto perm = m;
  do {
    long long e = 0;
    for (size_t i = 0; i < perm.size(); ++i)
      for (size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) e += static_cast<long long>(letters->degree(perm[i])) * letters->degree(perm[j]);
    add_term(out, words.index(perm), sign(f, e));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Subspace symmetric_tensors(const Field& f, const SpacePtr& letters, const WordIndex& words) {
  require_char_above(f, words.cap(), "graded symmetric tensors");
  Subspace s(f);
  for (size_t idx = 0; idx < words.size(); ++idx) {
    auto w = words.word(idx);
    if (!std::is_sorted(w.begin(), w.end())) continue;
    Vec v = symmetrize(f, letters, words, w);
    if (!v.empty()) s.insert(v);
  }
  return s;
}

SymmetricCoalgebra cofree_cocommutative(const Field& f, const SpacePtr& letters, int cap,
                                        const CoderivationComponents& q, DegreeRange letters_exact) {
  auto amb = cofree_tensor(f, letters, cap, q, letters_exact);
  auto sym = symmetric_tensors(f, letters, amb.words);
  auto sub = restrict_coalgebra(amb.coalgebra, sym);
  sub.coalgebra.cx.set_exact(amb.coalgebra.cx.exact());
  return {amb, sym, sub};
}

DgCoalgebra cofree_truncated(const Field& f, const SpacePtr& v, int cap, CofreeFlavor flavor) {
  if (flavor == CofreeFlavor::Tensor) return cofree_tensor(f, v, cap).coalgebra;
  return cofree_cocommutative(f, v, cap).sub.coalgebra;
}

GradedMap cofree_lift(const DgCoalgebra& c, const GradedMap& phi, const CofreeCoalgebra& target) {
  if (phi.degree() != 0) throw DegreeError("cofree lift needs a degree 0 map");
  const Field& f = c.field();
  const auto& words = target.words;
  size_t cap = static_cast<size_t>(words.cap());
  std::vector<Vec> cols(c.dim());
  for (size_t i = 0; i < c.dim(); ++i) {
    for (size_t n = 1; n <= cap + 1; ++n) {
      auto terms = iterated_coproduct(c, unit(f, i), n - 1);
      if (terms.empty()) break;
      MultiVec image;
      for (const auto& [key, s] : terms) {
        // Expand phi(c1) (x) ... (x) phi(cn) into words.
        std::vector<std::pair<std::vector<size_t>, Scalar>> acc{{{}, s}};
        for (size_t k : key) {
          std::vector<std::pair<std::vector<size_t>, Scalar>> next;
          for (const auto& [w, a] : acc)
            for (const auto& [l, b] : phi.col(k)) {
              auto nw = w;
              nw.push_back(l);
              next.push_back({std::move(nw), a * b});
            }
          acc = std::move(next);
        }
        for (auto& [w, a] : acc) {
          auto it = image.find(w);
          if (it == image.end()) {
            image.emplace(std::move(w), a);
          } else {
            it->second += a;
            if (it->second.is_zero()) image.erase(it);
          }
        }
      }
      if (n > cap) {
        if (!image.empty()) throw InsufficientTruncation("cofree lift needs weights above the cap");
        break;
      }
      for (const auto& [w, a] : image) add_term(cols[i], words.index(w), a);
    }
  }
  return GradedMap(f, c.space(), target.coalgebra.space(), 0, std::move(cols));
}

GradedMap corestrict_weight_one(const GradedMap& g, const CofreeCoalgebra& target) {
  std::vector<Vec> cols(g.source()->dim());
  size_t n = target.letters->dim();
  for (size_t i = 0; i < cols.size(); ++i)
    for (const auto& [w, c] : g.col(i))
      if (w < n) cols[i].emplace(w, c);
  return GradedMap(g.field(), g.source(), target.letters, g.degree(), std::move(cols));
}

}  // namespace kdual
