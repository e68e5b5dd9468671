#pragma once

// Internal: incremental echelon span of rational vectors, used for closure
// computations (spin, word closure, joint-algebra tests).

#include <vector>

#include "blcob/mat.hpp"

namespace blcob {

inline std::vector<Rat> flatten(const RatMatrix& m) {
  std::vector<Rat> v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

class VecSpan {
 public:
  // reduces v against the stored echelon rows; if a nonzero remainder is
  // left, stores it and reports growth
  bool insert(std::vector<Rat> v) {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Rat& lead = v[static_cast<size_t>(pivots_[r])];
      if (is_zero(lead)) continue;
      Rat c = lead;  // rows are normalized to pivot 1
      for (size_t k = 0; k < v.size(); ++k) v[k] -= c * rows_[r][k];
    }
    size_t p = 0;
    while (p < v.size() && is_zero(v[p])) ++p;
    if (p == v.size()) return false;
    Rat inv = Rat(1) / v[p];
    for (size_t k = p; k < v.size(); ++k) v[k] *= inv;
    pivots_.push_back(static_cast<int>(p));
    rows_.push_back(std::move(v));
    return true;
  }

  bool contains(std::vector<Rat> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Rat& lead = v[static_cast<size_t>(pivots_[r])];
      if (is_zero(lead)) continue;
      Rat c = lead;
      for (size_t k = 0; k < v.size(); ++k) v[k] -= c * rows_[r][k];
    }
    for (const Rat& x : v)
      if (!is_zero(x)) return false;
    return true;
  }

  int dim() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<std::vector<Rat>> rows_;
  std::vector<int> pivots_;
};

// deterministic seeded generator (splitmix64)
struct SplitMix {
  std::uint64_t s;
  explicit SplitMix(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace blcob
