#pragma once

// Shared test fixtures: deterministic RNG, classic small forms, and a random
// generator of valid Seifert forms.

#include <cstdint>
#include <vector>

#include "blcob/seifert.hpp"

namespace blcob_test {

using namespace blcob;

struct TestRng {
  std::uint64_t s;
  explicit TestRng(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  long uniform(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  long nonzero(long lo, long hi) {
    long v = 0;
    while (v == 0) v = uniform(lo, hi);
    return v;
  }
};

// one-component form of trefoil type: lambda = [[-1,1],[0,-1]], epsilon = -1
inline SeifertForm trefoil_form() {
  RatMatrix lam(2, 2);
  lam(0, 0) = rat(-1);
  lam(0, 1) = rat(1);
  lam(1, 1) = rat(-1);
  return SeifertForm{-1, {2}, lam};
}

// a hyperbolic 2-dimensional block placed in one component, zero elsewhere
inline SeifertForm hyperbolic_form(int epsilon, int mu, int component) {
  std::vector<int> dims(mu, 0);
  dims[component] = 2;
  RatMatrix lam(2, 2);
  lam(0, 1) = rat(1);
  return SeifertForm{epsilon, dims, lam};
}

// random valid Seifert form: integer entries, off-diagonal blocks paired so
// lambda + eps*lambda^T is block-diagonal, retried until it is invertible.
// For epsilon = -1 the block sizes must be even (an invertible antisymmetric
// block has even dimension).
inline SeifertForm random_seifert(TestRng& rng, int epsilon,
                                  const std::vector<int>& dims,
                                  long entry_range = 3) {
  int m = 0;
  for (int d : dims) m += d;
  int mu = static_cast<int>(dims.size());
  for (int attempt = 0; attempt < 200; ++attempt) {
    RatMatrix lam(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        lam(i, j) = rat(rng.uniform(-entry_range, entry_range));
    for (int bi = 0; bi < mu; ++bi)
      for (int bj = bi + 1; bj < mu; ++bj) {
        int oi = block_offset(dims, bi), oj = block_offset(dims, bj);
        RatMatrix upper = lam.submatrix(oi, oj, dims[bi], dims[bj]);
        lam.set_submatrix(oj, oi, upper.transpose() * rat(-epsilon));
      }
    SeifertForm s{epsilon, dims, lam};
    if (!validate(s)) return s;
  }
  throw std::runtime_error("random_seifert: no invertible sample found");
}

// random block sizes: mu components, sizes within [0, max_block], at least
// one nonzero; even sizes when epsilon = -1
inline std::vector<int> random_dims(TestRng& rng, int epsilon, int mu,
                                    int max_block) {
  while (true) {
    std::vector<int> dims(mu);
    int total = 0;
    for (int i = 0; i < mu; ++i) {
      int d = static_cast<int>(rng.uniform(0, max_block));
      if (epsilon == -1) d = 2 * (d / 2);
      dims[i] = d;
      total += d;
    }
    if (total > 0) return dims;
  }
}

}  // namespace blcob_test
