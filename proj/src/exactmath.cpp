#include "blcob/exactmath.hpp"

namespace blcob {

std::pair<RatMatrix, RatMatrix> sym_diagonalize(const RatMatrix& a0) {
  if (!a0.is_square() || a0 != a0.transpose())
    throw std::invalid_argument("sym_diagonalize: matrix is not symmetric");
  int n = a0.rows();
  RatMatrix a = a0;
  RatMatrix p = RatMatrix::identity(n);
  auto add_col = [&](int dst, int src, const Rat& f) {
    // x_src += f * x_dst is the substitution; on Gram matrices this is a
    // simultaneous column and row operation, and P accumulates the columns.
    for (int i = 0; i < n; ++i) a(i, dst) += f * a(i, src);
    for (int j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
    for (int i = 0; i < n; ++i) p(i, dst) += f * p(i, src);
  };
  for (int k = 0; k < n; ++k) {
    if (is_zero(a(k, k))) {
      // first later diagonal nonzero, else first off-diagonal pair to fold in
      int swap_i = -1;
      for (int i = k + 1; i < n; ++i)
        if (!is_zero(a(i, i))) {
          swap_i = i;
          break;
        }
      if (swap_i >= 0) {
        for (int j = 0; j < n; ++j) std::swap(a(k, j), a(swap_i, j));
        for (int i = 0; i < n; ++i) std::swap(a(i, k), a(i, swap_i));
        for (int i = 0; i < n; ++i) std::swap(p(i, k), p(i, swap_i));
      } else {
        int j_found = -1;
        for (int j = k + 1; j < n; ++j)
          if (!is_zero(a(k, j))) {
            j_found = j;
            break;
          }
        if (j_found < 0) continue;  // row/col k entirely zero
        add_col(k, j_found, Rat(1));  // a(k,k) becomes 2*a(k,j) != 0
      }
    }
    Rat pivot = a(k, k);
    for (int j = k + 1; j < n; ++j) {
      if (is_zero(a(k, j))) continue;
      add_col(j, k, -a(k, j) / pivot);
    }
  }
  RatMatrix d(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = a(i, i);
  return {p, d};
}

int signature(const RatMatrix& symmetric) {
  auto [p, d] = sym_diagonalize(symmetric);
  int s = 0;
  for (int i = 0; i < d.rows(); ++i) s += sgn(d(i, i));
  return s;
}

RatPoly charpoly(const RatMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("charpoly: non-square input");
  int n = a.rows();
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  RatMatrix m = RatMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    m = a * m;
    Rat ck = -m.trace() / Rat(k);
    c[n - k] = ck;
    for (int i = 0; i < n; ++i) m(i, i) += ck;
  }
  return RatPoly(std::move(c));
}

RatPoly minpoly_of_vector(const RatMatrix& a, const RatMatrix& v) {
  assert(a.is_square() && v.cols() == 1 && v.rows() == a.rows());
  int n = a.rows();
  // grow the Krylov matrix until a dependence appears
  RatMatrix krylov(n, 0);
  RatMatrix w = v;
  for (int k = 0; k <= n; ++k) {
    RatMatrix cand = RatMatrix::hconcat(krylov, w);
    if (rank(cand) < cand.cols()) {
      auto ker = kernel_basis(cand);
      assert(ker.cols() >= 1);
      // dependence involves the last column with coefficient 1 after scaling
      std::vector<Rat> coeffs(k + 1);
      Rat lead = ker(k, 0);
      assert(!is_zero(lead));
      for (int i = 0; i <= k; ++i) coeffs[i] = ker(i, 0) / lead;
      return RatPoly(std::move(coeffs));
    }
    krylov = cand;
    w = a * w;
  }
  throw std::logic_error("minpoly_of_vector: no dependence found");
}

RatPoly minpoly(const RatMatrix& a) {
  assert(a.is_square());
  int n = a.rows();
  if (n == 0) return RatPoly::constant(Rat(1));
  RatPoly m = RatPoly::constant(Rat(1));
  RatMatrix z = RatMatrix::identity(n);  // m(A), kept in sync with m
  for (int i = 0; i < n; ++i) {
    if (z.col(i).is_zero()) continue;
    RatMatrix e(n, 1);
    e(i, 0) = 1;
    m = poly_lcm(m, minpoly_of_vector(a, e));
    if (m.degree() == n) return m;
    z = m.eval(a);
    if (z.is_zero()) return m;
  }
  return m;
}

}  // namespace blcob
