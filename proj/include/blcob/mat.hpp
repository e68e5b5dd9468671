#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "blcob/rat.hpp"

namespace blcob {

// Dense matrix over an exact field F. F must be default-constructible to 0,
// constructible from long, and support +, -, *, /, ==. Elimination uses
// first-nonzero pivoting in column order so all reductions are deterministic.
template <class F>
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int r, int c) : r_(r), c_(c), e_(static_cast<size_t>(r) * c, F(0)) {
    assert(r >= 0 && c >= 0);
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }

  F& operator()(int i, int j) {
    assert(i >= 0 && i < r_ && j >= 0 && j < c_);
    return e_[static_cast<size_t>(i) * c_ + j];
  }
  const F& operator()(int i, int j) const {
    assert(i >= 0 && i < r_ && j >= 0 && j < c_);
    return e_[static_cast<size_t>(i) * c_ + j];
  }

  bool operator==(const Mat& o) const {
    return r_ == o.r_ && c_ == o.c_ && e_ == o.e_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator+(const Mat& o) const {
    assert(r_ == o.r_ && c_ == o.c_);
    Mat m(r_, c_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
    return m;
  }
  Mat operator-(const Mat& o) const {
    assert(r_ == o.r_ && c_ == o.c_);
    Mat m(r_, c_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] - o.e_[k];
    return m;
  }
  Mat operator-() const {
    Mat m(r_, c_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
    return m;
  }
  Mat operator*(const Mat& o) const {
    assert(c_ == o.r_);
    Mat m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const F& a = (*this)(i, k);
        if (a == F(0)) continue;
        for (int j = 0; j < o.c_; ++j) {
          const F& b = o(k, j);
          if (b == F(0)) continue;
          m(i, j) = m(i, j) + a * b;
        }
      }
    return m;
  }
  Mat operator*(const F& s) const {
    Mat m(r_, c_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] * s;
    return m;
  }

  Mat transpose() const {
    Mat m(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!(x == F(0))) return false;
    return true;
  }

  bool is_square() const { return r_ == c_; }

  Mat submatrix(int i0, int j0, int nr, int nc) const {
    assert(i0 + nr <= r_ && j0 + nc <= c_);
    Mat m(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
    return m;
  }

  void set_submatrix(int i0, int j0, const Mat& b) {
    assert(i0 + b.r_ <= r_ && j0 + b.c_ <= c_);
    for (int i = 0; i < b.r_; ++i)
      for (int j = 0; j < b.c_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
  }

  Mat col(int j) const { return submatrix(0, j, r_, 1); }
  Mat row(int i) const { return submatrix(i, 0, 1, c_); }

  static Mat hconcat(const Mat& a, const Mat& b) {
    assert(a.r_ == b.r_);
    Mat m(a.r_, a.c_ + b.c_);
    m.set_submatrix(0, 0, a);
    m.set_submatrix(0, a.c_, b);
    return m;
  }
  static Mat vconcat(const Mat& a, const Mat& b) {
    assert(a.c_ == b.c_);
    Mat m(a.r_ + b.r_, a.c_);
    m.set_submatrix(0, 0, a);
    m.set_submatrix(a.r_, 0, b);
    return m;
  }

  F trace() const {
    assert(is_square());
    F t(0);
    for (int i = 0; i < r_; ++i) t = t + (*this)(i, i);
    return t;
  }

 private:
  int r_, c_;
  std::vector<F> e_;
};

using RatMatrix = Mat<Rat>;

template <class F>
struct Rref {
  Mat<F> mat;
  std::vector<int> pivot_cols;  // ascending
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

template <class F>
Rref<F> rref(Mat<F> a) {
  Rref<F> out;
  int lead = 0;
  for (int col = 0; col < a.cols() && lead < a.rows(); ++col) {
    int piv = -1;
    for (int i = lead; i < a.rows(); ++i)
      if (!(a(i, col) == F(0))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(lead, j));
    F inv = F(1) / a(lead, col);
    for (int j = 0; j < a.cols(); ++j) a(lead, j) = a(lead, j) * inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == lead) continue;
      F f = a(i, col);
      if (f == F(0)) continue;
      for (int j = 0; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(lead, j);
    }
    out.pivot_cols.push_back(col);
    ++lead;
  }
  out.mat = std::move(a);
  return out;
}

template <class F>
int rank(const Mat<F>& a) {
  return rref(a).rank();
}

// Basis of the right kernel, one basis vector per column; the k-th basis
// vector has entry 1 at the k-th free column and 0 at the other free columns.
template <class F>
Mat<F> kernel_basis(const Mat<F>& a) {
  Rref<F> r = rref(a);
  std::vector<bool> is_piv(a.cols(), false);
  for (int p : r.pivot_cols) is_piv[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < a.cols(); ++j)
    if (!is_piv[j]) free_cols.push_back(j);
  Mat<F> basis(a.cols(), static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis(fc, static_cast<int>(k)) = F(1);
    for (size_t pi = 0; pi < r.pivot_cols.size(); ++pi)
      basis(r.pivot_cols[pi], static_cast<int>(k)) =
          -r.mat(static_cast<int>(pi), fc);
  }
  return basis;
}

template <class F>
std::optional<Mat<F>> try_inverse(const Mat<F>& a) {
  assert(a.is_square());
  int n = a.rows();
  Rref<F> r = rref(Mat<F>::hconcat(a, Mat<F>::identity(n)));
  // invertible iff the pivots of [A|I] are exactly the first n columns
  for (int i = 0; i < n; ++i)
    if (i >= r.rank() || r.pivot_cols[i] != i) return std::nullopt;
  return r.mat.submatrix(0, n, n, n);
}

template <class F>
Mat<F> inverse(const Mat<F>& a) {
  auto inv = try_inverse(a);
  if (!inv) throw std::domain_error("singular matrix");
  return *inv;
}

template <class F>
F det(Mat<F> a) {
  assert(a.is_square());
  int n = a.rows();
  F d(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!(a(i, col) == F(0))) {
        piv = i;
        break;
      }
    if (piv < 0) return F(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      d = -d;
    }
    d = d * a(col, col);
    F inv = F(1) / a(col, col);
    for (int i = col + 1; i < n; ++i) {
      F f = a(i, col) * inv;
      if (f == F(0)) continue;
      for (int j = col; j < n; ++j) a(i, j) = a(i, j) - f * a(col, j);
    }
  }
  return d;
}

// Solves A X = B; empty when inconsistent. The particular solution takes all
// free variables to 0, so the result is deterministic.
template <class F>
std::optional<Mat<F>> solve(const Mat<F>& a, const Mat<F>& b) {
  assert(a.rows() == b.rows());
  Rref<F> r = rref(Mat<F>::hconcat(a, b));
  Mat<F> x(a.cols(), b.cols());
  for (size_t pi = 0; pi < r.pivot_cols.size(); ++pi) {
    int pc = r.pivot_cols[pi];
    if (pc >= a.cols()) return std::nullopt;  // pivot in augmented part
    for (int j = 0; j < b.cols(); ++j)
      x(pc, j) = r.mat(static_cast<int>(pi), a.cols() + j);
  }
  return x;
}

// Row-space canonical form: RREF rows without the zero rows. Two matrices
// have equal row space iff these agree, which makes subspace bookkeeping
// deterministic everywhere.
template <class F>
Mat<F> row_space(const Mat<F>& a) {
  Rref<F> r = rref(a);
  return r.mat.submatrix(0, 0, r.rank(), a.cols());
}

// canonical basis of the column space, as columns
template <class F>
Mat<F> col_space(const Mat<F>& a) {
  return row_space(a.transpose()).transpose();
}

}  // namespace blcob
