#pragma once

#include <string>

#include "blcob/rat.hpp"

namespace blcob {

// Element a + b*sqrt(d) of a quadratic field. d = 0 marks a plain rational
// (so that default construction works inside generic matrix code); mixed-d
// arithmetic is harmonized when one side is rational and rejected otherwise.
struct QuadElt {
  Int d;
  Rat a, b;

  QuadElt() : d(0), a(0), b(0) {}
  QuadElt(long v) : d(0), a(v), b(0) {}  // NOLINT: implicit for Mat<F>
  QuadElt(const Int& d_, Rat a_, Rat b_) : d(d_), a(std::move(a_)), b(std::move(b_)) {}

  bool is_rational() const { return is_zero(b); }

  static Int merge_d(const QuadElt& x, const QuadElt& y) {
    if (x.d == 0) return y.d;
    if (y.d == 0 || x.d == y.d) return x.d;
    throw std::invalid_argument("mixing distinct quadratic fields");
  }

  QuadElt operator+(const QuadElt& o) const { return {merge_d(*this, o), a + o.a, b + o.b}; }
  QuadElt operator-(const QuadElt& o) const { return {merge_d(*this, o), a - o.a, b - o.b}; }
  QuadElt operator-() const { return {d, -a, -b}; }
  QuadElt operator*(const QuadElt& o) const {
    Int dd = merge_d(*this, o);
    return {dd, a * o.a + Rat(dd) * b * o.b, a * o.b + b * o.a};
  }
  QuadElt conj() const { return {d, a, -b}; }
  Rat norm() const { return a * a - Rat(d) * b * b; }  // x * conj(x)
  Rat trace() const { return a + a; }

  QuadElt operator/(const QuadElt& o) const {
    Rat n = o.norm();
    if (is_zero(n)) throw std::domain_error("division by zero quadratic element");
    QuadElt num = *this * o.conj();
    return {num.d, num.a / n, num.b / n};
  }

  bool operator==(const QuadElt& o) const {
    if (!is_zero(b) && !is_zero(o.b) && d != o.d) return false;
    return a == o.a && b == o.b;
  }
  bool operator!=(const QuadElt& o) const { return !(*this == o); }

  std::string str() const {
    if (is_rational()) return rat_str(a);
    std::string s = is_zero(a) ? "" : rat_str(a);
    if (sgn(b) >= 0 && !s.empty()) s += "+";
    if (b == -1) s += "-";
    else if (b != 1) s += rat_str(b) + "*";
    s += "sqrt(" + int_str(d) + ")";
    return s;
  }
};

inline bool is_zero(const QuadElt& x) { return is_zero(x.a) && is_zero(x.b); }

// exact test for being a square in Q(sqrt(d))
bool quad_is_square(const QuadElt& x);

}  // namespace blcob
