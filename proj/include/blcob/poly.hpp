#pragma once

#include <string>
#include <vector>

#include "blcob/mat.hpp"
#include "blcob/rat.hpp"

namespace blcob {

// Univariate polynomial over Q, coefficients lowest degree first, leading
// coefficient nonzero unless the polynomial is zero (empty coefficient list).
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static RatPoly constant(const Rat& a) { return RatPoly({a}); }
  static RatPoly x() { return RatPoly({Rat(0), Rat(1)}); }
  static RatPoly monomial(int deg, const Rat& a);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
  }
  Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator*(const Rat& s) const;
  RatPoly operator-() const { return *this * Rat(-1); }
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }
  bool operator!=(const RatPoly& o) const { return !(*this == o); }

  RatPoly monic() const;      // divide by lc; zero stays zero
  RatPoly derivative() const;
  Rat eval(const Rat& x) const;
  RatMatrix eval(const RatMatrix& a) const;  // Horner with matrices

  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && blcob::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// Euclidean division: f = q*g + r with deg r < deg g. g must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g);

// Monic gcd; gcd(0,0) = 0.
RatPoly poly_gcd(RatPoly a, RatPoly b);

RatPoly poly_lcm(const RatPoly& a, const RatPoly& b);

bool divides(const RatPoly& g, const RatPoly& f);

}  // namespace blcob
