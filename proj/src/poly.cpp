#include "blcob/poly.hpp"

#include <sstream>

namespace blcob {

RatPoly RatPoly::monomial(int deg, const Rat& a) {
  std::vector<Rat> c(deg + 1, Rat(0));
  c[deg] = a;
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (blcob::is_zero(c_[i])) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const Rat& s) const {
  std::vector<Rat> c(c_);
  for (auto& x : c) x *= s;
  return RatPoly(std::move(c));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return RatPoly();
  return *this * (Rat(1) / lc());
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  std::vector<Rat> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return RatPoly(std::move(c));
}

Rat RatPoly::eval(const Rat& x) const {
  Rat v(0);
  for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
  return v;
}

RatMatrix RatPoly::eval(const RatMatrix& a) const {
  assert(a.is_square());
  int n = a.rows();
  RatMatrix v(n, n);
  for (size_t i = c_.size(); i-- > 0;) {
    v = v * a;
    for (int k = 0; k < n; ++k) v(k, k) += c_[i];
  }
  return v;
}

std::string RatPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat c = coeff(i);
    if (blcob::is_zero(c)) continue;
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rat a = abs(c);
    if (i == 0 || a != 1) os << rat_str(a) << (i > 0 ? "*" : "");
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> r(f.coeffs());
  int dg = g.degree();
  if (f.degree() < dg) return {RatPoly(), f};
  std::vector<Rat> q(f.degree() - dg + 1, Rat(0));
  Rat inv_lc = Rat(1) / g.lc();
  for (int i = f.degree(); i >= dg; --i) {
    Rat coef = r[i] * inv_lc;
    if (blcob::is_zero(coef)) continue;
    q[i - dg] = coef;
    for (int j = 0; j <= dg; ++j) r[i - dg + j] -= coef * g.coeff(j);
  }
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RatPoly poly_lcm(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  RatPoly g = poly_gcd(a, b);
  return divmod(a * b, g).first.monic();
}

bool divides(const RatPoly& g, const RatPoly& f) {
  if (g.is_zero()) return f.is_zero();
  return divmod(f, g).second.is_zero();
}

}  // namespace blcob
