#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "blcob/reptheory.hpp"

namespace blcob {

// Invariant coordinates of a two-component module with dimension vector
// (1,1): the two loop entries and the round-trip product. They generate the
// ring of conjugation invariants and are algebraically independent, so a
// point is exactly a semisimple isomorphism class.
struct VarietyPoint11 {
  Rat x1, x2, x3;  // x1 = s11, x2 = s22, x3 = s12 s21
  bool operator==(const VarietyPoint11&) const = default;
};

// Dimension vector (2,1): with Y_ij the blocks of rho(s),
//   z1 = tr(Y11), z2 = det(Y11), z3 = tr(Y12 Y21),
//   z4 = tr(Y11 Y12 Y21), z5 = Y22 (a scalar).
// These five generate the invariant ring and are algebraically independent.
struct VarietyPoint21 {
  Rat z1, z2, z3, z4, z5;
  bool operator==(const VarietyPoint21&) const = default;
};

// Sparse polynomial in z1..z5 with integer coefficients, keyed by exponent
// vector; the value class for reduced cycle traces.
struct TracePolynomial {
  std::map<std::array<int, 5>, Int> terms;

  static TracePolynomial constant(const Int& c);
  static TracePolynomial variable(int i);  // 1-based: z1..z5

  TracePolynomial operator-() const;
  TracePolynomial& operator+=(const TracePolynomial& o);
  friend TracePolynomial operator+(TracePolynomial a, const TracePolynomial& b) {
    a += b;
    return a;
  }
  friend TracePolynomial operator-(TracePolynomial a, const TracePolynomial& b) {
    a += -b;
    return a;
  }
  friend TracePolynomial operator*(const TracePolynomial& a,
                                   const TracePolynomial& b);
  bool operator==(const TracePolynomial& o) const { return terms == o.terms; }

  Rat evaluate(const VarietyPoint21& p) const;
  std::string str() const;
};

// coordinates read off rho(s); reject any other dimension vector
VarietyPoint11 invariants_11(const Representation& r);
VarietyPoint21 invariants_21(const Representation& r);

// the locus of simple classes is x3 != 0
bool is_simple_11(const VarietyPoint11& p);

// the non-simple classes form the hypersurface z1 z3 z4 - z4^2 = z2 z3^2
// (the image of the direct-sum map from (1,1) x (1,0) points)
bool is_simple_21(const VarietyPoint21& p);

// Rational points fixed by the duality involution. For (1,1) the involution
// sends (x1, x2, x3) to (1-x1, 1-x2, x3), so a rational fixed point needs
// x1 = x2 = 1/2 and is parametrized as (1/2 + r1 i, 1/2 + r2 i, r3) with
// r1 = r2 = 0, r3 = x3. nullopt when the point is off the locus.
std::optional<std::array<Rat, 3>> selfdual_coords(const VarietyPoint11& p);

// For (2,1) the involution sends (z1, z2, z3, z4, z5) to
// (2 - z1, z2 - z1 + 1, z3, z3 - z4, 1 - z5); a rational fixed point needs
// z1 = 1, z3 = 2 z4, z5 = 1/2. Against the parametrization
// (1 + 2 r1 i, r2 + r1 i, 2 r3, r3 + r4 i, 1/2 + r5 i) of the self-dual
// classes this solves to (r1..r5) = (0, z2, z4, 0, 0).
std::optional<std::array<Rat, 5>> selfdual_coords(const VarietyPoint21& p);

// Trace of an oriented cycle in the two-vertex quiver on a (2,1) module, as
// a polynomial in z1..z5. The vertex-2 loop is scalar, so each occurrence
// strips to a factor z5; the rest of the cycle is a word in the two basic
// vertex-1 cycles c1 = Y11 and c2 = Y12 Y21 and is reduced by the matrix
// identities
//   c1^2 = z1 c1 - z2,   c2^2 = z3 c2,   c1 c2 c1 c2 = z4 c1 c2
// until only the six residual words c1, c2, c1c2, c2c1, c1c2c1, c2c1c2
// remain, whose traces are known. Trivial paths are the block identities.
// Throws std::invalid_argument on a word that is not an oriented cycle.
TracePolynomial reduce_cycle_trace_21(const PathWord& w);

// rational points are integral iff every coordinate is an integer
bool is_integral_point(const VarietyPoint11& p);
bool is_integral_point(const VarietyPoint21& p);

}  // namespace blcob
