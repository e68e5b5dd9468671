#pragma once

#include <vector>

#include "blcob/reptheory.hpp"
#include "blcob/seifert.hpp"

namespace blcob {

// Which involution a constructed algebra should carry: identity on a field,
// conjugation on a quadratic field, the standard (conjugation) involution on
// a quaternion algebra, or the orthogonal one fixing i and ij.
enum class InvolutionSpec { trivial, conjugation, standard, nonstandard };

// A division algebra given by the regular representations of its basis: for
// basis element k, basis_left[k] is y -> b_k y and basis_right[k] is
// y -> y b_k on coordinates. The generator matrices satisfy the defining
// relations exactly (t^2 = d, or i^2 = alpha, j^2 = beta, ij = -ji).
struct AlgebraPresentation {
  AlgebraKind kind = AlgebraKind::rationals;
  Int d = 0;        // quad_field: E = Q(sqrt d)
  Rat alpha, beta;  // quaternion parameters
  std::vector<RatMatrix> basis_left, basis_right;

  int dim() const { return static_cast<int>(basis_left.size()); }
  // left / right multiplication by the element with the given coordinates
  RatMatrix lmul(const std::vector<Rat>& x) const;
  RatMatrix rmul(const std::vector<Rat>& x) const;
};

AlgebraPresentation present_rationals();
// basis {1, w} with w = (1+sqrt d)/2 when d = 1 mod 4, else w = sqrt d
AlgebraPresentation present_quadratic(const Int& d);
// basis {1, i, j, ij}
AlgebraPresentation present_quaternion(const Rat& alpha, const Rat& beta);

// coordinate action of the requested involution; throws when the spec does
// not match the algebra kind
RatMatrix involution_action(const AlgebraPresentation& e, InvolutionSpec inv);

// A representation with commutant isomorphic to E: component i is E as a
// vector space, s acts by right multiplication r(x_i) on the diagonal and by
// the identity off the diagonal, where x_1..x_mu generate E over Q. Adding
// an integer shift to the second generator changes the character, so
// distinct shifts give non-isomorphic outputs. Throws when the commutant
// comes out larger than E (generators failed to generate).
Representation build_plain(const AlgebraPresentation& e, int mu = 2,
                           long shift = 0);

struct SelfdualConstruction {
  Representation rep;
  RatMatrix b;  // block-diagonal, b = epsilon b^T, b rho(s) = (1-rho(s))^T b
};

// A self-dual representation realizing (E, involution) as its commutant with
// the adjoint involution of b. Component i is E + E^*; s acts by
// diag(r(x_i), 1 - r(x_i)^T) on the diagonal and couples E to E^* off the
// diagonal through gamma and delta, where delta intertwines l(x) with
// l(I(x))^* and gamma is delta^{-1}, both scaled to integer matrices. Each
// generator x_i = base + n_i takes the smallest shift with r(x_i) not
// similar to 1 - r(x_i)^T (distinct characteristic polynomials); the search
// throws after shift_bound. The pair (rep, b) converts to a Seifert form via
// lambda = b rho(s).
SelfdualConstruction build_selfdual(const AlgebraPresentation& e,
                                    InvolutionSpec inv, int epsilon,
                                    int mu = 2, long shift_bound = 32);

// The explicit two-component 8x8 Seifert form whose class has order 8: both
// components are 4-dimensional, the endomorphism algebra of the underlying
// representation is Q(sqrt(-7)) with trivial involution, and the hermitian
// image is the unit form. Valid for epsilon = +1 and -1.
SeifertForm builtin_order8(int epsilon);

}  // namespace blcob
