#pragma once

#include <utility>
#include <vector>

#include "blcob/mat.hpp"
#include "blcob/poly.hpp"

namespace blcob {

// Congruence diagonalization of a symmetric matrix: returns (P, D) with
// P invertible and P^T A P = D diagonal. Throws on non-symmetric input.
std::pair<RatMatrix, RatMatrix> sym_diagonalize(const RatMatrix& a);

// #positive − #negative diagonal entries after diagonalization.
int signature(const RatMatrix& symmetric);

// Monic characteristic polynomial det(xI − A) (Faddeev–LeVerrier).
RatPoly charpoly(const RatMatrix& a);

// Minimal polynomial of A on the cyclic subspace generated by v.
RatPoly minpoly_of_vector(const RatMatrix& a, const RatMatrix& v);

// Minimal polynomial of A (lcm of cyclic minimal polynomials over a basis).
RatPoly minpoly(const RatMatrix& a);

// Irreducible monic factors over Q with multiplicities; the product of
// factor^multiplicity equals the input up to a rational unit. Factors are
// sorted by (degree, coefficient lex) so the output is deterministic.
std::vector<std::pair<RatPoly, int>> factor_poly_Q(const RatPoly& f);

}  // namespace blcob
