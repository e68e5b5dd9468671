#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "blcob/reptheory.hpp"
#include "blcob/seifert.hpp"

namespace blcob {

// A representation equipped with a nonsingular epsilon-symmetric structure
// form: phi is block-diagonal, phi^T = epsilon*phi, and phi intertwines the
// action with its dual, phi*rho(s) = (I - rho(s))^T * phi.  Zero-dimensional
// forms are allowed and act as the neutral element of orthogonal sums.
struct FormOnRep {
  Representation rep;
  RatMatrix phi;
  int epsilon = 1;

  int dim() const { return rep.dim(); }
};

// nullopt when valid; otherwise the first violated condition by name
std::optional<std::string> validate(const FormOnRep& f);

// view of a RepForm as a FormOnRep
FormOnRep form_of(const RepForm& f);

// Restriction of the form to an action-closed subspace together with the
// orthogonal complement: phi_L = J^T phi J for the basis matrix J, and
// Lperp = ker(J^T phi), returned block-adapted.  dim L + dim Lperp = m.
std::pair<RatMatrix, RatMatrix> restrict_and_complement(const FormOnRep& f,
                                                        const RatMatrix& L);

// Quotient by a sublagrangian: given L action-closed with phi_L = 0 (so
// L is contained in its own orthogonal), returns the induced form on
// Lperp/L.  The quotient basis extends L's echelon basis inside Lperp
// deterministically.  Throws std::invalid_argument when phi_L != 0.
FormOnRep sublagrangian_reduce(const FormOnRep& f, const RatMatrix& L);

// Orthogonal splitting along a subspace on which the form restricts
// nonsingularly: returns (L, phi_L) and (Lperp, phi_Lperp) with
// M = L + Lperp verified.  Throws std::invalid_argument when phi_L is
// singular.
std::pair<FormOnRep, FormOnRep> split_nonsingular(const FormOnRep& f,
                                                  const RatMatrix& L);

// Full reduction to an orthogonal list of forms on simple representations:
// repeatedly find a simple submodule; if the form vanishes on it, reduce by
// the sublagrangian and recurse, otherwise split it off.  The concatenated
// output carries the same Witt class as the input.
std::vector<FormOnRep> devissage(const FormOnRep& f, std::uint64_t seed = 0);

// One isotypic class of simple summands, transported to a hermitian matrix
// over the endomorphism algebra of the reference simple representation.
struct IsotypicBlock {
  Representation simple_rep;       // reference representative of the class
  RatMatrix b;                     // chosen structure form on simple_rep
  std::vector<FormOnRep> summand_forms;
  EndAlgebra E;                    // commutant with the b-induced involution
  // r x r matrix with entries in E-coordinates, hermitian for the induced
  // involution: H[k][j] = invol(H[j][k])
  std::vector<std::vector<std::vector<Rat>>> hermitian_matrix_over_E;
  // informational: the involution is the identity on E, so the class admits
  // no (-epsilon)-self-dual structure
  bool not_minus_epsilon_selfdual = false;
  std::string char_key;            // deterministic ordering key of the class
};

// Group devissage output by isomorphism class and apply the Morita transfer
// to each class: the reference form b is the first encountered on the class
// (classes sorted by character key), theta_k are explicit isomorphisms onto
// the summands, and H_{jk} = epsilon * b^{-1} theta_j^T phi theta_k in
// E-coordinates.  Throws std::logic_error if an intertwiner solve fails for
// representations the character test declared isomorphic.
std::vector<IsotypicBlock> group_and_transfer(const std::vector<FormOnRep>& pieces,
                                              std::uint64_t seed = 0);

}  // namespace blcob
