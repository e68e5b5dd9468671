#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blcob/mat.hpp"
#include "blcob/numbertheory.hpp"
#include "blcob/seifert.hpp"

namespace blcob {

// A finite-dimensional module over the ring generated by orthogonal
// projections pi_1..pi_mu summing to 1 and one extra generator s: the data is
// the block partition and the matrix of s. Arrows are the blocks
// pi_i * s * pi_j; submodules are subspaces closed under the projections and
// the arrows (equivalently under the projections and s).
struct Representation {
  std::vector<int> block_dims;
  RatMatrix rho_s;

  int mu() const { return static_cast<int>(block_dims.size()); }
  int dim() const { return rho_s.rows(); }
};

Representation rep_of(const RepForm& r);

// word in the arrows s_{ij}, composed left to right (column index of one
// factor = row index of the next); an empty word with component >= 0 is the
// trivial path pi_i
struct PathWord {
  std::vector<std::pair<int, int>> arrows;  // 0-based component indices
  int trivial_component = -1;

  static PathWord trivial(int i) { return PathWord{{}, i}; }
  static PathWord of(std::initializer_list<std::pair<int, int>> a) {
    return PathWord{a, -1};
  }
  bool well_formed(int mu) const;
  bool is_cycle() const {
    return !arrows.empty() && arrows.back().second == arrows.front().first;
  }
  std::string key() const;  // canonical: lexicographically minimal rotation
};

// the diagonal 0/1 projection onto block i
RatMatrix projection(const Representation& r, int i);

// the (i,j) arrow embedded as an m x m matrix
RatMatrix arrow_matrix(const Representation& r, int i, int j);

// matrix of the word; throws on non-composable input
RatMatrix act(const Representation& r, const PathWord& w);

// Submodule bases are m x k matrices of full column rank whose columns are
// adapted to the blocks (each column supported in one block, blocks in
// order, column-echelon within each block) — deterministic for a given
// subspace.
RatMatrix block_adapted_basis(const Representation& r, const RatMatrix& span);

// smallest submodule containing the given vectors (columns); echelonized
RatMatrix spin(const Representation& r, const RatMatrix& vectors);

// same closure under the transposed action
RatMatrix spin_transposed(const Representation& r, const RatMatrix& vectors);

// per-block dimensions of a block-adapted basis
std::vector<int> submodule_dims(const Representation& r, const RatMatrix& basis);

// restriction of the action to an action-closed subspace (basis columns J):
// rho'(s) with rho(s) J = J rho'(s); throws if J is not action-closed
Representation restrict_representation(const Representation& r,
                                       const RatMatrix& basis);

// basis of a simple submodule; deterministic for a given seed
RatMatrix find_simple_submodule(const Representation& r, std::uint64_t seed);

struct SimplicityResult {
  bool simple;
  RatMatrix witness;        // proper nonzero submodule basis when !simple
  std::string certificate;  // human-readable reason when simple
};

SimplicityResult is_simple(const Representation& r, std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// endomorphism algebras

enum class AlgebraKind { rationals, quad_field, quaternion, partial };

struct ClassTag {
  AlgebraKind kind = AlgebraKind::partial;
  Int d = 0;        // quad_field: squarefree d with E = Q(sqrt d)
  Rat alpha, beta;  // quaternion: i^2 = alpha, j^2 = beta
  int dim = 0, center_dim = 0;  // partial: what was measured
  // generator coordinates in the algebra basis, filled by recognize_algebra:
  // quad_field: sqrt_d squares to d; quaternion: gen_i, gen_j square to
  // alpha, beta and anticommute
  std::vector<Rat> sqrt_d, gen_i, gen_j;
  std::string str() const;
};

enum class InvolutionKind { first, second, unknown };

struct EndAlgebra {
  int ambient_dim = 0;
  std::vector<RatMatrix> basis;  // acting on the ambient module
  // coords of basis[i]*basis[j] in the basis
  std::vector<std::vector<std::vector<Rat>>> mult_table;
  std::vector<Rat> identity;  // coords of the identity
  std::optional<RatMatrix> involution_matrix;  // coordinate action of the involution
  ClassTag class_tag;
  InvolutionKind involution_kind = InvolutionKind::unknown;

  int dim() const { return static_cast<int>(basis.size()); }
  // coordinates of an ambient matrix lying in the span; throws if outside
  std::vector<Rat> coords(const RatMatrix& x) const;
  RatMatrix from_coords(const std::vector<Rat>& c) const;
  std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
};

// the full commutant {X block-diagonal : X rho(s) = rho(s) X}
EndAlgebra endomorphism_algebra(const Representation& r);

// basis of the center of the algebra, in coordinates
std::vector<std::vector<Rat>> algebra_center(const EndAlgebra& e);

// classification of a division algebra commutant; detected zero divisors
// raise std::domain_error naming the offending pair
ClassTag recognize_algebra(EndAlgebra& e);

struct InvolutionInfo {
  RatMatrix matrix;  // action on algebra coordinates
  InvolutionKind kind = InvolutionKind::unknown;
  int fixed_dim = 0;
  bool quad_conjugation = false;   // quadratic field: acts as conjugation
  bool quat_standard = false;      // quaternion: 1-dim fixed space
};

// adjoint involution f -> b^{-1} f^T b on the commutant
InvolutionInfo induced_involution(EndAlgebra& e, const RatMatrix& b);

// traces of all oriented cycles of length <= max_len, canonically keyed;
// trivial paths are included under keys "e1".."emu"
std::map<std::string, Rat> cycle_traces(const Representation& r, int max_len);

// character equality decided through the joint image algebra (equivalent to
// comparing cycle traces to length (dim)^2); semisimple inputs only
bool is_isomorphic(const Representation& r1, const Representation& r2);

// basis of the intertwiner space {X block-diagonal : X rho1(s) = rho2(s) X},
// as ambient matrices mapping r1 to r2
std::vector<RatMatrix> intertwiner_space(const Representation& r1,
                                         const Representation& r2);

// invertible intertwiner by deterministic sweep; nullopt if none found
std::optional<RatMatrix> find_isomorphism(const Representation& r1,
                                          const Representation& r2,
                                          std::uint64_t seed = 0);

// the bar-dual: s acts by (I - rho(s))^T on the dual space, same blocks
Representation dual_rep(const Representation& r);

// invertible b with b block-diagonal, b = epsilon b^T and
// b rho(s) = (I - rho(s))^T b; nullopt when the character obstruction shows
// no invertible intertwiner to the dual exists, or when the solution space
// of the epsilon-symmetric system contains no invertible element the sweep
// can find (for a simple module the sweep is exact: any nonzero solution is
// invertible)
std::optional<RatMatrix> selfdual_form(const Representation& r, int epsilon);

// whether the lattice generated by the projections and rho(s) under
// multiplication is finitely generated over the integers (integer structure
// constants); decided by closure inside the dual lattice of the trace form
bool is_algebraically_integral(const Representation& r);

// basis of the algebra generated by the projections and rho(s) inside the
// full matrix algebra (word closure)
std::vector<RatMatrix> image_algebra_basis(const Representation& r);

}  // namespace blcob
