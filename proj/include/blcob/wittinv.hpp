#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blcob/numbertheory.hpp"
#include "blcob/quadelt.hpp"
#include "blcob/wittreduce.hpp"

namespace blcob {

enum class ThetaStatus { not_applicable, needed_but_not_computed };

// Invariants of one hermitian block over its recognized coefficient algebra.
// `complete` is set exactly when the computed invariants decide triviality
// of the block's Witt class; otherwise the verdict logic can conclude
// "nontrivial" from a nonvanishing invariant but never "trivial".
struct WittInvariantReport {
  ClassTag class_tag;
  std::string involution = "none";  // trivial/conjugation/standard/nonstandard
  int rank_mod2 = 0;
  std::vector<std::pair<std::string, int>> signatures;  // (place label, value)
  std::string discriminant = "1";   // square/norm class descriptor
  bool discriminant_trivial = true;
  std::vector<std::string> hasse_witt;  // places carrying -1, rationals only
  std::optional<int> exact_order;   // order of the class when decided
  std::optional<int> order_bound;   // a multiple of the order when known
  ThetaStatus theta_status = ThetaStatus::not_applicable;
  bool complete = false;

  bool provably_nontrivial() const;
  std::string to_json() const;  // stable key order
};

using QuadMatrix = Mat<QuadElt>;

// coefficients over the ordered basis 1, i, j, ij
using QuatEntry = std::array<Rat, 4>;
using QuatMatrix = std::vector<std::vector<QuatEntry>>;

// Symmetric bilinear forms over the rationals: rank mod 2, signature,
// discriminant (-1)^{m(m-1)/2} det, and the adjusted product-of-symbols
// invariant, computed from an exact diagonalization.
WittInvariantReport invariants_over_Q(const RatMatrix& h);

// Hermitian forms over a quadratic field with the conjugation involution:
// rank mod 2, discriminant as a norm-class verdict, and for imaginary
// fields the signature realized as half the signature of the trace form.
// These decide the class (real fields carry no archimedean invariant, the
// infinite place being split), so the report is always complete.
WittInvariantReport invariants_hermitian_quad(const QuadMatrix& h, const Int& d);

// Symmetric bilinear forms over a quadratic field with trivial involution:
// rank mod 2 and the discriminant as a field-element descriptor; for
// imaginary fields, diagonal entries falling in a single square class give
// the exact order of the class via the order of the unit form; real fields
// get the two signatures through the twisted trace transfers.
WittInvariantReport invariants_quadfield_trivial(const QuadMatrix& h, const Int& d);

// Hermitian forms over a division quaternion algebra with the standard
// involution: rank mod 2 and, when the algebra ramifies at the archimedean
// place, the signature as a quarter of the reduced-trace form's signature.
WittInvariantReport invariants_quaternion_standard(const QuatMatrix& h,
                                                   const Rat& alpha,
                                                   const Rat& beta);

// Route one transferred block to the invariant computation matching its
// recognized algebra and involution.
WittInvariantReport report_for_block(const IsotypicBlock& blk);

enum class WittVerdict { witt_trivial, nontrivial, undetermined };

std::string verdict_str(WittVerdict v);

struct EquivalenceVerdict {
  WittVerdict verdict = WittVerdict::witt_trivial;
  std::vector<WittInvariantReport> blocks;
};

// nontrivial if any block shows a nonvanishing invariant; witt_trivial if
// every block is complete with all invariants trivial; undetermined
// otherwise.
EquivalenceVerdict assemble_verdict(const std::vector<WittInvariantReport>& blocks);

}  // namespace blcob
