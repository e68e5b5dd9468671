#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blcob/mat.hpp"

namespace blcob {

// A mu-component Seifert form: an m x m matrix lambda over Q together with a
// partition of the index range into mu blocks, such that phi = lambda +
// epsilon*lambda^T is invertible and block-diagonal. Blocks of size zero are
// allowed; the empty form is the zero of the block-sum monoid.
struct SeifertForm {
  int epsilon = 1;  // +1 or -1
  std::vector<int> block_dims;
  RatMatrix lambda;

  int mu() const { return static_cast<int>(block_dims.size()); }
  int dim() const { return lambda.rows(); }
};

// The same data after the change of variables: s acts by rho_s on Q^m, and
// phi is an epsilon-symmetric invertible block-diagonal form satisfying
// rho_s^T * phi = phi * (I - rho_s).
struct RepForm {
  int epsilon = 1;
  std::vector<int> block_dims;
  RatMatrix rho_s;
  RatMatrix phi;

  int mu() const { return static_cast<int>(block_dims.size()); }
  int dim() const { return rho_s.rows(); }
};

// nullopt when valid; otherwise the first violated condition by name
std::optional<std::string> validate(const SeifertForm& s);
std::optional<std::string> validate(const RepForm& r);

// lambda  ->  (rho_s = phi^{-1} lambda, phi = lambda + epsilon lambda^T);
// throws std::invalid_argument with the validation diagnostic on bad input
RepForm kappa(const SeifertForm& s);

// inverse change of variables, lambda = phi * rho_s
SeifertForm kappa_inverse(const RepForm& r);

// componentwise direct sum: block i of the result is block i of s1 followed
// by block i of s2; requires equal epsilon and mu
SeifertForm block_sum(const SeifertForm& s1, const SeifertForm& s2);

SeifertForm negate(const SeifertForm& s);

// the class of s0 - s1, realized as block_sum(s0, negate(s1))
SeifertForm difference_class(const SeifertForm& s0, const SeifertForm& s1);

// the empty form (all blocks size zero) with the given signature
SeifertForm empty_form(int epsilon, int mu);

// serialization: {"epsilon": +-1, "mu": n, "blocks": [...], "lambda": [[...]]}
// with matrix entries either JSON integers or "p/q" strings
std::string seifert_to_json(const SeifertForm& s);
SeifertForm seifert_from_json(const std::string& text);  // throws on bad input

// true when phi is block-diagonal for the given partition
bool respects_blocks(const RatMatrix& m, const std::vector<int>& dims);

// offset of block i in the index range
int block_offset(const std::vector<int>& dims, int i);

}  // namespace blcob
