#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blcob/rat.hpp"

namespace blcob {

// Integer factorization is by trial division with a configurable bound;
// inputs whose unfactored cofactor is composite and beyond the bound are
// rejected so that no silent wrong answer can escape.
class FactorBoundExceeded : public std::runtime_error {
 public:
  explicit FactorBoundExceeded(const Int& n)
      : std::runtime_error("factorization bound exceeded for " + int_str(n)) {}
};

Int factor_bound();
void set_factor_bound(const Int& b);

struct PrimePower {
  Int p;
  int e;
};

// factorization of |n|, ascending primes; n must be nonzero
std::vector<PrimePower> factorize(const Int& n);

bool is_squarefree(const Int& n);

// squarefree part of numerator*denominator, sign preserved
Int square_class(const Rat& q);

// A place of Q: a rational prime or the archimedean place.
struct Place {
  bool infinite;
  Int p;  // meaningful when finite

  static Place infinity() { return Place{true, Int(0)}; }
  static Place prime(const Int& p);  // validates primality

  std::string str() const { return infinite ? "inf" : int_str(p); }
  bool operator==(const Place& o) const {
    return infinite == o.infinite && (infinite || p == o.p);
  }
  bool operator<(const Place& o) const {  // finite ascending, then infinity
    if (infinite != o.infinite) return !infinite;
    return !infinite && p < o.p;
  }
};

// Legendre symbol (a/p) in {-1,0,+1}; p an odd prime
int legendre(const Int& a, const Int& p);

// local Hilbert symbol (a,b)_v in {-1,+1}; a,b nonzero
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// symbol at every place that can possibly ramify (primes dividing 2ab and
// infinity), ascending; the product of values is +1 (reciprocity)
std::vector<std::pair<Place, int>> hilbert_vector(const Rat& a, const Rat& b);

std::vector<Place> ramified_places(const Rat& a, const Rat& b);

enum class QuadInvolution { trivial, conjugation };

struct QuadField {
  Int d;  // squarefree, not 0 or 1
  QuadInvolution involution = QuadInvolution::trivial;
};

QuadField make_quadfield(const Int& d, QuadInvolution inv);

enum class QuatInvolution { standard, nonstandard };

struct QuaternionDesc {
  Rat alpha, beta;  // i^2 = alpha, j^2 = beta, ij = -ji
  QuatInvolution involution = QuatInvolution::standard;
};

// true iff a is a norm from Q(sqrt(d)); via symbols (a,d) at all places
bool is_norm(const Rat& a, const Int& d);

// smallest s with -1 a sum of s squares in Q(sqrt(d)), d < 0 squarefree
int level_quadratic(const Int& d);

// order of the rank-one unit form over the field: 2*level for imaginary
// quadratic; unbounded (nullopt) for Q and real quadratic fields
std::optional<int> order_of_unit_class_quadratic(const Int& d);
std::optional<int> order_of_unit_class_rationals();

// true iff (alpha,beta) is a division algebra over Q (norm form anisotropic)
bool quaternion_is_division(const Rat& alpha, const Rat& beta);

}  // namespace blcob
