#include "blcob/quadelt.hpp"

namespace blcob {

bool quad_is_square(const QuadElt& x) {
  if (is_zero(x)) return true;
  if (x.is_rational()) {
    // p^2 = a, or (q*sqrt(d))^2 = d q^2 = a
    if (is_rational_square(x.a)) return true;
    return x.d != 0 && is_rational_square(x.a / Rat(x.d));
  }
  // (p + q sqrt(d))^2 = x needs N = sqrt(a^2 - d b^2) rational, then
  // p^2 = (a +- N)/2 rational square with q = b/(2p)
  Rat n2 = x.a * x.a - Rat(x.d) * x.b * x.b;
  if (!is_rational_square(n2)) return false;
  Rat n = rational_sqrt(n2);
  Rat plus = (x.a + n) / 2, minus = (x.a - n) / 2;
  for (const Rat& cand : {plus, minus}) {
    if (is_zero(cand)) continue;  // p = 0 cannot produce b != 0
    if (is_rational_square(cand)) return true;
  }
  return false;
}

}  // namespace blcob
