#include "blcob/numbertheory.hpp"

#include <algorithm>
#include <cassert>

namespace blcob {

namespace {
Int g_factor_bound("1000000");
}

Int factor_bound() { return g_factor_bound; }

void set_factor_bound(const Int& b) {
  if (b < 2) throw std::invalid_argument("factor bound must be >= 2");
  g_factor_bound = b;
}

std::vector<PrimePower> factorize(const Int& n0) {
  if (sgn(n0) == 0) throw std::invalid_argument("factorize(0)");
  Int n = abs(n0);
  std::vector<PrimePower> out;
  auto strip = [&](const Int& p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  };
  strip(Int(2));
  Int bound = g_factor_bound;
  for (Int p(3); p <= bound && p * p <= n; p += 2) strip(p);
  if (n > 1) {
    if (n <= bound || mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
      out.push_back({n, 1});
    } else {
      throw FactorBoundExceeded(n);
    }
  }
  return out;
}

bool is_squarefree(const Int& n) {
  if (sgn(n) == 0) return false;
  for (const auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

Int square_class(const Rat& q) {
  if (is_zero(q)) throw std::invalid_argument("square_class(0)");
  Int n = q.get_num() * q.get_den();
  Int out(sgn(n));
  for (const auto& [p, e] : factorize(n))
    if (e % 2) out *= p;
  return out;
}

Place Place::prime(const Int& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
    throw std::invalid_argument("not a prime place: " + int_str(p));
  return Place{false, p};
}

int legendre(const Int& a, const Int& p) {
  assert(p > 2);
  Int e = (p - 1) / 2, r;
  Int am = a % p;
  if (sgn(am) < 0) am += p;
  mpz_powm(r.get_mpz_t(), am.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  if (sgn(r) == 0) return 0;
  return r == 1 ? 1 : -1;
}

namespace {

// p-adic valuation of a nonzero rational
long val_p(const Rat& x, const Int& p) {
  long v = 0;
  Int n = x.get_num();
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  Int d = x.get_den();
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

// the p-unit part of x as an integer residue mod m (m a power of p)
Int unit_part_mod(const Rat& x, const Int& p, const Int& m) {
  Int n = x.get_num(), d = x.get_den();
  while (n % p == 0) n /= p;
  while (d % p == 0) d /= p;
  Int dinv;
  if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::logic_error("unit_part_mod: denominator not invertible");
  Int r = (n * dinv) % m;
  if (sgn(r) < 0) r += m;
  return r;
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
  if (is_zero(a) || is_zero(b))
    throw std::invalid_argument("hilbert_symbol: zero argument");
  if (v.infinite) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  const Int& p = v.p;
  long alpha = val_p(a, p), beta = val_p(b, p);
  if (p == 2) {
    Int u = unit_part_mod(a, p, Int(8)), w = unit_part_mod(b, p, Int(8));
    auto eps = [](const Int& x) { return (x % 4 == 3) ? 1 : 0; };      // (x-1)/2 mod 2
    auto omg = [](const Int& x) { return (x == 3 || x == 5) ? 1 : 0; };  // (x^2-1)/8 mod 2
    long e = eps(u) * eps(w) + alpha * omg(w) + beta * omg(u);
    return (e % 2) ? -1 : 1;
  }
  Int u = unit_part_mod(a, p, p), w = unit_part_mod(b, p, p);
  int s = 1;
  if ((alpha % 2) && (beta % 2) && ((p - 1) / 2) % 2 == 1) s = -s;
  if (beta % 2) s *= legendre(u, p);
  if (alpha % 2) s *= legendre(w, p);
  return s;
}

std::vector<std::pair<Place, int>> hilbert_vector(const Rat& a, const Rat& b) {
  if (is_zero(a) || is_zero(b))
    throw std::invalid_argument("hilbert_vector: zero argument");
  std::vector<Place> places;
  places.push_back(Place{false, Int(2)});
  for (const Rat* x : {&a, &b})
    for (const auto& [p, e] : factorize(x->get_num() * x->get_den()))
      places.push_back(Place{false, p});
  std::sort(places.begin(), places.end());
  places.erase(std::unique(places.begin(), places.end()), places.end());
  places.push_back(Place::infinity());
  std::vector<std::pair<Place, int>> out;
  int prod = 1;
  for (const Place& v : places) {
    int s = hilbert_symbol(a, b, v);
    prod *= s;
    out.emplace_back(v, s);
  }
  if (prod != 1) throw std::logic_error("Hilbert reciprocity violated (internal error)");
  return out;
}

std::vector<Place> ramified_places(const Rat& a, const Rat& b) {
  std::vector<Place> out;
  for (const auto& [v, s] : hilbert_vector(a, b))
    if (s == -1) out.push_back(v);
  return out;
}

QuadField make_quadfield(const Int& d, QuadInvolution inv) {
  if (d == 0 || d == 1 || !is_squarefree(d))
    throw std::invalid_argument("quadratic field needs squarefree d != 0,1");
  return QuadField{d, inv};
}

bool is_norm(const Rat& a, const Int& d) {
  if (!is_squarefree(d) || d == 1)
    throw std::invalid_argument("is_norm: d must be squarefree, not a square");
  for (const auto& [v, s] : hilbert_vector(a, Rat(d)))
    if (s == -1) return false;
  return true;
}

namespace {

// bounded search for x^2 + y^2 = -1 with x,y in Q(sqrt(d)); returns success
bool two_square_certificate(const Int& d, long range) {
  // x = (a + b sqrt(d))/q, y = (c + e sqrt(d))/q
  for (long q = 1; q <= 2; ++q) {
    Rat q2(q * q);
    for (long a = -range; a <= range; ++a)
      for (long b = -range; b <= range; ++b)
        for (long c = -range; c <= range; ++c)
          for (long e = -range; e <= range; ++e) {
            if (a * b + c * e != 0) continue;  // sqrt(d) component
            Rat lhs = Rat(a * a + c * c) + Rat(d) * Rat(b * b + e * e);
            if (lhs == -q2) return true;
          }
  }
  return false;
}

}  // namespace

int level_quadratic(const Int& d) {
  if (sgn(d) >= 0) throw std::invalid_argument("level_quadratic: d must be negative");
  if (!is_squarefree(d)) throw std::invalid_argument("level_quadratic: d must be squarefree");
  if (d == -1) return 1;
  // explicit identity -1 = x^2 + y^2 found by bounded search certifies 2
  if (two_square_certificate(d, 6)) return 2;
  // -1 a sum of two squares <=> (-1,-1) splits over the field; the only
  // obstruction can be dyadic. When 2 splits (d = 1 mod 8) the completion is
  // Q_2 itself, where the ring Z[w]/(w^2) = Z/4 has squares {0,1} only, so
  // two squares cannot sum to -1; any proper quadratic extension of Q_2
  // kills the obstruction, and the field has no real places.
  Int dm8 = d % 8;
  if (sgn(dm8) < 0) dm8 += 8;
  if (dm8 == 1) return 4;
  return 2;
}

std::optional<int> order_of_unit_class_quadratic(const Int& d) {
  if (d == 0 || d == 1 || !is_squarefree(d))
    throw std::invalid_argument("order_of_unit_class: bad d");
  if (sgn(d) > 0) return std::nullopt;  // real field, infinite order
  return 2 * level_quadratic(d);
}

std::optional<int> order_of_unit_class_rationals() { return std::nullopt; }

bool quaternion_is_division(const Rat& alpha, const Rat& beta) {
  if (is_zero(alpha) || is_zero(beta))
    throw std::invalid_argument("quaternion_is_division: zero parameter");
  return !ramified_places(alpha, beta).empty();
}

}  // namespace blcob
