// Polynomial factorization over Q: reduce to a monic integer polynomial,
// factor mod a small prime (Berlekamp), Hensel-lift the modular factorization,
// and recombine factor subsets against a Mignotte coefficient bound.

#include <algorithm>
#include <cstdint>

#include "blcob/exactmath.hpp"

namespace blcob {
namespace {

// ---- arithmetic mod a small prime -----------------------------------------

using u64 = std::uint64_t;

u64 add_p(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 sub_p(u64 a, u64 b, u64 p) { return (a + p - b % p) % p; }
u64 mul_p(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}
u64 pow_p(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_p(r, a, p);
    a = mul_p(a, a, p);
    e >>= 1;
  }
  return r;
}
u64 inv_p(u64 a, u64 p) { return pow_p(a % p, p - 2, p); }

// polynomial mod p, lowest degree first, no trailing zeros
using FpPoly = std::vector<u64>;

void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
int fp_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
  }
  fp_trim(c);
  return c;
}

// f = q*g + r
std::pair<FpPoly, FpPoly> fp_divmod(FpPoly f, const FpPoly& g, u64 p) {
  assert(!g.empty());
  int dg = fp_deg(g);
  if (fp_deg(f) < dg) return {{}, f};
  FpPoly q(f.size() - g.size() + 1, 0);
  u64 ilc = inv_p(g.back(), p);
  for (int i = fp_deg(f); i >= dg; --i) {
    u64 coef = mul_p(f[i], ilc, p);
    if (!coef) continue;
    q[i - dg] = coef;
    for (int j = 0; j <= dg; ++j) f[i - dg + j] = sub_p(f[i - dg + j], mul_p(coef, g[j], p), p);
  }
  fp_trim(f);
  return {q, f};
}

FpPoly fp_monic(FpPoly f, u64 p) {
  if (f.empty()) return f;
  u64 ilc = inv_p(f.back(), p);
  for (auto& c : f) c = mul_p(c, ilc, p);
  return f;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
  while (!b.empty()) {
    FpPoly r = fp_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

FpPoly fp_deriv(const FpPoly& f, u64 p) {
  if (f.size() <= 1) return {};
  FpPoly d(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) d[i - 1] = mul_p(f[i], i % p, p);
  fp_trim(d);
  return d;
}

FpPoly fp_powmod(FpPoly base, Int e, const FpPoly& mod, u64 p) {
  FpPoly r = {1};
  base = fp_divmod(base, mod, p).second;
  while (sgn(e) > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = fp_divmod(fp_mul(r, base, p), mod, p).second;
    base = fp_divmod(fp_mul(base, base, p), mod, p).second;
    e >>= 1;
  }
  return r;
}

// sa + tb = 1 for coprime monic a, b
void fp_bezout(const FpPoly& a, const FpPoly& b, u64 p, FpPoly& s, FpPoly& t) {
  FpPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r2] = fp_divmod(r0, r1, p);
    FpPoly s2 = s0, t2 = t0;
    FpPoly qs = fp_mul(q, s1, p), qt = fp_mul(q, t1, p);
    s2.resize(std::max(s2.size(), qs.size()), 0);
    for (size_t i = 0; i < qs.size(); ++i) s2[i] = sub_p(s2[i], qs[i], p);
    t2.resize(std::max(t2.size(), qt.size()), 0);
    for (size_t i = 0; i < qt.size(); ++i) t2[i] = sub_p(t2[i], qt[i], p);
    fp_trim(s2);
    fp_trim(t2);
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  assert(fp_deg(r0) == 0 && r0[0] != 0);
  u64 ilc = inv_p(r0[0], p);
  for (auto& c : s0) c = mul_p(c, ilc, p);
  for (auto& c : t0) c = mul_p(c, ilc, p);
  s = std::move(s0);
  t = std::move(t0);
}

// Berlekamp factorization of a monic squarefree polynomial mod p.
std::vector<FpPoly> berlekamp(const FpPoly& f, u64 p) {
  int n = fp_deg(f);
  assert(n >= 1);
  if (n == 1) return {f};
  // rows of x^(i*p) mod f
  std::vector<FpPoly> qrows(n);
  FpPoly xp = fp_powmod({0, 1}, Int(static_cast<unsigned long>(p)), f, p);
  qrows[0] = {1};
  for (int i = 1; i < n; ++i) qrows[i] = fp_divmod(fp_mul(qrows[i - 1], xp, p), f, p).second;
  // kernel of (Q - I)^T: vectors v with v(x)^p == v(x) mod f
  std::vector<std::vector<u64>> m(n, std::vector<u64>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (size_t j = 0; j < qrows[i].size(); ++j) m[i][j] = qrows[i][j];
    m[i][i] = sub_p(m[i][i], 1, p);
  }
  // Gaussian elimination on rows as vectors over F_p (we need the kernel of
  // the linear map v -> v*M acting on row vectors, i.e. left kernel)
  // Transpose so it becomes a right kernel.
  std::vector<std::vector<u64>> mt(n, std::vector<u64>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mt[i][j] = m[j][i];
  std::vector<int> pivot_of_col(n, -1);
  int prow = 0;
  for (int col = 0; col < n && prow < n; ++col) {
    int piv = -1;
    for (int i = prow; i < n; ++i)
      if (mt[i][col]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(mt[piv], mt[prow]);
    u64 ilc = inv_p(mt[prow][col], p);
    for (int j = 0; j < n; ++j) mt[prow][j] = mul_p(mt[prow][j], ilc, p);
    for (int i = 0; i < n; ++i) {
      if (i == prow || !mt[i][col]) continue;
      u64 fmul = mt[i][col];
      for (int j = 0; j < n; ++j) mt[i][j] = sub_p(mt[i][j], mul_p(fmul, mt[prow][j], p), p);
    }
    pivot_of_col[col] = prow;
    ++prow;
  }
  std::vector<FpPoly> basis;
  for (int col = 0; col < n; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<u64> v(n, 0);
    v[col] = 1;
    for (int c2 = 0; c2 < n; ++c2)
      if (pivot_of_col[c2] >= 0) v[c2] = sub_p(0, mt[pivot_of_col[c2]][col], p);
    FpPoly vp(v.begin(), v.end());
    fp_trim(vp);
    basis.push_back(std::move(vp));
  }
  size_t r = basis.size();  // number of irreducible factors
  std::vector<FpPoly> factors = {f};
  if (r == 1) return factors;
  for (const FpPoly& v : basis) {
    if (fp_deg(v) < 1) continue;  // skip the constant kernel vector
    std::vector<FpPoly> next;
    for (const FpPoly& u : factors) {
      if (fp_deg(u) <= 1) {
        next.push_back(u);
        continue;
      }
      FpPoly rem = u;
      for (u64 c = 0; c < p && fp_deg(rem) > 0; ++c) {
        FpPoly vc = v;
        if (vc.empty()) vc = {0};
        vc[0] = sub_p(vc[0], c, p);
        fp_trim(vc);
        FpPoly g = fp_gcd(rem, vc, p);
        if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(rem)) {
          next.push_back(g);
          rem = fp_divmod(rem, g, p).first;
        }
      }
      if (fp_deg(rem) > 0) next.push_back(rem);
    }
    factors = std::move(next);
    if (factors.size() == r) break;
  }
  return factors;
}

// ---- Hensel lifting to Z/M ------------------------------------------------

// integer polynomials with coefficients reduced into [0, M)
using ZMPoly = std::vector<Int>;

void zm_trim(ZMPoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}
int zm_deg(const ZMPoly& f) { return static_cast<int>(f.size()) - 1; }

Int mod_pos(const Int& a, const Int& m) {
  Int r = a % m;
  if (sgn(r) < 0) r += m;
  return r;
}

ZMPoly zm_reduce(const ZMPoly& f, const Int& m) {
  ZMPoly g(f.size());
  for (size_t i = 0; i < f.size(); ++i) g[i] = mod_pos(f[i], m);
  zm_trim(g);
  return g;
}

ZMPoly zm_add(const ZMPoly& a, const ZMPoly& b, const Int& m) {
  ZMPoly c(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = mod_pos(c[i] + b[i], m);
  zm_trim(c);
  return c;
}
ZMPoly zm_sub(const ZMPoly& a, const ZMPoly& b, const Int& m) {
  ZMPoly c(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = mod_pos(c[i] - b[i], m);
  zm_trim(c);
  return c;
}
ZMPoly zm_mul(const ZMPoly& a, const ZMPoly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZMPoly c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return zm_reduce(c, m);
}

// division by a monic polynomial
std::pair<ZMPoly, ZMPoly> zm_divmod_monic(ZMPoly f, const ZMPoly& g, const Int& m) {
  assert(!g.empty() && g.back() == 1);
  int dg = zm_deg(g);
  if (zm_deg(f) < dg) return {{}, f};
  ZMPoly q(f.size() - g.size() + 1, Int(0));
  for (int i = zm_deg(f); i >= dg; --i) {
    Int coef = mod_pos(f[i], m);
    if (sgn(coef) == 0) continue;
    q[i - dg] = coef;
    for (int j = 0; j <= dg; ++j) f[i - dg + j] = mod_pos(f[i - dg + j] - coef * g[j], m);
  }
  zm_trim(f);
  zm_trim(q);
  return {q, f};
}

ZMPoly from_fp(const FpPoly& f) {
  ZMPoly g(f.size());
  for (size_t i = 0; i < f.size(); ++i) g[i] = Int(static_cast<unsigned long>(f[i]));
  return g;
}

// One quadratic Hensel step: from (f = g*h, s*g + t*h = 1) mod m to mod m^2,
// h and the lifted h* monic.
void hensel_step(const ZMPoly& f, ZMPoly& g, ZMPoly& h, ZMPoly& s, ZMPoly& t,
                 const Int& m) {
  Int m2 = m * m;
  ZMPoly e = zm_sub(zm_reduce(f, m2), zm_mul(g, h, m2), m2);
  auto [q, r] = zm_divmod_monic(zm_mul(s, e, m2), h, m2);
  ZMPoly g1 = zm_add(g, zm_add(zm_mul(t, e, m2), zm_mul(q, g, m2), m2), m2);
  ZMPoly h1 = zm_add(h, r, m2);
  ZMPoly b = zm_sub(zm_add(zm_mul(s, g1, m2), zm_mul(t, h1, m2), m2), {Int(1)}, m2);
  auto [c, d] = zm_divmod_monic(zm_mul(s, b, m2), h1, m2);
  ZMPoly s1 = zm_sub(s, d, m2);
  ZMPoly t1 = zm_sub(t, zm_add(zm_mul(t, b, m2), zm_mul(c, g1, m2), m2), m2);
  g = std::move(g1);
  h = std::move(h1);
  s = std::move(s1);
  t = std::move(t1);
}

// Lifts the factorization f = prod(facs) (monic, pairwise coprime mod p) from
// mod p to mod M = p^(2^K); returns the lifted monic factors mod M.
std::vector<ZMPoly> hensel_tree(const ZMPoly& f, const std::vector<FpPoly>& facs,
                                u64 p, const Int& M) {
  if (facs.size() == 1) return {zm_reduce(f, M)};
  size_t half = facs.size() / 2;
  FpPoly u = {1}, v = {1};
  for (size_t i = 0; i < half; ++i) u = fp_mul(u, facs[i], p);
  for (size_t i = half; i < facs.size(); ++i) v = fp_mul(v, facs[i], p);
  FpPoly s_fp, t_fp;
  fp_bezout(u, v, p, s_fp, t_fp);
  ZMPoly g = from_fp(u), h = from_fp(v), s = from_fp(s_fp), t = from_fp(t_fp);
  Int m(static_cast<unsigned long>(p));
  while (m < M) {
    hensel_step(zm_reduce(f, m * m), g, h, s, t, m);
    m *= m;
  }
  g = zm_reduce(g, M);
  h = zm_reduce(h, M);
  std::vector<FpPoly> left(facs.begin(), facs.begin() + half);
  std::vector<FpPoly> right(facs.begin() + half, facs.end());
  auto a = hensel_tree(g, left, p, M);
  auto b = hensel_tree(h, right, p, M);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// ---- integer polynomial helpers -------------------------------------------

using ZPoly = std::vector<Int>;  // exact integer coefficients

void z_trim(ZPoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}
int z_deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

// exact division test; quotient returned when g | f, both monic
std::optional<ZPoly> z_try_divide_monic(const ZPoly& f, const ZPoly& g) {
  assert(!g.empty() && g.back() == 1);
  ZPoly r = f;
  int dg = z_deg(g);
  if (z_deg(r) < dg) return std::nullopt;
  ZPoly q(r.size() - g.size() + 1, Int(0));
  for (int i = z_deg(r); i >= dg; --i) {
    Int coef = (static_cast<size_t>(i) < r.size()) ? r[i] : Int(0);
    if (sgn(coef) == 0) continue;
    q[i - dg] = coef;
    for (int j = 0; j <= dg; ++j) r[i - dg + j] -= coef * g[j];
  }
  z_trim(r);
  if (!r.empty()) return std::nullopt;
  z_trim(q);
  return q;
}

ZMPoly symmetric_rep(const ZMPoly& f, const Int& M) {
  ZMPoly g(f.size());
  Int half = M / 2;
  for (size_t i = 0; i < f.size(); ++i) {
    Int c = mod_pos(f[i], M);
    if (c > half) c -= M;
    g[i] = c;
  }
  return g;
}

constexpr u64 kPrimes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,
                           37,  41,  43,  47,  53,  59,  61,  67,  71,  73,
                           79,  83,  89,  97,  101, 103, 107, 109, 113, 127,
                           131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
                           181, 191, 193, 197, 199, 211, 223, 227, 229, 233};

// Factor a monic squarefree integer polynomial into monic irreducibles.
std::vector<ZPoly> factor_monic_squarefree_Z(const ZPoly& f) {
  int n = z_deg(f);
  if (n <= 1) return {f};

  u64 p = 0;
  std::vector<FpPoly> modular;
  for (u64 cand : kPrimes) {
    FpPoly fp(f.size());
    for (size_t i = 0; i < f.size(); ++i)
      fp[i] = static_cast<u64>(mod_pos(f[i], Int(static_cast<unsigned long>(cand))).get_ui());
    fp_trim(fp);
    if (fp_deg(fp) != n) continue;  // cannot happen for monic, but keep safe
    FpPoly g = fp_gcd(fp, fp_deriv(fp, cand), cand);
    if (fp_deg(g) != 0) continue;  // not squarefree mod cand
    modular = berlekamp(fp_monic(fp, cand), cand);
    p = cand;
    break;
  }
  if (p == 0) throw std::logic_error("no usable prime for factorization");
  if (modular.size() == 1) return {f};
  std::sort(modular.begin(), modular.end());

  // Mignotte-style bound: any monic factor of f has |coeff| <= 2^n * ||f||_2
  Int norm2(0);
  for (const Int& c : f) norm2 += c * c;
  Int bound = (isqrt(norm2) + 1) << n;
  Int M(static_cast<unsigned long>(p));
  while (M <= bound * 2) M *= M;

  std::vector<ZMPoly> lifted = hensel_tree(zm_reduce(f, M), modular, p, M);

  // subset recombination
  std::vector<ZPoly> result;
  ZPoly remaining = f;
  std::vector<ZMPoly> pool = lifted;
  long budget = 2000000;
  size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      if (--budget < 0) throw std::logic_error("factor recombination budget exceeded");
      ZMPoly cand = {Int(1)};
      for (size_t i : idx) cand = zm_mul(cand, pool[i], M);
      ZPoly candz = symmetric_rep(cand, M);
      bool small_enough = true;
      for (const Int& c : candz)
        if (abs(c) > bound) {
          small_enough = false;
          break;
        }
      if (small_enough && !candz.empty() && candz.back() == 1) {
        auto q = z_try_divide_monic(remaining, candz);
        if (q) {
          result.push_back(candz);
          remaining = *q;
          std::vector<ZMPoly> npool;
          for (size_t i = 0, k = 0; i < pool.size(); ++i) {
            if (k < idx.size() && idx[k] == i) {
              ++k;
              continue;
            }
            npool.push_back(pool[i]);
          }
          pool = std::move(npool);
          found = true;
          break;
        }
      }
      // next combination
      int pos = static_cast<int>(s) - 1;
      while (pos >= 0 && idx[pos] == pool.size() - s + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (size_t i = pos + 1; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++s;
  }
  if (z_deg(remaining) >= 1) result.push_back(remaining);
  return result;
}

RatPoly zpoly_to_rat(const ZPoly& f) {
  std::vector<Rat> c(f.size());
  for (size_t i = 0; i < f.size(); ++i) c[i] = Rat(f[i]);
  return RatPoly(std::move(c));
}

// Factor a monic squarefree rational polynomial into monic irreducibles:
// rescale x -> x/D to land in monic integer world, factor there, map back.
std::vector<RatPoly> factor_monic_squarefree_Q(const RatPoly& f) {
  int n = f.degree();
  if (n <= 1) return {f};
  Int d(1);
  for (const Rat& c : f.coeffs()) d = lcm(d, c.get_den());
  ZPoly fz(n + 1);
  Int dpow(1);
  for (int i = n; i >= 0; --i) {
    Rat c = f.coeff(i) * Rat(dpow);
    assert(is_integer(c));
    fz[i] = c.get_num();
    dpow *= d;
  }
  auto factors_z = factor_monic_squarefree_Z(fz);
  std::vector<RatPoly> out;
  for (const ZPoly& g : factors_z) {
    // map back: h(x) = g(D x) / D^deg(g), monic again
    int m = z_deg(g);
    std::vector<Rat> c(m + 1);
    Int num(1);
    for (int i = 0; i <= m; ++i) {
      c[i] = Rat(g[i] * num);
      num *= d;
    }
    RatPoly h = RatPoly(std::move(c)).monic();
    out.push_back(h);
  }
  return out;
}

}  // namespace

std::vector<std::pair<RatPoly, int>> factor_poly_Q(const RatPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor_poly_Q: zero polynomial");
  RatPoly g = f.monic();
  std::vector<std::pair<RatPoly, int>> out;
  if (g.degree() < 1) return out;
  RatPoly radical = divmod(g, poly_gcd(g, g.derivative())).first.monic();
  std::vector<RatPoly> irr = factor_monic_squarefree_Q(radical);
  for (const RatPoly& q : irr) {
    int mult = 0;
    RatPoly rest = g;
    while (true) {
      auto [quot, rem] = divmod(rest, q);
      if (!rem.is_zero()) break;
      rest = quot;
      ++mult;
    }
    assert(mult >= 1);
    out.emplace_back(q, mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree())
      return a.first.degree() < b.first.degree();
    for (int i = a.first.degree(); i >= 0; --i) {
      if (a.first.coeff(i) != b.first.coeff(i))
        return a.first.coeff(i) < b.first.coeff(i);
    }
    return false;
  });
  return out;
}

}  // namespace blcob
