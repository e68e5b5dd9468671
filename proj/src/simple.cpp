// Locating simple submodules and certifying simplicity.
//
// The search is layered. A cheap split-element pass handles most inputs: an
// algebra element theta is sampled, its minimal polynomial factored, and the
// kernels of the irreducible factors are spun; a proper spin is a submodule,
// while a multiplicity-one factor whose kernel spins the whole module on both
// the plain and the transposed side certifies simplicity. When that pass is
// inconclusive the image algebra is built explicitly: a nonzero trace radical
// gives a canonical proper submodule (the radical image), after which the
// module is known semisimple and the commutant decides the rest — a scalar
// commutant certifies simplicity outright, a splittable center splits the
// module, and the remaining hard case (a scrambled isotypic square) is
// resolved through the quaternion classification of the commutant: a division
// norm form certifies simplicity, an isotropic one produces an explicit
// nilpotent endomorphism whose kernel is the desired submodule.

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "blcob/exactmath.hpp"
#include "blcob/numbertheory.hpp"
#include "blcob/reptheory.hpp"
#include "span_util.hpp"

namespace blcob {

namespace {

struct SearchResult {
  RatMatrix basis;          // block-adapted basis of a simple submodule
  std::string certificate;  // set when basis spans the whole module
};

SearchResult find_simple_impl(const Representation& r, SplitMix& rng, int depth);

RatMatrix full_basis(const Representation& r) {
  return block_adapted_basis(r, RatMatrix::identity(r.dim()));
}

SearchResult descend(const Representation& r, const RatMatrix& sub,
                     SplitMix& rng, int depth) {
  Representation inner = restrict_representation(r, sub);
  SearchResult deep = find_simple_impl(inner, rng, depth + 1);
  return {block_adapted_basis(r, sub * deep.basis), ""};
}

std::vector<RatMatrix> theta_pool(const Representation& r) {
  std::vector<RatMatrix> pool;
  pool.push_back(r.rho_s);
  for (int i = 0; i < r.mu(); ++i)
    for (int j = 0; j < r.mu(); ++j) {
      RatMatrix a = arrow_matrix(r, i, j);
      if (!a.is_zero()) pool.push_back(std::move(a));
    }
  pool.push_back(r.rho_s * r.rho_s);
  return pool;
}

RatMatrix make_theta(const std::vector<RatMatrix>& pool, int round,
                     SplitMix& rng) {
  int m = pool[0].rows();
  if (round == 0) return pool[0];
  if (round == 1) {
    RatMatrix t(m, m);
    for (size_t k = 0; k < pool.size(); ++k)
      t = t + pool[k] * Rat(static_cast<long>(k) + 1);
    return t;
  }
  RatMatrix t(m, m);
  for (const RatMatrix& p : pool) {
    long c = rng.range(-4, 4);
    if (c != 0) t = t + p * Rat(c);
  }
  return t;
}

// one split-element round: returns a proper nonzero submodule if found, sets
// *certificate when simplicity is certified, and stays silent otherwise
std::optional<RatMatrix> meataxe_round(const Representation& r,
                                       const RatMatrix& theta,
                                       std::string* certificate) {
  int m = r.dim();
  RatPoly mp = minpoly(theta);
  auto factors = factor_poly_Q(mp);
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) {
              return a.first.degree() < b.first.degree();
            });
  for (const auto& [f, mult] : factors) {
    RatMatrix ftheta = f.eval(theta);
    RatMatrix ker = kernel_basis(ftheta);
    bool all_full = true;
    for (int c = 0; c < ker.cols(); ++c) {
      RatMatrix s = spin(r, ker.col(c));
      if (s.cols() > 0 && s.cols() < m) return s;
      if (s.cols() != m) all_full = false;
    }
    bool dual_full = false;
    RatMatrix kert = kernel_basis(ftheta.transpose());
    if (kert.cols() > 0) {
      RatMatrix st = spin_transposed(r, kert.col(0));
      if (st.cols() < m) {
        // the annihilator of a proper transposed-side submodule is a proper
        // submodule on the plain side
        RatMatrix ann = kernel_basis(st.transpose());
        if (ann.cols() > 0 && ann.cols() < m)
          return block_adapted_basis(r, ann);
      } else {
        dual_full = true;
      }
    }
    if (ker.cols() == f.degree() && all_full && dual_full) {
      std::ostringstream os;
      os << "multiplicity-one certificate: the factor " << f.str()
         << " of a sampled algebra element has a kernel of dimension "
         << f.degree()
         << " generating the whole module on both sides; any proper submodule "
            "would have to contain that kernel or annihilate its "
            "transposed-side counterpart";
      *certificate = os.str();
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// sweep for a commutant element with reducible minimal polynomial: its factor
// kernel is a proper nonzero submodule
std::optional<RatMatrix> reducible_commutant_split(
    const Representation& r, const EndAlgebra& e,
    const std::vector<std::vector<Rat>>& candidates, SplitMix& rng,
    int random_budget) {
  int n = e.dim(), m = r.dim();
  auto probe = [&](const std::vector<Rat>& c) -> std::optional<RatMatrix> {
    RatMatrix x = e.from_coords(c);
    if (x.is_zero()) return std::nullopt;
    RatPoly mp = minpoly(x);
    if (mp.degree() < 1) return std::nullopt;
    auto fac = factor_poly_Q(mp);
    if (fac.size() == 1 && fac[0].second == 1) return std::nullopt;
    const RatPoly& f = fac[0].first;  // proper factor of a reducible minpoly
    RatMatrix ker = kernel_basis(f.eval(x));
    if (ker.cols() == 0 || ker.cols() == m) return std::nullopt;
    return block_adapted_basis(r, ker);
  };
  for (const auto& c : candidates)
    if (auto s = probe(c)) return s;
  for (int t = 0; t < random_budget; ++t) {
    std::vector<Rat> c(static_cast<size_t>(n), Rat(0));
    for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = Rat(rng.range(-5, 5));
    if (auto s = probe(c)) return s;
  }
  return std::nullopt;
}

SearchResult find_simple_impl(const Representation& r, SplitMix& rng,
                              int depth) {
  int m = r.dim();
  if (m == 0)
    throw std::invalid_argument("the zero module has no simple submodule");
  if (depth > 64) throw std::logic_error("submodule descent did not terminate");
  if (m == 1) return {full_basis(r), "one-dimensional module"};

  std::vector<RatMatrix> pool = theta_pool(r);
  std::string cert;

  // cheap pass: a few split elements
  for (int t = 0; t < 4; ++t) {
    RatMatrix theta = make_theta(pool, t, rng);
    if (theta.is_zero()) continue;
    if (auto s = meataxe_round(r, theta, &cert)) return descend(r, *s, rng, depth);
    if (!cert.empty()) return {full_basis(r), cert};
  }

  // explicit image algebra: radical test (trace form, characteristic zero)
  std::vector<RatMatrix> words = image_algebra_basis(r);
  int na = static_cast<int>(words.size());
  {
    RatMatrix gram(na, na);
    for (int i = 0; i < na; ++i)
      for (int j = i; j < na; ++j) {
        Rat t = (words[static_cast<size_t>(i)] * words[static_cast<size_t>(j)]).trace();
        gram(i, j) = t;
        gram(j, i) = t;
      }
    RatMatrix rad = kernel_basis(gram);
    if (rad.cols() > 0) {
      // the radical image J*V is a proper nonzero submodule
      RatMatrix stacked(m, 0);
      for (int c = 0; c < rad.cols(); ++c) {
        RatMatrix x(m, m);
        for (int i = 0; i < na; ++i)
          if (!is_zero(rad(i, c))) x = x + words[static_cast<size_t>(i)] * rad(i, c);
        stacked = RatMatrix::hconcat(stacked, x);
      }
      RatMatrix jv = block_adapted_basis(r, stacked);
      if (jv.cols() == 0 || jv.cols() == m)
        throw std::logic_error("radical image is not a proper submodule");
      return descend(r, jv, rng, depth);
    }
  }
  // from here on the module is known semisimple

  EndAlgebra e = endomorphism_algebra(r);
  int cd = e.dim();
  if (cd == 1)
    return {full_basis(r), "semisimple module with scalar commutant"};

  std::vector<std::vector<Rat>> cz = algebra_center(e);
  int zd = static_cast<int>(cz.size());

  // center pass: any central element with reducible minimal polynomial splits
  // the module; an irreducible one of full center degree proves the center is
  // a field (the module is then isotypic)
  bool center_is_field = false;
  {
    std::vector<std::vector<Rat>> cands;
    for (const auto& z : cz) cands.push_back(z);
    for (int a = 0; a < zd; ++a)
      for (int b = a + 1; b < zd; ++b)
        for (long t = 1; t <= 3; ++t) {
          std::vector<Rat> c = cz[static_cast<size_t>(a)];
          for (int i = 0; i < zd; ++i)
            c[static_cast<size_t>(i)] += Rat(t) * cz[static_cast<size_t>(b)][static_cast<size_t>(i)];
          cands.push_back(std::move(c));
        }
    for (int t = 0; t < 40 && zd > 1; ++t) {
      std::vector<Rat> c(cz[0].size(), Rat(0));
      for (int i = 0; i < zd; ++i) {
        Rat w(rng.range(-4, 4));
        for (size_t k = 0; k < c.size(); ++k)
          c[k] += w * cz[static_cast<size_t>(i)][k];
      }
      cands.push_back(std::move(c));
    }
    for (const auto& zc : cands) {
      RatMatrix zm = e.from_coords(zc);
      if (zm.is_zero()) continue;
      RatPoly mp = minpoly(zm);
      auto fac = factor_poly_Q(mp);
      if (fac.size() > 1 || fac[0].second > 1) {
        RatMatrix ker = kernel_basis(fac[0].first.eval(zm));
        if (ker.cols() > 0 && ker.cols() < m)
          return descend(r, block_adapted_basis(r, ker), rng, depth);
      } else if (mp.degree() == zd) {
        center_is_field = true;
        break;
      }
    }
  }

  // larger split-element sweep
  for (int t = 4; t < 28; ++t) {
    RatMatrix theta = make_theta(pool, t, rng);
    if (theta.is_zero()) continue;
    if (auto s = meataxe_round(r, theta, &cert)) return descend(r, *s, rng, depth);
    if (!cert.empty()) return {full_basis(r), cert};
  }

  // endgame: semisimple, center understood when center_is_field
  if (center_is_field && zd > 0 && cd % zd == 0) {
    int q = cd / zd;
    if (q == 1)
      return {full_basis(r),
              "semisimple isotypic module with commutative field commutant"};
    if (q == 4 && zd == 1) {
      // the commutant is a quaternion algebra over Q or a split 2x2 matrix
      // algebra; build anticommuting generators and decide by the norm form
      std::vector<Rat> gi;
      Rat alpha;
      for (int attempt = 0; attempt < 64 && gi.empty(); ++attempt) {
        std::vector<Rat> c(static_cast<size_t>(cd), Rat(0));
        if (attempt < cd) {
          c[static_cast<size_t>(attempt)] = 1;
        } else {
          for (int i = 0; i < cd; ++i) c[static_cast<size_t>(i)] = Rat(rng.range(-3, 3));
        }
        RatMatrix x = e.from_coords(c);
        RatPoly mp = minpoly(x);
        if (mp.degree() != 2) continue;
        auto fac = factor_poly_Q(mp);
        if (fac.size() > 1 || fac[0].second > 1) {
          RatMatrix ker = kernel_basis(fac[0].first.eval(x));
          if (ker.cols() > 0 && ker.cols() < m)
            return descend(r, block_adapted_basis(r, ker), rng, depth);
          continue;
        }
        Rat t = -mp.coeff(1);
        std::vector<Rat> w = c;
        for (size_t i = 0; i < w.size(); ++i) w[i] -= (t / 2) * e.identity[i];
        gi = w;
        alpha = t * t / Rat(4) - mp.coeff(0);
      }
      if (!gi.empty()) {
        RatMatrix sys(cd, cd);
        for (int u = 0; u < cd; ++u) {
          std::vector<Rat> xu(static_cast<size_t>(cd), Rat(0));
          xu[static_cast<size_t>(u)] = 1;
          std::vector<Rat> lhs = e.mul(gi, xu), rhs = e.mul(xu, gi);
          for (int k = 0; k < cd; ++k)
            sys(k, u) = lhs[static_cast<size_t>(k)] + rhs[static_cast<size_t>(k)];
        }
        RatMatrix ker = kernel_basis(sys);
        if (ker.cols() > 0) {
          std::vector<Rat> gj(static_cast<size_t>(cd));
          for (int i = 0; i < cd; ++i) gj[static_cast<size_t>(i)] = ker(i, 0);
          std::vector<Rat> jj = e.mul(gj, gj);
          int pivot = -1;
          for (int i = 0; i < cd; ++i)
            if (!is_zero(e.identity[static_cast<size_t>(i)])) { pivot = i; break; }
          Rat beta = jj[static_cast<size_t>(pivot)] / e.identity[static_cast<size_t>(pivot)];
          bool scalar = true;
          for (int i = 0; i < cd; ++i)
            if (jj[static_cast<size_t>(i)] != beta * e.identity[static_cast<size_t>(i)]) {
              scalar = false;
              break;
            }
          if (scalar && is_zero(beta)) {
            // j itself is a nonzero nilpotent commutant element
            RatMatrix kj = kernel_basis(e.from_coords(gj));
            if (kj.cols() > 0 && kj.cols() < m)
              return descend(r, block_adapted_basis(r, kj), rng, depth);
          }
          if (scalar && !is_zero(beta)) {
            if (quaternion_is_division(alpha, beta))
              return {full_basis(r),
                      "semisimple isotypic module whose commutant is a "
                      "division quaternion algebra"};
            // split: the norm form <alpha, beta, -alpha*beta> is isotropic;
            // an isotropic triple gives a nilpotent commutant element
            std::vector<Rat> gij = e.mul(gi, gj);
            for (long h = 1; h <= 40; ++h) {
              for (long x = -h; x <= h; ++x)
                for (long y = -h; y <= h; ++y)
                  for (long z = -h; z <= h; ++z) {
                    if (std::max({labs(x), labs(y), labs(z)}) != h) continue;
                    if (!is_zero(alpha * Rat(x * x) + beta * Rat(y * y) -
                                 alpha * beta * Rat(z * z)))
                      continue;
                    std::vector<Rat> s(static_cast<size_t>(cd), Rat(0));
                    for (int i = 0; i < cd; ++i)
                      s[static_cast<size_t>(i)] =
                          Rat(x) * gi[static_cast<size_t>(i)] +
                          Rat(y) * gj[static_cast<size_t>(i)] +
                          Rat(z) * gij[static_cast<size_t>(i)];
                    RatMatrix sm = e.from_coords(s);
                    if (sm.is_zero()) continue;
                    RatMatrix ks = kernel_basis(sm);
                    if (ks.cols() > 0 && ks.cols() < m)
                      return descend(r, block_adapted_basis(r, ks), rng, depth);
                  }
            }
            throw std::logic_error(
                "split quaternion commutant detected but no small isotropic "
                "vector found");
          }
        }
      }
    }
  }

  // last resort: bounded sweep for a commutant element with reducible
  // minimal polynomial
  {
    std::vector<std::vector<Rat>> singles;
    for (int i = 0; i < cd; ++i) {
      std::vector<Rat> c(static_cast<size_t>(cd), Rat(0));
      c[static_cast<size_t>(i)] = 1;
      singles.push_back(std::move(c));
    }
    if (auto s = reducible_commutant_split(r, e, singles, rng, 2500))
      return descend(r, *s, rng, depth);
  }

  std::ostringstream os;
  os << "cannot certify simplicity: semisimple module with commutant of "
        "dimension "
     << cd << " over a center of dimension " << zd;
  throw std::logic_error(os.str());
}

}  // namespace

RatMatrix find_simple_submodule(const Representation& r, std::uint64_t seed) {
  SplitMix rng(seed * 0x9e3779b97f4a7c15ull + 0xb10cb10cull);
  return find_simple_impl(r, rng, 0).basis;
}

SimplicityResult is_simple(const Representation& r, std::uint64_t seed) {
  SplitMix rng(seed * 0x9e3779b97f4a7c15ull + 0xb10cb10cull);
  SearchResult found = find_simple_impl(r, rng, 0);
  SimplicityResult out;
  out.simple = (found.basis.cols() == r.dim());
  out.witness = found.basis;
  out.certificate = found.certificate;
  return out;
}

}  // namespace blcob
