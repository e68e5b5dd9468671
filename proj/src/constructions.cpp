#include "blcob/constructions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "blcob/exactmath.hpp"

namespace blcob {

namespace {

void check_presentation(const AlgebraPresentation& e) {
  if (e.basis_left.empty() || e.basis_left.size() != e.basis_right.size())
    throw std::invalid_argument("algebra presentation has no basis");
  if (e.kind != AlgebraKind::rationals && e.kind != AlgebraKind::quad_field &&
      e.kind != AlgebraKind::quaternion)
    throw std::invalid_argument("algebra presentation has no recognized kind");
}

// Base generator coordinates for components 1..mu. Any single quadratic
// generator spans the field with 1; the quaternion list leads with i and j so
// that every prefix of length >= 2 generates.
std::vector<std::vector<Rat>> base_generators(const AlgebraPresentation& e,
                                              int mu) {
  std::vector<std::vector<Rat>> out;
  size_t n = static_cast<size_t>(e.dim());
  for (int i = 1; i <= mu; ++i) {
    std::vector<Rat> c(n, Rat(0));
    switch (e.kind) {
      case AlgebraKind::rationals:
        c[0] = i;
        break;
      case AlgebraKind::quad_field:
        c[0] = i - 1;  // w + (i-1)
        c[1] = 1;
        break;
      case AlgebraKind::quaternion:
        if (i == 1) {
          c[1] = 1;  // i
        } else if (i == 2) {
          c[2] = 1;  // j
        } else {
          c[0] = i - 2;  // i + (i-2)
          c[1] = 1;
        }
        break;
      default:
        throw std::invalid_argument("algebra presentation has no recognized kind");
    }
    out.push_back(std::move(c));
  }
  return out;
}

// multiply through by the lcm of the entry denominators
RatMatrix integer_scaled(const RatMatrix& a) {
  Int l(1);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      Int den = a(i, j).get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
  return a * Rat(l);
}

void check_commutant(const Representation& r, int expect) {
  EndAlgebra ea = endomorphism_algebra(r);
  if (ea.dim() != expect) {
    std::ostringstream os;
    os << "commutant too large: dimension " << ea.dim() << " instead of "
       << expect << "; the chosen generators do not generate the algebra";
    throw std::domain_error(os.str());
  }
}

}  // namespace

RatMatrix AlgebraPresentation::lmul(const std::vector<Rat>& x) const {
  if (static_cast<int>(x.size()) != dim())
    throw std::invalid_argument("coordinate vector has the wrong length");
  RatMatrix m(dim(), dim());
  for (int k = 0; k < dim(); ++k)
    if (!is_zero(x[static_cast<size_t>(k)]))
      m = m + basis_left[static_cast<size_t>(k)] * x[static_cast<size_t>(k)];
  return m;
}

RatMatrix AlgebraPresentation::rmul(const std::vector<Rat>& x) const {
  if (static_cast<int>(x.size()) != dim())
    throw std::invalid_argument("coordinate vector has the wrong length");
  RatMatrix m(dim(), dim());
  for (int k = 0; k < dim(); ++k)
    if (!is_zero(x[static_cast<size_t>(k)]))
      m = m + basis_right[static_cast<size_t>(k)] * x[static_cast<size_t>(k)];
  return m;
}

AlgebraPresentation present_rationals() {
  AlgebraPresentation e;
  e.kind = AlgebraKind::rationals;
  e.basis_left = {RatMatrix::identity(1)};
  e.basis_right = e.basis_left;
  return e;
}

AlgebraPresentation present_quadratic(const Int& d) {
  if (is_perfect_square(d))
    throw std::invalid_argument("d must be a non-square integer");
  AlgebraPresentation e;
  e.kind = AlgebraKind::quad_field;
  e.d = d;
  // w^2 = w + (d-1)/4 when d = 1 mod 4, else w^2 = d
  RatMatrix lw(2, 2);
  if (((d % 4) + 4) % 4 == 1) {
    lw(0, 1) = rat(d - 1, Int(4));
    lw(1, 0) = 1;
    lw(1, 1) = 1;
  } else {
    lw(0, 1) = Rat(d);
    lw(1, 0) = 1;
  }
  e.basis_left = {RatMatrix::identity(2), lw};
  e.basis_right = e.basis_left;
  return e;
}

AlgebraPresentation present_quaternion(const Rat& alpha, const Rat& beta) {
  if (is_zero(alpha) || is_zero(beta))
    throw std::invalid_argument("alpha and beta must be nonzero");
  AlgebraPresentation e;
  e.kind = AlgebraKind::quaternion;
  e.alpha = alpha;
  e.beta = beta;
  const Rat a = alpha, b = beta, ab = alpha * beta;
  RatMatrix li(4, 4), lj(4, 4), lk(4, 4), ri(4, 4), rj(4, 4), rk(4, 4);
  // y -> iy, jy, (ij)y on coordinates over 1, i, j, ij
  li(0, 1) = a, li(1, 0) = 1, li(2, 3) = a, li(3, 2) = 1;
  lj(0, 2) = b, lj(1, 3) = -b, lj(2, 0) = 1, lj(3, 1) = -1;
  lk(0, 3) = -ab, lk(1, 2) = b, lk(2, 1) = -a, lk(3, 0) = 1;
  // y -> yi, yj, y(ij)
  ri(0, 1) = a, ri(1, 0) = 1, ri(2, 3) = -a, ri(3, 2) = -1;
  rj(0, 2) = b, rj(1, 3) = b, rj(2, 0) = 1, rj(3, 1) = 1;
  rk(0, 3) = -ab, rk(1, 2) = -b, rk(2, 1) = a, rk(3, 0) = 1;
  e.basis_left = {RatMatrix::identity(4), li, lj, lk};
  e.basis_right = {RatMatrix::identity(4), ri, rj, rk};
  return e;
}

RatMatrix involution_action(const AlgebraPresentation& e, InvolutionSpec inv) {
  check_presentation(e);
  switch (e.kind) {
    case AlgebraKind::rationals:
      if (inv == InvolutionSpec::trivial) return RatMatrix::identity(1);
      break;
    case AlgebraKind::quad_field: {
      if (inv == InvolutionSpec::trivial) return RatMatrix::identity(2);
      if (inv == InvolutionSpec::conjugation) {
        RatMatrix m(2, 2);
        m(0, 0) = 1;
        m(1, 1) = -1;
        // on the half-integer basis the conjugate of w is 1 - w
        if (((e.d % 4) + 4) % 4 == 1) m(0, 1) = 1;
        return m;
      }
      break;
    }
    case AlgebraKind::quaternion: {
      RatMatrix m = RatMatrix::identity(4);
      if (inv == InvolutionSpec::standard) {
        m(1, 1) = -1;
        m(2, 2) = -1;
        m(3, 3) = -1;
        return m;
      }
      if (inv == InvolutionSpec::nonstandard) {
        m(2, 2) = -1;  // fixes 1, i, ij and negates j
        return m;
      }
      break;
    }
    default:
      break;
  }
  throw std::invalid_argument("involution does not apply to this algebra kind");
}

Representation build_plain(const AlgebraPresentation& e, int mu, long shift) {
  check_presentation(e);
  if (mu < 1) throw std::invalid_argument("mu must be at least 1");
  int n = e.dim();
  auto gens = base_generators(e, mu);
  if (mu >= 2) gens[1][0] += shift;
  RatMatrix rho(mu * n, mu * n);
  for (int i = 0; i < mu; ++i)
    for (int j = 0; j < mu; ++j)
      rho.set_submatrix(i * n, j * n, i == j ? e.rmul(gens[static_cast<size_t>(i)])
                                             : RatMatrix::identity(n));
  Representation r{std::vector<int>(static_cast<size_t>(mu), n), std::move(rho)};
  check_commutant(r, n);
  return r;
}

SelfdualConstruction build_selfdual(const AlgebraPresentation& e,
                                    InvolutionSpec inv, int epsilon, int mu,
                                    long shift_bound) {
  check_presentation(e);
  if (epsilon != 1 && epsilon != -1)
    throw std::invalid_argument("epsilon must be +1 or -1");
  if (mu < 2) throw std::invalid_argument("mu must be at least 2");
  if (shift_bound < 0)
    throw std::invalid_argument("shift bound must be nonnegative");
  RatMatrix iota = involution_action(e, inv);
  int n = e.dim();

  // Generators x_i = base_i + k, taking the smallest k >= 0 such that r(x_i)
  // is not similar to 1 - r(x_i)^T (their characteristic polynomials differ;
  // both are powers of irreducibles, so equality is similarity) and x_i was
  // not already picked for an earlier component.
  auto bases = base_generators(e, mu);
  std::vector<std::vector<Rat>> xs;
  for (int i = 0; i < mu; ++i) {
    std::vector<Rat> pick;
    for (long k = 0; k <= shift_bound && pick.empty(); ++k) {
      std::vector<Rat> c = bases[static_cast<size_t>(i)];
      c[0] += k;
      RatMatrix rx = e.rmul(c);
      if (charpoly(rx) == charpoly(RatMatrix::identity(n) - rx.transpose()))
        continue;
      if (std::find(xs.begin(), xs.end(), c) != xs.end()) continue;
      pick = std::move(c);
    }
    if (pick.empty()) {
      std::ostringstream os;
      os << "no generator shift in [0, " << shift_bound << "] makes component "
         << (i + 1) << " non-isomorphic to its twisted dual";
      throw std::domain_error(os.str());
    }
    xs.push_back(std::move(pick));
  }

  // delta intertwines left multiplication with its involuted transpose:
  // delta l(x) = l(I(x))^T delta imposed on basis elements, hence all x by
  // linearity. The solutions form a simple-module hom space, so the system
  // has a nonzero solution and every nonzero solution is invertible; take
  // the first kernel column for determinism.
  RatMatrix sys(n * n * n, n * n);
  for (int k = 0; k < n; ++k) {
    const RatMatrix& p = e.basis_left[static_cast<size_t>(k)];
    RatMatrix q(n, n);
    for (int m = 0; m < n; ++m)
      if (!is_zero(iota(m, k)))
        q = q + e.basis_left[static_cast<size_t>(m)] * iota(m, k);
    q = q.transpose();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int row = (k * n + i) * n + j;
        for (int m = 0; m < n; ++m) {
          sys(row, i * n + m) += p(m, j);
          sys(row, m * n + j) -= q(i, m);
        }
      }
  }
  RatMatrix ker = kernel_basis(sys);
  if (ker.cols() == 0)
    throw std::logic_error("no intertwiner realizes the involution twist");
  RatMatrix delta(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) delta(i, j) = ker(i * n + j, 0);
  delta = integer_scaled(delta);
  RatMatrix gamma = integer_scaled(inverse(delta));

  // Component i is E + E^*: s acts by r(x_i) on E, by 1 - r(x_i)^T on E^*,
  // and couples distinct components through gamma and delta. The i > j
  // blocks mirror the i < j blocks so that b rho(s) = (1 - rho(s))^T b holds
  // with the hyperbolic-looking b below (which is epsilon-symmetric and
  // nonsingular but not metabolic for the induced involution).
  int nc = 2 * n;
  RatMatrix rho(mu * nc, mu * nc), b(mu * nc, mu * nc);
  RatMatrix eye = RatMatrix::identity(n);
  for (int i = 0; i < mu; ++i) {
    RatMatrix rx = e.rmul(xs[static_cast<size_t>(i)]);
    rho.set_submatrix(i * nc, i * nc, rx);
    rho.set_submatrix(i * nc + n, i * nc + n, eye - rx.transpose());
    b.set_submatrix(i * nc, i * nc + n, eye);
    b.set_submatrix(i * nc + n, i * nc, eye * Rat(epsilon));
    for (int j = 0; j < mu; ++j) {
      if (j == i) continue;
      RatMatrix g = i < j ? gamma : -(gamma.transpose() * Rat(epsilon));
      RatMatrix dd = i < j ? delta : -(delta.transpose() * Rat(epsilon));
      rho.set_submatrix(i * nc, j * nc, eye);
      rho.set_submatrix(i * nc, j * nc + n, g);
      rho.set_submatrix(i * nc + n, j * nc, dd);
      rho.set_submatrix(i * nc + n, j * nc + n, -eye);
    }
  }
  Representation rep{std::vector<int>(static_cast<size_t>(mu), nc),
                     std::move(rho)};
  check_commutant(rep, n);
  if (b * rep.rho_s !=
          (RatMatrix::identity(mu * nc) - rep.rho_s).transpose() * b ||
      b != b.transpose() * Rat(epsilon))
    throw std::logic_error("construction violates its defining identities");
  return SelfdualConstruction{std::move(rep), std::move(b)};
}

SeifertForm builtin_order8(int epsilon) {
  if (epsilon != 1 && epsilon != -1)
    throw std::invalid_argument("epsilon must be +1 or -1");
  long e = epsilon;
  long rows[8][8] = {
      {0, 0, 0, 0, /**/ 0, 1, -1, 0},
      {0, 0, 0, 0, /**/ 1, 0, 0, -1},
      {e, 0, 0, 0, /**/ e, 0, 0, e},
      {0, e, 0, 0, /**/ 0, e, e, 0},
      {0, -e, -1, 0, /**/ 0, 0, 1, -1},
      {-e, 0, 0, -1, /**/ 0, 0, 7, 1},
      {e, 0, 0, -1, /**/ 0, -7 * e, 0, 0},
      {0, e, -1, 0, /**/ e, 0, 0, 0},
  };
  RatMatrix lam(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) lam(i, j) = rat(rows[i][j]);
  return SeifertForm{epsilon, {4, 4}, lam};
}

}  // namespace blcob
