#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "blcob/exactmath.hpp"
#include "blcob/reptheory.hpp"
#include "span_util.hpp"

namespace blcob {

std::string ClassTag::str() const {
  std::ostringstream os;
  switch (kind) {
    case AlgebraKind::rationals:
      os << "Q";
      break;
    case AlgebraKind::quad_field:
      os << "QuadField(" << int_str(d) << ")";
      break;
    case AlgebraKind::quaternion:
      os << "Quaternion(" << rat_str(alpha) << "," << rat_str(beta) << ")";
      break;
    case AlgebraKind::partial:
      os << "partial(dim=" << dim << ",center=" << center_dim << ")";
      break;
  }
  return os.str();
}

std::vector<Rat> EndAlgebra::coords(const RatMatrix& x) const {
  int n = dim(), m = ambient_dim;
  RatMatrix stack(m * m, n), target(m * m, 1);
  for (int j = 0; j < n; ++j) {
    std::vector<Rat> f = flatten(basis[static_cast<size_t>(j)]);
    for (int i = 0; i < m * m; ++i) stack(i, j) = f[static_cast<size_t>(i)];
  }
  std::vector<Rat> fx = flatten(x);
  for (int i = 0; i < m * m; ++i) target(i, 0) = fx[static_cast<size_t>(i)];
  auto sol = solve(stack, target);
  if (!sol) throw std::invalid_argument("matrix lies outside the algebra");
  std::vector<Rat> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = (*sol)(i, 0);
  return out;
}

RatMatrix EndAlgebra::from_coords(const std::vector<Rat>& c) const {
  if (c.size() != basis.size()) throw std::invalid_argument("coordinate size");
  RatMatrix out(ambient_dim, ambient_dim);
  for (size_t i = 0; i < c.size(); ++i)
    if (!is_zero(c[i])) out = out + basis[i] * c[i];
  return out;
}

std::vector<Rat> EndAlgebra::mul(const std::vector<Rat>& a,
                                 const std::vector<Rat>& b) const {
  size_t n = basis.size();
  if (a.size() != n || b.size() != n) throw std::invalid_argument("coordinate size");
  std::vector<Rat> out(n, Rat(0));
  for (size_t i = 0; i < n; ++i) {
    if (is_zero(a[i])) continue;
    for (size_t j = 0; j < n; ++j) {
      if (is_zero(b[j])) continue;
      Rat c = a[i] * b[j];
      const std::vector<Rat>& row = mult_table[i][j];
      for (size_t k = 0; k < n; ++k) out[k] += c * row[k];
    }
  }
  return out;
}

EndAlgebra endomorphism_algebra(const Representation& r) {
  int m = r.dim();
  struct Slot { int row, col; };
  std::vector<Slot> slots;
  for (int b = 0; b < r.mu(); ++b) {
    int o = block_offset(r.block_dims, b);
    for (int p = 0; p < r.block_dims[static_cast<size_t>(b)]; ++p)
      for (int q = 0; q < r.block_dims[static_cast<size_t>(b)]; ++q)
        slots.push_back({o + p, o + q});
  }
  int n = static_cast<int>(slots.size());
  RatMatrix sys(m * m, n);
  for (int u = 0; u < n; ++u) {
    RatMatrix e(m, m);
    e(slots[static_cast<size_t>(u)].row, slots[static_cast<size_t>(u)].col) = 1;
    RatMatrix c = e * r.rho_s - r.rho_s * e;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) sys(i * m + j, u) = c(i, j);
  }
  RatMatrix ker = kernel_basis(sys);

  EndAlgebra e;
  e.ambient_dim = m;
  for (int c = 0; c < ker.cols(); ++c) {
    RatMatrix x(m, m);
    for (int u = 0; u < n; ++u)
      x(slots[static_cast<size_t>(u)].row, slots[static_cast<size_t>(u)].col) =
          ker(u, c);
    e.basis.push_back(std::move(x));
  }
  int nb = e.dim();
  e.mult_table.assign(static_cast<size_t>(nb),
                      std::vector<std::vector<Rat>>(static_cast<size_t>(nb)));
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j)
      e.mult_table[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          e.coords(e.basis[static_cast<size_t>(i)] * e.basis[static_cast<size_t>(j)]);
  e.identity = e.coords(RatMatrix::identity(m));
  return e;
}

// center of the algebra in coordinates: x with x*b_j = b_j*x for all j
std::vector<std::vector<Rat>> algebra_center(const EndAlgebra& e) {
  int n = e.dim();
  RatMatrix sys(n * n, n);
  for (int u = 0; u < n; ++u) {
    std::vector<Rat> xu(static_cast<size_t>(n), Rat(0));
    xu[static_cast<size_t>(u)] = 1;
    for (int j = 0; j < n; ++j) {
      std::vector<Rat> bj(static_cast<size_t>(n), Rat(0));
      bj[static_cast<size_t>(j)] = 1;
      std::vector<Rat> lhs = e.mul(xu, bj), rhs = e.mul(bj, xu);
      for (int k = 0; k < n; ++k)
        sys(j * n + k, u) = lhs[static_cast<size_t>(k)] - rhs[static_cast<size_t>(k)];
    }
  }
  RatMatrix ker = kernel_basis(sys);
  std::vector<std::vector<Rat>> out;
  for (int c = 0; c < ker.cols(); ++c) {
    std::vector<Rat> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = ker(i, c);
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

[[noreturn]] void zero_divisor_error(const RatPoly& f, const RatPoly& g,
                                     const std::string& where) {
  std::ostringstream os;
  os << "zero divisors in " << where << ": f(u)*g(u)=0 with f=" << f.str()
     << ", g=" << g.str();
  throw std::domain_error(os.str());
}

// minimal polynomial of an algebra element given by coordinates (equals the
// minimal polynomial of its faithful ambient matrix)
RatPoly elt_minpoly(const EndAlgebra& e, const std::vector<Rat>& c) {
  return minpoly(e.from_coords(c));
}

}  // namespace

ClassTag recognize_algebra(EndAlgebra& e) {
  ClassTag tag;
  int n = e.dim();
  tag.dim = n;
  std::vector<std::vector<Rat>> cz = algebra_center(e);
  tag.center_dim = static_cast<int>(cz.size());

  if (n == 1) {
    tag.kind = AlgebraKind::rationals;
    e.class_tag = tag;
    return tag;
  }

  if (n == 2) {
    // pick a non-scalar element
    std::vector<Rat> u;
    for (int i = 0; i < n && u.empty(); ++i) {
      std::vector<Rat> c(static_cast<size_t>(n), Rat(0));
      c[static_cast<size_t>(i)] = 1;
      if (elt_minpoly(e, c).degree() == 2) u = c;
    }
    if (u.empty()) {
      tag.kind = AlgebraKind::partial;
      e.class_tag = tag;
      return tag;
    }
    RatPoly mp = elt_minpoly(e, u);
    auto fac = factor_poly_Q(mp);
    if (fac.size() > 1 || fac[0].second > 1)
      zero_divisor_error(fac[0].first, fac.size() > 1 ? fac[1].first : fac[0].first,
                         "a two-dimensional commutant");
    // x^2 - t x + nm: discriminant class
    Rat t = -mp.coeff(1), nm = mp.coeff(0);
    Rat disc = t * t - Rat(4) * nm;
    tag.kind = AlgebraKind::quad_field;
    tag.d = square_class(disc);
    // normalized square root of d: w = u - t/2 has w^2 = disc/4 = d * c^2
    std::vector<Rat> w = u;
    for (size_t i = 0; i < w.size(); ++i)
      w[i] -= (t / 2) * e.identity[i];
    Rat c2 = disc / Rat(4) / Rat(tag.d);
    Rat croot = rational_sqrt(c2);  // exact by the square-class computation
    for (size_t i = 0; i < w.size(); ++i) w[i] /= croot;
    tag.sqrt_d = w;
    e.class_tag = tag;
    return tag;
  }

  if (n == 4 && tag.center_dim == 1) {
    // find a trace-zero i with i^2 = alpha scalar: any non-central element,
    // recentred by half its minimal-polynomial trace
    std::vector<Rat> gi;
    Rat alpha;
    for (int attempt = 0; attempt < 64 && gi.empty(); ++attempt) {
      std::vector<Rat> c(static_cast<size_t>(n), Rat(0));
      if (attempt < n) {
        c[static_cast<size_t>(attempt)] = 1;
      } else {
        SplitMix rng(static_cast<std::uint64_t>(attempt) * 77771ull + 5ull);
        for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = Rat(rng.range(-3, 3));
      }
      RatPoly mp = elt_minpoly(e, c);
      if (mp.degree() != 2) continue;
      auto fac = factor_poly_Q(mp);
      if (fac.size() > 1 || fac[0].second > 1)
        zero_divisor_error(fac[0].first,
                           fac.size() > 1 ? fac[1].first : fac[0].first,
                           "a four-dimensional commutant");
      Rat t = -mp.coeff(1);
      std::vector<Rat> w = c;
      for (size_t i = 0; i < w.size(); ++i) w[i] -= (t / 2) * e.identity[i];
      gi = w;
      alpha = t * t / Rat(4) - mp.coeff(0);  // i^2 = t^2/4 - norm
    }
    if (gi.empty()) {
      tag.kind = AlgebraKind::partial;
      e.class_tag = tag;
      return tag;
    }
    // solve the anticommutation i x = -x i inside the algebra
    RatMatrix sys(n, n);
    for (int u = 0; u < n; ++u) {
      std::vector<Rat> xu(static_cast<size_t>(n), Rat(0));
      xu[static_cast<size_t>(u)] = 1;
      std::vector<Rat> lhs = e.mul(gi, xu), rhs = e.mul(xu, gi);
      for (int k = 0; k < n; ++k)
        sys(k, u) = lhs[static_cast<size_t>(k)] + rhs[static_cast<size_t>(k)];
    }
    RatMatrix ker = kernel_basis(sys);
    if (ker.cols() == 0) {
      tag.kind = AlgebraKind::partial;
      e.class_tag = tag;
      return tag;
    }
    std::vector<Rat> gj(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) gj[static_cast<size_t>(i)] = ker(i, 0);
    // j^2 is central, hence scalar; and tr j = 0 automatically
    std::vector<Rat> jj = e.mul(gj, gj);
    int pivot = -1;
    for (int i = 0; i < n; ++i)
      if (!is_zero(e.identity[static_cast<size_t>(i)])) { pivot = i; break; }
    Rat beta = jj[static_cast<size_t>(pivot)] / e.identity[static_cast<size_t>(pivot)];
    bool scalar = true;
    for (int i = 0; i < n; ++i)
      if (jj[static_cast<size_t>(i)] != beta * e.identity[static_cast<size_t>(i)]) {
        scalar = false;
        break;
      }
    if (!scalar || is_zero(beta)) {
      if (is_zero(beta)) {
        auto fac = factor_poly_Q(elt_minpoly(e, gj));
        zero_divisor_error(fac[0].first, fac[0].first, "a four-dimensional commutant");
      }
      tag.kind = AlgebraKind::partial;
      e.class_tag = tag;
      return tag;
    }
    tag.kind = AlgebraKind::quaternion;
    tag.alpha = alpha;
    tag.beta = beta;
    tag.gen_i = gi;
    tag.gen_j = gj;
    e.class_tag = tag;
    return tag;
  }

  tag.kind = AlgebraKind::partial;
  e.class_tag = tag;
  return tag;
}

InvolutionInfo induced_involution(EndAlgebra& e, const RatMatrix& b) {
  int n = e.dim(), m = e.ambient_dim;
  if (b.rows() != m || b.cols() != m)
    throw std::invalid_argument("form dimension mismatch");
  auto binv = try_inverse(b);
  if (!binv) throw std::invalid_argument("form is not invertible");

  InvolutionInfo info;
  info.matrix = RatMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    RatMatrix img = (*binv) * e.basis[static_cast<size_t>(j)].transpose() * b;
    std::vector<Rat> c;
    try {
      c = e.coords(img);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument(
          "form does not induce an involution on the commutant");
    }
    for (int i = 0; i < n; ++i) info.matrix(i, j) = c[static_cast<size_t>(i)];
  }
  // order two
  if (!(info.matrix * info.matrix == RatMatrix::identity(n)))
    throw std::logic_error("induced map is not an involution");
  // anti-automorphism: sigma(xy) = sigma(y) sigma(x) on basis pairs
  auto apply = [&](const std::vector<Rat>& c) {
    std::vector<Rat> out(static_cast<size_t>(n), Rat(0));
    for (int i = 0; i < n; ++i) {
      Rat acc(0);
      for (int j = 0; j < n; ++j) acc += info.matrix(i, j) * c[static_cast<size_t>(j)];
      out[static_cast<size_t>(i)] = acc;
    }
    return out;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Rat> xi(static_cast<size_t>(n), Rat(0)), xj(static_cast<size_t>(n), Rat(0));
      xi[static_cast<size_t>(i)] = 1;
      xj[static_cast<size_t>(j)] = 1;
      std::vector<Rat> lhs = apply(e.mul(xi, xj));
      std::vector<Rat> rhs = e.mul(apply(xj), apply(xi));
      if (lhs != rhs) throw std::logic_error("induced map is not an anti-automorphism");
    }

  // first kind: identity on the center
  std::vector<std::vector<Rat>> cz = algebra_center(e);
  bool first = true;
  for (const auto& z : cz)
    if (apply(z) != z) first = false;
  info.kind = first ? InvolutionKind::first : InvolutionKind::second;

  info.fixed_dim = kernel_basis(info.matrix - RatMatrix::identity(n)).cols();
  if (e.class_tag.kind == AlgebraKind::quad_field)
    info.quad_conjugation = (info.fixed_dim == 1);
  if (e.class_tag.kind == AlgebraKind::quaternion)
    info.quat_standard = (info.fixed_dim == 1);

  e.involution_matrix = info.matrix;
  e.involution_kind = info.kind;
  return info;
}

}  // namespace blcob
