#include "blcob/wittinv.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "blcob/exactmath.hpp"

namespace blcob {

namespace {

// ---- report plumbing ----

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

ClassTag rationals_tag() {
  ClassTag t;
  t.kind = AlgebraKind::rationals;
  t.dim = 1;
  t.center_dim = 1;
  return t;
}

ClassTag quad_tag(const Int& d) {
  ClassTag t;
  t.kind = AlgebraKind::quad_field;
  t.d = d;
  t.dim = 2;
  t.center_dim = 2;
  return t;
}

ClassTag quat_tag(const Rat& alpha, const Rat& beta) {
  ClassTag t;
  t.kind = AlgebraKind::quaternion;
  t.alpha = alpha;
  t.beta = beta;
  t.dim = 4;
  t.center_dim = 1;
  return t;
}

// ---- diagonalization helpers ----

// congruence diagonalization of a hermitian matrix over Q(sqrt(d)); the
// involution argument selects conjugation (true) or the identity (false).
// Returns the diagonal entries.
std::vector<QuadElt> diagonalize_quad(QuadMatrix a, const Int& d, bool conjugate) {
  int n = a.rows();
  auto bar = [&](const QuadElt& x) { return conjugate ? x.conj() : x; };
  auto add_row_col = [&](int dst, int src, const QuadElt& lam) {
    for (int j = 0; j < n; ++j) a(dst, j) = a(dst, j) + lam * a(src, j);
    for (int i = 0; i < n; ++i) a(i, dst) = a(i, dst) + bar(lam) * a(i, src);
  };
  auto swap_row_col = [&](int x, int y) {
    for (int j = 0; j < n; ++j) std::swap(a(x, j), a(y, j));
    for (int i = 0; i < n; ++i) std::swap(a(i, x), a(i, y));
  };
  std::vector<QuadElt> diag;
  for (int k = 0; k < n; ++k) {
    if (is_zero(a(k, k))) {
      for (int l = k + 1; l < n; ++l)
        if (!is_zero(a(l, l))) {
          swap_row_col(k, l);
          break;
        }
    }
    if (is_zero(a(k, k))) {
      int l = -1;
      for (int j = k + 1; j < n; ++j)
        if (!is_zero(a(k, j))) {
          l = j;
          break;
        }
      if (l < 0) throw std::invalid_argument("singular form");
      // adding row/col l into k with weight lambda puts
      // lambda*bar(t) + bar(lambda)*t on the diagonal, t = a(k,l);
      // lambda = 1 gives the trace of t and sqrt(d) gives -2d*Im(t),
      // one of which is nonzero
      QuadElt lam(1);
      if (conjugate && is_zero(a(k, l).a)) lam = QuadElt(d, Rat(0), Rat(1));
      add_row_col(k, l, lam);
      if (is_zero(a(k, k))) throw std::logic_error("pivot construction failed");
    }
    for (int i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      QuadElt mu = a(i, k) / a(k, k);
      add_row_col(i, k, -mu);
    }
    diag.push_back(a(k, k));
  }
  return diag;
}

int quad_rank(const QuadMatrix& a) { return rank(a); }

// multiply a Hilbert vector into a running product over places
void fold_symbols(std::map<Place, int>& acc, const Rat& x, const Rat& y) {
  for (const auto& [place, val] : hilbert_vector(x, y)) {
    auto it = acc.find(place);
    if (it == acc.end())
      acc.emplace(place, val);
    else
      it->second *= val;
  }
}

int sign_exponent(int m) { return (m * (m - 1) / 2) % 2; }

}  // namespace

bool WittInvariantReport::provably_nontrivial() const {
  if (rank_mod2 != 0) return true;
  for (const auto& [place, s] : signatures)
    if (s != 0) return true;
  if (!discriminant_trivial) return true;
  if (!hasse_witt.empty()) return true;
  if (exact_order && *exact_order > 1) return true;
  return false;
}

std::string verdict_str(WittVerdict v) {
  switch (v) {
    case WittVerdict::witt_trivial: return "witt_trivial";
    case WittVerdict::nontrivial: return "nontrivial";
    default: return "undetermined";
  }
}

std::string WittInvariantReport::to_json() const {
  std::ostringstream out;
  out << "{\"class\":\"" << json_escape(class_tag.str()) << "\"";
  out << ",\"involution\":\"" << involution << "\"";
  out << ",\"rank_mod2\":" << rank_mod2;
  out << ",\"signatures\":{";
  for (size_t i = 0; i < signatures.size(); ++i) {
    if (i) out << ",";
    out << "\"" << signatures[i].first << "\":" << signatures[i].second;
  }
  out << "},\"discriminant\":\"" << json_escape(discriminant) << "\"";
  out << ",\"discriminant_trivial\":" << (discriminant_trivial ? "true" : "false");
  out << ",\"hasse_witt\":[";
  for (size_t i = 0; i < hasse_witt.size(); ++i) {
    if (i) out << ",";
    out << "\"" << hasse_witt[i] << "\"";
  }
  out << "]";
  out << ",\"exact_order\":" << (exact_order ? std::to_string(*exact_order) : "null");
  out << ",\"order_bound\":" << (order_bound ? std::to_string(*order_bound) : "null");
  out << ",\"theta\":\""
      << (theta_status == ThetaStatus::not_applicable ? "not_applicable"
                                                      : "needed_but_not_computed")
      << "\"";
  out << ",\"complete\":" << (complete ? "true" : "false") << "}";
  return out.str();
}

WittInvariantReport invariants_over_Q(const RatMatrix& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("form is not square");
  if (h != h.transpose()) throw std::invalid_argument("form is not symmetric");
  if (h.rows() > 0 && !try_inverse(h)) throw std::invalid_argument("singular form");
  int m = h.rows();

  WittInvariantReport rep;
  rep.class_tag = rationals_tag();
  rep.involution = "trivial";
  rep.rank_mod2 = m % 2;

  auto [p, dd] = sym_diagonalize(h);
  std::vector<Rat> a;
  for (int i = 0; i < m; ++i) a.push_back(dd(i, i));
  rep.signatures.emplace_back("inf", signature(h));

  Rat dt(1);
  for (const Rat& x : a) dt *= x;
  Rat disc = sign_exponent(m) ? -dt : dt;
  Int cls = m == 0 ? Int(1) : square_class(disc);
  rep.discriminant = int_str(cls);
  rep.discriminant_trivial = cls == 1;

  std::map<Place, int> acc;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) fold_symbols(acc, a[static_cast<size_t>(i)],
                                                 a[static_cast<size_t>(j)]);
  switch (((m % 8) + 8) % 8) {
    case 1: case 2: break;
    case 3: case 4: fold_symbols(acc, rat(-1), -dt); break;
    case 5: case 6: fold_symbols(acc, rat(-1), rat(-1)); break;
    default: if (m > 0) fold_symbols(acc, rat(-1), dt); break;
  }
  for (const auto& [place, val] : acc)
    if (val == -1) rep.hasse_witt.push_back(place.str());

  rep.complete = true;
  return rep;
}

WittInvariantReport invariants_hermitian_quad(const QuadMatrix& h, const Int& d) {
  make_quadfield(d, QuadInvolution::conjugation);  // validates d
  int r = h.rows();
  if (h.cols() != r) throw std::invalid_argument("form is not square");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (h(i, j) != h(j, i).conj())
        throw std::invalid_argument("form is not hermitian");
  if (quad_rank(h) != r) throw std::invalid_argument("singular form");

  WittInvariantReport rep;
  rep.class_tag = quad_tag(d);
  rep.involution = "conjugation";
  rep.rank_mod2 = r % 2;

  std::vector<QuadElt> diag = diagonalize_quad(h, d, true);
  Rat dt(1);
  for (const QuadElt& e : diag) {
    if (!e.is_rational())
      throw std::logic_error("hermitian diagonal entry is not in the fixed field");
    dt *= e.a;
  }
  Rat disc = sign_exponent(r) ? -dt : dt;
  rep.discriminant = rat_str(disc);
  rep.discriminant_trivial = r == 0 || is_norm(disc, d);

  if (d < 0) {
    // trace transfer s(a + b sqrt(d)) = a over the basis 1, sqrt(d)
    RatMatrix t(2 * r, 2 * r);
    QuadElt basis[2] = {QuadElt(1), QuadElt(d, Rat(0), Rat(1))};
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int s = 0; s < 2; ++s)
          for (int u = 0; u < 2; ++u)
            t(2 * j + s, 2 * k + u) = (basis[s].conj() * h(j, k) * basis[u]).a;
    int st = signature(t);
    if (st % 2 != 0) throw std::logic_error("transfer signature is odd");
    rep.signatures.emplace_back("inf", st / 2);
  }
  // rank, discriminant, and the signatures at non-split real places decide
  // the class; for real d the archimedean place splits and contributes none
  rep.complete = true;
  return rep;
}

WittInvariantReport invariants_quadfield_trivial(const QuadMatrix& h, const Int& d) {
  make_quadfield(d, QuadInvolution::trivial);
  int r = h.rows();
  if (h.cols() != r) throw std::invalid_argument("form is not square");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (h(i, j) != h(j, i)) throw std::invalid_argument("form is not symmetric");
  if (quad_rank(h) != r) throw std::invalid_argument("singular form");

  WittInvariantReport rep;
  rep.class_tag = quad_tag(d);
  rep.involution = "trivial";
  rep.rank_mod2 = r % 2;

  std::vector<QuadElt> diag = diagonalize_quad(h, d, false);
  // pin the field marker so square tests run in Q(sqrt(d)), not Q
  for (QuadElt& e : diag)
    if (e.d == 0) e.d = d;
  QuadElt disc(1);
  for (const QuadElt& e : diag) disc = disc * e;
  if (sign_exponent(r)) disc = -disc;
  rep.discriminant = disc.str();
  rep.discriminant_trivial = r == 0 || quad_is_square(disc);

  if (d < 0) {
    rep.order_bound = order_of_unit_class_quadratic(d);

    // Witt reduction of the diagonal: cancel <a> + <-a> pairs, then try to
    // place everything left in a single square class
    std::vector<QuadElt> rest = diag;
    bool cancelled = true;
    while (cancelled) {
      cancelled = false;
      for (size_t i = 0; i < rest.size() && !cancelled; ++i)
        for (size_t j = i + 1; j < rest.size() && !cancelled; ++j)
          if (quad_is_square(-(rest[i] * rest[j]))) {
            rest.erase(rest.begin() + static_cast<long>(j));
            rest.erase(rest.begin() + static_cast<long>(i));
            cancelled = true;
          }
    }
    bool one_class = true;
    for (size_t i = 0; i + 1 < rest.size() && one_class; ++i)
      if (!quad_is_square(rest[i] * rest[i + 1])) one_class = false;
    if (rest.empty()) {
      rep.exact_order = 1;
      rep.complete = true;
    } else if (one_class && rep.order_bound) {
      // n copies of a single class <e>: scaling by <e> is an additive
      // bijection of the Witt group, so the order equals that of n<1>
      int o = *rep.order_bound;
      int n = static_cast<int>(rest.size()) % o;
      rep.exact_order = o / std::gcd(n, o);
      rep.complete = true;
    }
  } else {
    // two archimedean signatures through the twisted transfers by 1, sqrt(d)
    QuadElt basis[2] = {QuadElt(1), QuadElt(d, Rat(0), Rat(1))};
    int sig[2] = {0, 0};
    for (int w = 0; w < 2; ++w) {
      RatMatrix t(2 * r, 2 * r);
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k)
          for (int s = 0; s < 2; ++s)
            for (int u = 0; u < 2; ++u)
              t(2 * j + s, 2 * k + u) = (basis[w] * basis[s] * basis[u] * h(j, k)).a;
      sig[w] = signature(t);
    }
    if ((sig[0] + sig[1]) % 2 != 0)
      throw std::logic_error("twisted transfer signatures have mixed parity");
    rep.signatures.emplace_back("inf_plus", (sig[0] + sig[1]) / 2);
    rep.signatures.emplace_back("inf_minus", (sig[0] - sig[1]) / 2);
    rep.complete = false;
  }
  return rep;
}

namespace {

QuatEntry quat_mul(const QuatEntry& x, const QuatEntry& y, const Rat& al,
                   const Rat& be) {
  QuatEntry c;
  c[0] = x[0] * y[0] + al * x[1] * y[1] + be * x[2] * y[2] - al * be * x[3] * y[3];
  c[1] = x[0] * y[1] + x[1] * y[0] - be * x[2] * y[3] + be * x[3] * y[2];
  c[2] = x[0] * y[2] + x[2] * y[0] + al * x[1] * y[3] - al * x[3] * y[1];
  c[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
  return c;
}

QuatEntry quat_conj(const QuatEntry& x) { return {x[0], -x[1], -x[2], -x[3]}; }

bool quat_eq(const QuatEntry& x, const QuatEntry& y) {
  return x[0] == y[0] && x[1] == y[1] && x[2] == y[2] && x[3] == y[3];
}

}  // namespace

WittInvariantReport invariants_quaternion_standard(const QuatMatrix& h,
                                                   const Rat& alpha,
                                                   const Rat& beta) {
  if (!quaternion_is_division(alpha, beta))
    throw std::logic_error("split quaternion algebra in invariant computation");
  int r = static_cast<int>(h.size());
  for (const auto& row : h)
    if (static_cast<int>(row.size()) != r)
      throw std::invalid_argument("form is not square");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (!quat_eq(h[static_cast<size_t>(i)][static_cast<size_t>(j)],
                   quat_conj(h[static_cast<size_t>(j)][static_cast<size_t>(i)])))
        throw std::invalid_argument("form is not hermitian");

  WittInvariantReport rep;
  rep.class_tag = quat_tag(alpha, beta);
  rep.involution = "standard";
  rep.rank_mod2 = r % 2;

  // reduced-trace transfer over the basis 1, i, j, ij of every entry
  QuatEntry basis[4] = {{Rat(1), Rat(0), Rat(0), Rat(0)},
                        {Rat(0), Rat(1), Rat(0), Rat(0)},
                        {Rat(0), Rat(0), Rat(1), Rat(0)},
                        {Rat(0), Rat(0), Rat(0), Rat(1)}};
  RatMatrix t(4 * r, 4 * r);
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k)
      for (int s = 0; s < 4; ++s)
        for (int u = 0; u < 4; ++u) {
          QuatEntry prod = quat_mul(
              quat_mul(quat_conj(basis[s]),
                       h[static_cast<size_t>(j)][static_cast<size_t>(k)], alpha,
                       beta),
              basis[u], alpha, beta);
          t(4 * j + s, 4 * k + u) = prod[0] + prod[0];
        }
  if (r > 0 && !try_inverse(t)) throw std::invalid_argument("singular form");

  if (sgn(alpha) < 0 && sgn(beta) < 0) {
    int st = signature(t);
    if (st % 4 != 0) throw std::logic_error("transfer signature not divisible by 4");
    rep.signatures.emplace_back("inf", st / 4);
  }
  rep.complete = true;
  return rep;
}

namespace {

std::vector<Rat> coords_in(const EndAlgebra& e,
                           const std::vector<std::vector<Rat>>& gens,
                           const std::vector<Rat>& x) {
  int n = e.dim(), g = static_cast<int>(gens.size());
  RatMatrix a(n, g);
  for (int j = 0; j < g; ++j)
    for (int i = 0; i < n; ++i) a(i, j) = gens[static_cast<size_t>(j)][static_cast<size_t>(i)];
  RatMatrix b(n, 1);
  for (int i = 0; i < n; ++i) b(i, 0) = x[static_cast<size_t>(i)];
  auto sol = solve(a, b);
  if (!sol) throw std::logic_error("element outside the generator span");
  std::vector<Rat> out;
  for (int j = 0; j < g; ++j) out.push_back((*sol)(j, 0));
  return out;
}

std::vector<Rat> invol_apply(const EndAlgebra& e, const std::vector<Rat>& x) {
  if (!e.involution_matrix) throw std::invalid_argument("block carries no involution");
  const RatMatrix& m = *e.involution_matrix;
  std::vector<Rat> out(static_cast<size_t>(e.dim()), Rat(0));
  for (int i = 0; i < e.dim(); ++i)
    for (int j = 0; j < e.dim(); ++j)
      out[static_cast<size_t>(i)] += m(i, j) * x[static_cast<size_t>(j)];
  return out;
}

bool coord_neg(const std::vector<Rat>& x, const std::vector<Rat>& y) {
  if (x.size() != y.size()) return false;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != -y[i]) return false;
  return true;
}

}  // namespace

WittInvariantReport report_for_block(const IsotypicBlock& blk) {
  const EndAlgebra& e = blk.E;
  if (!e.involution_matrix)
    throw std::invalid_argument("block carries no involution");
  const auto& hm = blk.hermitian_matrix_over_E;
  int r = static_cast<int>(hm.size());
  const ClassTag& tag = e.class_tag;

  switch (tag.kind) {
    case AlgebraKind::rationals: {
      // express every entry as a multiple of the identity
      std::vector<std::vector<Rat>> gens = {e.identity};
      RatMatrix h(r, r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          h(i, j) = coords_in(
              e, gens, hm[static_cast<size_t>(i)][static_cast<size_t>(j)])[0];
      return invariants_over_Q(h);
    }
    case AlgebraKind::quad_field: {
      std::vector<std::vector<Rat>> gens = {e.identity, tag.sqrt_d};
      QuadMatrix h(r, r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          auto ab = coords_in(e, gens, hm[static_cast<size_t>(i)][static_cast<size_t>(j)]);
          h(i, j) = QuadElt(tag.d, ab[0], ab[1]);
        }
      std::vector<Rat> conj_sqrt = invol_apply(e, tag.sqrt_d);
      if (coord_neg(conj_sqrt, tag.sqrt_d))
        return invariants_hermitian_quad(h, tag.d);
      if (conj_sqrt == tag.sqrt_d) return invariants_quadfield_trivial(h, tag.d);
      throw std::logic_error("involution does not act by a sign on sqrt(d)");
    }
    case AlgebraKind::quaternion: {
      std::vector<Rat> gen_ij = e.mul(tag.gen_i, tag.gen_j);
      std::vector<std::vector<Rat>> gens = {e.identity, tag.gen_i, tag.gen_j,
                                            gen_ij};
      QuatMatrix h(static_cast<size_t>(r),
                   std::vector<QuatEntry>(static_cast<size_t>(r)));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          auto c = coords_in(e, gens, hm[static_cast<size_t>(i)][static_cast<size_t>(j)]);
          h[static_cast<size_t>(i)][static_cast<size_t>(j)] = {c[0], c[1], c[2], c[3]};
        }
      bool std_inv = coord_neg(invol_apply(e, tag.gen_i), tag.gen_i) &&
                     coord_neg(invol_apply(e, tag.gen_j), tag.gen_j);
      if (std_inv) return invariants_quaternion_standard(h, tag.alpha, tag.beta);

      // non-standard involution: rank is computed, the discriminant is
      // reported as a descriptor (its norm-class normalization is not
      // pinned), signatures and theta are left out
      WittInvariantReport rep;
      rep.class_tag = tag;
      rep.involution = "nonstandard";
      rep.rank_mod2 = r % 2;
      Int dk = square_class(tag.alpha);
      Rat scale = rational_sqrt(tag.alpha / Rat(dk));
      QuadMatrix emb(2 * r, 2 * r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          const QuatEntry& q = h[static_cast<size_t>(i)][static_cast<size_t>(j)];
          QuadElt qa(dk, q[0], q[1] * scale);
          QuadElt qb(dk, q[2], q[3] * scale);
          QuadElt qc = QuadElt(dk, q[2], -(q[3] * scale)) *
                       QuadElt(dk, tag.beta, Rat(0));
          QuadElt qd(dk, q[0], -(q[1] * scale));
          emb(2 * i, 2 * j) = qa;
          emb(2 * i, 2 * j + 1) = qb;
          emb(2 * i + 1, 2 * j) = qc;
          emb(2 * i + 1, 2 * j + 1) = qd;
        }
      QuadElt nrd = det(emb);
      if (!nrd.is_rational())
        throw std::logic_error("reduced norm of a hermitian matrix is irrational");
      rep.discriminant = rat_str(nrd.a) + " (norm class up to convention)";
      rep.discriminant_trivial = true;  // never claimed for this class
      rep.theta_status = ThetaStatus::needed_but_not_computed;
      rep.complete = false;
      return rep;
    }
    default: {
      WittInvariantReport rep;
      rep.class_tag = tag;
      rep.involution = "unrecognized";
      rep.rank_mod2 = r % 2;
      rep.complete = false;
      return rep;
    }
  }
}

EquivalenceVerdict assemble_verdict(const std::vector<WittInvariantReport>& blocks) {
  EquivalenceVerdict out;
  out.blocks = blocks;
  bool all_complete_trivial = true;
  for (const WittInvariantReport& rep : blocks) {
    if (rep.provably_nontrivial()) {
      out.verdict = WittVerdict::nontrivial;
      return out;
    }
    if (!rep.complete) all_complete_trivial = false;
  }
  out.verdict = all_complete_trivial ? WittVerdict::witt_trivial
                                     : WittVerdict::undetermined;
  return out;
}

}  // namespace blcob
