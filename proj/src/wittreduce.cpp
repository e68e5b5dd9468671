#include "blcob/wittreduce.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "span_util.hpp"

namespace blcob {

namespace {

RatMatrix actions_dual_side(const FormOnRep& f) {
  RatMatrix id = RatMatrix::identity(f.dim());
  return (id - f.rep.rho_s).transpose() * f.phi;
}

std::vector<int> zero_dims(int mu) { return std::vector<int>(static_cast<size_t>(mu), 0); }

// dimension-per-component of a block-adapted column set
std::vector<int> column_dims(const Representation& r, const RatMatrix& cols) {
  std::vector<int> dims(r.block_dims.size(), 0);
  for (int j = 0; j < cols.cols(); ++j) {
    int row = -1;
    for (int i = 0; i < cols.rows(); ++i)
      if (!is_zero(cols(i, j))) {
        row = i;
        break;
      }
    if (row < 0) throw std::logic_error("zero column in a submodule basis");
    int at = 0;
    for (size_t b = 0; b < r.block_dims.size(); ++b) {
      at += r.block_dims[b];
      if (row < at) {
        dims[b] += 1;
        break;
      }
    }
  }
  return dims;
}

std::string char_key(const Representation& r) {
  std::ostringstream out;
  out << "d=";
  for (size_t i = 0; i < r.block_dims.size(); ++i) {
    if (i) out << ",";
    out << r.block_dims[i];
  }
  int cap = std::min(r.dim(), 6);
  for (const auto& [key, val] : cycle_traces(r, cap))
    out << "|" << key << "=" << rat_str(val);
  return out.str();
}

std::vector<Rat> apply_linear(const RatMatrix& m, const std::vector<Rat>& v) {
  std::vector<Rat> out(static_cast<size_t>(m.rows()), Rat(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      out[static_cast<size_t>(i)] += m(i, j) * v[static_cast<size_t>(j)];
  return out;
}

}  // namespace

std::optional<std::string> validate(const FormOnRep& f) {
  if (f.epsilon != 1 && f.epsilon != -1) return "epsilon must be +1 or -1";
  int m = f.rep.dim();
  if (f.rep.rho_s.rows() != m || f.rep.rho_s.cols() != m)
    return "action matrix is not square of the right size";
  for (int d : f.rep.block_dims)
    if (d < 0) return "negative block dimension";
  if (f.phi.rows() != m || f.phi.cols() != m) return "form has the wrong size";
  if (!(f.phi.transpose() * Rat(f.epsilon) == f.phi))
    return "form is not epsilon-symmetric";
  if (!respects_blocks(f.phi, f.rep.block_dims)) return "form is not block-diagonal";
  if (!try_inverse(f.phi)) return "form is singular";
  if (!(f.phi * f.rep.rho_s == actions_dual_side(f)))
    return "form does not intertwine the action with its dual";
  return std::nullopt;
}

FormOnRep form_of(const RepForm& f) {
  return FormOnRep{Representation{f.block_dims, f.rho_s}, f.phi, f.epsilon};
}

std::pair<RatMatrix, RatMatrix> restrict_and_complement(const FormOnRep& f,
                                                        const RatMatrix& L) {
  if (L.rows() != f.dim()) throw std::invalid_argument("dimension mismatch");
  if (L.cols() > 0)  // closure check on the canonical basis of the span
    restrict_representation(f.rep, block_adapted_basis(f.rep, L));
  RatMatrix phi_L = L.transpose() * f.phi * L;
  RatMatrix perp = kernel_basis(L.transpose() * f.phi);
  return {phi_L, block_adapted_basis(f.rep, perp)};
}

FormOnRep sublagrangian_reduce(const FormOnRep& f, const RatMatrix& L) {
  auto [phi_L, perp] = restrict_and_complement(f, L);
  if (!phi_L.is_zero())
    throw std::invalid_argument("form does not vanish on the subspace");

  // extend the canonical basis of L by columns of L-perp
  RatMatrix lb = L.cols() > 0 ? block_adapted_basis(f.rep, L) : RatMatrix(f.dim(), 0);
  VecSpan seen;
  for (int j = 0; j < lb.cols(); ++j) seen.insert(flatten(lb.col(j)));
  RatMatrix comp(f.dim(), 0);
  for (int j = 0; j < perp.cols(); ++j)
    if (seen.insert(flatten(perp.col(j))))
      comp = RatMatrix::hconcat(comp, perp.col(j));

  if (comp.cols() == 0)
    return FormOnRep{Representation{zero_dims(f.rep.mu()), RatMatrix(0, 0)},
                     RatMatrix(0, 0), f.epsilon};

  // the action on the quotient: solve rho * C = [L C] * X and keep the
  // C-coordinate rows
  RatMatrix frame = RatMatrix::hconcat(lb, comp);
  auto x = solve(frame, f.rep.rho_s * comp);
  if (!x) throw std::logic_error("orthogonal of a submodule is not closed");
  RatMatrix quotient_action =
      x->submatrix(lb.cols(), 0, comp.cols(), comp.cols());

  Representation qrep{column_dims(f.rep, comp), quotient_action};
  return FormOnRep{qrep, comp.transpose() * f.phi * comp, f.epsilon};
}

std::pair<FormOnRep, FormOnRep> split_nonsingular(const FormOnRep& f,
                                                  const RatMatrix& L) {
  auto [phi_L, perp] = restrict_and_complement(f, L);
  if (!try_inverse(phi_L))
    throw std::invalid_argument("form is singular on the subspace");
  if (L.cols() + perp.cols() != f.dim() ||
      rank(RatMatrix::hconcat(L, perp)) != f.dim())
    throw std::logic_error("subspace and its orthogonal do not split the space");

  RatMatrix lb = L.cols() > 0 ? block_adapted_basis(f.rep, L) : RatMatrix(f.dim(), 0);
  FormOnRep on_l{restrict_representation(f.rep, lb),
                 lb.transpose() * f.phi * lb, f.epsilon};
  FormOnRep on_perp{restrict_representation(f.rep, perp),
                    perp.transpose() * f.phi * perp, f.epsilon};
  return {on_l, on_perp};
}

std::vector<FormOnRep> devissage(const FormOnRep& f, std::uint64_t seed) {
  if (auto bad = validate(f)) throw std::invalid_argument(*bad);
  std::vector<FormOnRep> out;
  FormOnRep cur = f;
  while (cur.dim() > 0) {
    RatMatrix L = find_simple_submodule(cur.rep, seed);
    RatMatrix phi_L = L.transpose() * cur.phi * L;
    if (phi_L.is_zero()) {
      cur = sublagrangian_reduce(cur, L);
      continue;
    }
    // a simple submodule meets the form either trivially or nonsingularly
    auto [piece, rest] = split_nonsingular(cur, L);
    out.push_back(piece);
    cur = rest;
  }
  return out;
}

std::vector<IsotypicBlock> group_and_transfer(const std::vector<FormOnRep>& pieces,
                                              std::uint64_t seed) {
  for (const FormOnRep& p : pieces)
    if (auto bad = validate(p)) throw std::invalid_argument(*bad);

  std::vector<std::vector<int>> classes;
  for (int k = 0; k < static_cast<int>(pieces.size()); ++k) {
    bool placed = false;
    for (auto& cls : classes)
      if (is_isomorphic(pieces[static_cast<size_t>(cls[0])].rep,
                        pieces[static_cast<size_t>(k)].rep)) {
        cls.push_back(k);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({k});
  }
  std::vector<std::string> keys;
  keys.reserve(classes.size());
  for (const auto& cls : classes)
    keys.push_back(char_key(pieces[static_cast<size_t>(cls[0])].rep));
  std::vector<size_t> order(classes.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return keys[a] < keys[b]; });

  std::vector<IsotypicBlock> out;
  for (size_t oi : order) {
    const std::vector<int>& cls = classes[oi];
    const FormOnRep& ref = pieces[static_cast<size_t>(cls[0])];
    IsotypicBlock blk;
    blk.simple_rep = ref.rep;
    blk.b = ref.phi;
    blk.char_key = keys[oi];
    for (int k : cls) blk.summand_forms.push_back(pieces[static_cast<size_t>(k)]);

    blk.E = endomorphism_algebra(ref.rep);
    recognize_algebra(blk.E);
    InvolutionInfo info = induced_involution(blk.E, ref.phi);
    blk.not_minus_epsilon_selfdual = info.fixed_dim == blk.E.dim();

    // explicit isomorphisms onto the summands
    int r = static_cast<int>(cls.size()), ml = ref.dim();
    std::vector<RatMatrix> theta;
    for (int k : cls) {
      const Representation& target = pieces[static_cast<size_t>(k)].rep;
      if (target.block_dims == ref.rep.block_dims && target.rho_s == ref.rep.rho_s) {
        theta.push_back(RatMatrix::identity(ml));
        continue;
      }
      auto iso = find_isomorphism(ref.rep, target, seed);
      if (!iso)
        throw std::logic_error(
            "intertwiner solve failed for isomorphic representations");
      theta.push_back(*iso);
    }

    // assemble the class form on the direct sum and embed each theta
    RatMatrix phi_class(r * ml, r * ml);
    std::vector<RatMatrix> embedded;
    for (int k = 0; k < r; ++k) {
      phi_class.set_submatrix(k * ml, k * ml,
                              pieces[static_cast<size_t>(cls[static_cast<size_t>(k)])].phi);
      RatMatrix e(r * ml, ml);
      e.set_submatrix(k * ml, 0, theta[static_cast<size_t>(k)]);
      embedded.push_back(e);
    }

    RatMatrix binv = inverse(ref.phi);
    blk.hermitian_matrix_over_E.assign(
        static_cast<size_t>(r),
        std::vector<std::vector<Rat>>(static_cast<size_t>(r)));
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        RatMatrix h = binv * embedded[static_cast<size_t>(j)].transpose() *
                      phi_class * embedded[static_cast<size_t>(k)] *
                      Rat(ref.epsilon);
        blk.hermitian_matrix_over_E[static_cast<size_t>(j)][static_cast<size_t>(k)] =
            blk.E.coords(h);
      }
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        auto conj = apply_linear(
            info.matrix,
            blk.hermitian_matrix_over_E[static_cast<size_t>(j)][static_cast<size_t>(k)]);
        if (conj !=
            blk.hermitian_matrix_over_E[static_cast<size_t>(k)][static_cast<size_t>(j)])
          throw std::logic_error("transfer output is not hermitian");
      }
    out.push_back(std::move(blk));
  }
  return out;
}

}  // namespace blcob
