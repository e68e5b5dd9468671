#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "blcob/constructions.hpp"
#include "blcob/reptheory.hpp"
#include "blcob/seifert.hpp"
#include "blcob/wittreduce.hpp"
#include "fixtures.hpp"

using namespace blcob;
using blcob_test::TestRng;

namespace {

FormOnRep form_from(const SeifertForm& s) { return form_of(kappa(s)); }

// test-side character fingerprint for multiset comparisons
std::string fingerprint(const Representation& r) {
  std::string out = "d";
  for (int d : r.block_dims) out += ":" + std::to_string(d);
  for (const auto& [k, v] : cycle_traces(r, std::min(r.dim(), 4)))
    out += "|" + k + "=" + rat_str(v);
  return out;
}

std::vector<std::string> piece_fingerprints(const std::vector<FormOnRep>& pieces) {
  std::vector<std::string> keys;
  for (const FormOnRep& p : pieces) keys.push_back(fingerprint(p.rep));
  std::sort(keys.begin(), keys.end());
  return keys;
}

// a simple self-dual two-component representation with 2-cycle trace x3,
// together with a structure form on it
FormOnRep selfdual_piece(const Rat& x3, int epsilon) {
  RatMatrix s(2, 2);
  s(0, 0) = rat(1, 2);
  s(0, 1) = 1;
  s(1, 0) = x3;
  s(1, 1) = rat(1, 2);
  Representation r{{1, 1}, s};
  auto b = selfdual_form(r, epsilon);
  REQUIRE(b.has_value());
  return FormOnRep{r, *b, epsilon};
}

}  // namespace

TEST_CASE("restriction and orthogonal complement") {
  FormOnRep f = form_from(blcob_test::trefoil_form());
  int m = f.dim();

  auto [phi0, perp0] = restrict_and_complement(f, RatMatrix(m, 0));
  CHECK(phi0.rows() == 0);
  CHECK(perp0.cols() == m);

  auto [phi_full, perp_full] = restrict_and_complement(f, RatMatrix::identity(m));
  CHECK(phi_full == f.phi);
  CHECK(perp_full.cols() == 0);

  // lagrangian line of a hyperbolic plane is its own orthogonal
  FormOnRep h = form_from(blcob_test::hyperbolic_form(-1, 1, 0));
  RatMatrix e1(2, 1);
  e1(0, 0) = 1;
  auto [phi_l, perp_l] = restrict_and_complement(h, e1);
  CHECK(phi_l.is_zero());
  CHECK(perp_l.cols() == 1);
  CHECK(rank(RatMatrix::hconcat(perp_l, e1)) == 1);

  // dimension count on random inputs
  TestRng rng(3);
  for (int t = 0; t < 10; ++t) {
    std::vector<int> dims = blcob_test::random_dims(rng, +1, 2, 2);
    FormOnRep g = form_from(blcob_test::random_seifert(rng, +1, dims));
    RatMatrix sub = find_simple_submodule(g.rep, 1);
    auto [ps, pp] = restrict_and_complement(g, sub);
    CHECK(sub.cols() + pp.cols() == g.dim());
    CHECK(ps.rows() == sub.cols());
  }
}

TEST_CASE("sublagrangian reduction") {
  // hyperbolic plane collapses to nothing
  FormOnRep h = form_from(blcob_test::hyperbolic_form(-1, 1, 0));
  RatMatrix e1(2, 1);
  e1(0, 0) = 1;
  FormOnRep q = sublagrangian_reduce(h, e1);
  CHECK(q.dim() == 0);
  CHECK_FALSE(validate(q).has_value());

  // reducing F + hyperbolic by the hyperbolic lagrangian recovers F
  FormOnRep f = form_from(blcob_test::trefoil_form());
  SeifertForm sum =
      block_sum(blcob_test::trefoil_form(), blcob_test::hyperbolic_form(-1, 1, 0));
  FormOnRep big = form_from(sum);
  RatMatrix lag(4, 1);
  lag(2, 0) = 1;  // first coordinate of the hyperbolic summand
  FormOnRep red = sublagrangian_reduce(big, lag);
  CHECK(red.dim() == 2);
  CHECK_FALSE(validate(red).has_value());
  CHECK(is_isomorphic(red.rep, f.rep));
  // exact congruence through an explicit intertwiner
  auto theta = find_isomorphism(f.rep, red.rep);
  REQUIRE(theta.has_value());
  // the pulled-back form is a structure form on the trefoil module; both
  // live in the one-dimensional solution space, so they are proportional
  RatMatrix pulled = theta->transpose() * red.phi * (*theta);
  CHECK(pulled.transpose() * Rat(-1) == pulled);
  Rat ratio = pulled(0, 1) / f.phi(0, 1);
  CHECK(pulled == f.phi * ratio);
  CHECK_FALSE(is_zero(ratio));

  // the diagonal of F + (-F) is a lagrangian: the quotient is trivial
  SeifertForm tre = blcob_test::trefoil_form();
  FormOnRep dd = form_of(kappa(difference_class(tre, tre)));
  RatMatrix diag(4, 2);
  diag(0, 0) = 1;
  diag(2, 0) = 1;
  diag(1, 1) = 1;
  diag(3, 1) = 1;
  FormOnRep zero = sublagrangian_reduce(dd, diag);
  CHECK(zero.dim() == 0);

  // a subspace where the form does not vanish is rejected
  CHECK_THROWS_AS(sublagrangian_reduce(f, RatMatrix::identity(2)),
                  std::invalid_argument);
}

TEST_CASE("orthogonal splitting") {
  FormOnRep f = form_from(blcob_test::trefoil_form());
  auto [whole, rest] = split_nonsingular(f, RatMatrix::identity(2));
  CHECK(whole.dim() == 2);
  CHECK(whole.phi == f.phi);
  CHECK(rest.dim() == 0);

  // an orthogonal direct sum splits back into its factors
  SeifertForm t = blcob_test::trefoil_form();
  SeifertForm sum = block_sum(t, t);
  FormOnRep big = form_of(kappa(sum));
  RatMatrix first(4, 2);
  first(0, 0) = 1;
  first(1, 1) = 1;
  auto [p1, p2] = split_nonsingular(big, first);
  FormOnRep single = form_of(kappa(t));
  CHECK(p1.rep.rho_s == single.rep.rho_s);
  CHECK(p1.phi == single.phi);
  CHECK(p2.rep.rho_s == single.rep.rho_s);
  CHECK(p2.phi == single.phi);
  CHECK_FALSE(validate(p1).has_value());
  CHECK_FALSE(validate(p2).has_value());

  // singular restriction is rejected
  FormOnRep h = form_from(blcob_test::hyperbolic_form(-1, 1, 0));
  RatMatrix e1(2, 1);
  e1(0, 0) = 1;
  CHECK_THROWS_AS(split_nonsingular(h, e1), std::invalid_argument);

  // congruence-scrambled orthogonal sums split into valid factors
  TestRng rng(17);
  for (int t2 = 0; t2 < 8; ++t2) {
    std::vector<int> dims = blcob_test::random_dims(rng, +1, 1, 2);
    FormOnRep g = form_from(blcob_test::random_seifert(rng, +1, dims));
    RatMatrix sub = find_simple_submodule(g.rep, 2);
    RatMatrix phi_l = sub.transpose() * g.phi * sub;
    if (phi_l.is_zero()) continue;
    auto [a, b] = split_nonsingular(g, sub);
    CHECK_FALSE(validate(a).has_value());
    CHECK_FALSE(validate(b).has_value());
    CHECK(a.dim() + b.dim() == g.dim());
  }
}

TEST_CASE("devissage reduces to simple orthogonal pieces") {
  // zero-dimensional input
  FormOnRep none = form_from(empty_form(+1, 2));
  CHECK(devissage(none).empty());

  // hyperbolic input reduces away completely
  for (int eps : {-1, +1}) {
    FormOnRep h = form_from(blcob_test::hyperbolic_form(eps, 2, 1));
    CHECK(devissage(h).empty());
  }

  // the order-8 class is already simple: a single 8-dimensional piece
  for (int eps : {-1, +1}) {
    FormOnRep f = form_of(kappa(builtin_order8(eps)));
    std::vector<FormOnRep> pieces = devissage(f);
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].dim() == 8);
    CHECK_FALSE(validate(pieces[0]).has_value());
    CHECK(is_simple(pieces[0].rep).simple);
  }

  // every output piece is a valid form on a simple representation, and the
  // fingerprint multiset is seed-independent
  TestRng rng(23);
  for (int t = 0; t < 12; ++t) {
    int mu = 1 + static_cast<int>(rng.next() % 2);
    std::vector<int> dims = blcob_test::random_dims(rng, +1, mu, 2);
    FormOnRep g = form_from(blcob_test::random_seifert(rng, +1, dims));
    std::vector<FormOnRep> p0 = devissage(g, 0);
    for (const FormOnRep& p : p0) {
      CHECK_FALSE(validate(p).has_value());
      CHECK(is_simple(p.rep).simple);
    }
    std::vector<FormOnRep> p1 = devissage(g, 1);
    CHECK(piece_fingerprints(p0) == piece_fingerprints(p1));
  }
}

TEST_CASE("differences of a form with itself reduce to transferable blocks") {
  TestRng rng(29);
  for (int t = 0; t < 8; ++t) {
    int mu = 1 + static_cast<int>(rng.next() % 2);
    std::vector<int> dims = blcob_test::random_dims(rng, +1, mu, 2);
    SeifertForm s = blcob_test::random_seifert(rng, +1, dims);
    FormOnRep diff = form_of(kappa(difference_class(s, s)));
    std::vector<FormOnRep> pieces = devissage(diff);
    // the transfer validates the hermitian condition internally
    std::vector<IsotypicBlock> blocks = group_and_transfer(pieces);
    for (const IsotypicBlock& blk : blocks) {
      int r = static_cast<int>(blk.hermitian_matrix_over_E.size());
      CHECK(r == static_cast<int>(blk.summand_forms.size()));
      for (const FormOnRep& sf : blk.summand_forms)
        CHECK(is_isomorphic(sf.rep, blk.simple_rep));
    }
  }
}

TEST_CASE("morita transfer of single and paired summands") {
  // a single summand maps to the unit of E scaled by epsilon
  FormOnRep a = selfdual_piece(rat(1), +1);
  std::vector<IsotypicBlock> one = group_and_transfer({a});
  REQUIRE(one.size() == 1);
  REQUIRE(one[0].hermitian_matrix_over_E.size() == 1);
  std::vector<Rat> unit = one[0].E.identity;
  CHECK(one[0].hermitian_matrix_over_E[0][0] == unit);
  CHECK(one[0].E.class_tag.kind == AlgebraKind::rationals);

  // (L, b) + (L, -b) transfers to diag(eps, -eps) over E
  FormOnRep neg = a;
  neg.phi = -a.phi;
  std::vector<IsotypicBlock> two = group_and_transfer({a, neg});
  REQUIRE(two.size() == 1);
  REQUIRE(two[0].hermitian_matrix_over_E.size() == 2);
  std::vector<Rat> minus_unit = unit;
  for (Rat& x : minus_unit) x = -x;
  std::vector<Rat> zero(unit.size(), Rat(0));
  CHECK(two[0].hermitian_matrix_over_E[0][0] == unit);
  CHECK(two[0].hermitian_matrix_over_E[1][1] == minus_unit);
  CHECK(two[0].hermitian_matrix_over_E[0][1] == zero);
  CHECK(two[0].hermitian_matrix_over_E[1][0] == zero);

  // classes come out sorted by character key regardless of input order
  FormOnRep b = selfdual_piece(rat(2), +1);
  std::vector<IsotypicBlock> ab = group_and_transfer({a, b});
  std::vector<IsotypicBlock> ba = group_and_transfer({b, a});
  REQUIRE(ab.size() == 2);
  REQUIRE(ba.size() == 2);
  CHECK(ab[0].char_key == ba[0].char_key);
  CHECK(ab[1].char_key == ba[1].char_key);
  CHECK(ab[0].simple_rep.rho_s == ba[0].simple_rep.rho_s);

  // the order-8 class transfers to a 1x1 block over the quadratic field
  // with the trivial involution
  FormOnRep f8 = form_of(kappa(builtin_order8(-1)));
  std::vector<IsotypicBlock> blk8 = group_and_transfer(devissage(f8));
  REQUIRE(blk8.size() == 1);
  CHECK(blk8[0].E.class_tag.kind == AlgebraKind::quad_field);
  CHECK(blk8[0].E.class_tag.d == Int(-7));
  CHECK(blk8[0].not_minus_epsilon_selfdual);
  REQUIRE(blk8[0].hermitian_matrix_over_E.size() == 1);
  std::vector<Rat> u8 = blk8[0].E.identity;
  for (Rat& x : u8) x = -x;  // epsilon = -1
  CHECK(blk8[0].hermitian_matrix_over_E[0][0] == u8);
}
