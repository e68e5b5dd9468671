#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blcob/exactmath.hpp"

using namespace blcob;

namespace {

RatMatrix mat(int r, int c, std::initializer_list<long> vals) {
  RatMatrix m(r, c);
  auto it = vals.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = Rat(*it++);
  return m;
}

RatPoly poly(std::initializer_list<long> lowest_first) {
  std::vector<Rat> c;
  for (long v : lowest_first) c.push_back(Rat(v));
  return RatPoly(std::move(c));
}

// simple deterministic generator for reproducible "random" matrices
struct TestRng {
  std::uint64_t s;
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rat("3/4") == rat(3, 4));
  CHECK(parse_rat("-6/4") == rat(-3, 2));
  CHECK(parse_rat("12") == Rat(12));
  CHECK(rat_str(rat(-3, 2)) == "-3/2");
  CHECK(rat_str(Rat(7)) == "7");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
}

TEST_CASE("kernel of identity is empty") {
  CHECK(kernel_basis(RatMatrix::identity(2)).cols() == 0);
}

TEST_CASE("kernel of rank-one 2x2") {
  auto k = kernel_basis(mat(2, 2, {1, 1, 1, 1}));
  REQUIRE(k.cols() == 1);
  // normalized form of span{(1,-1)}
  CHECK(k(0, 0) / k(1, 0) == Rat(-1));
}

TEST_CASE("kernel vectors multiply back to zero, rank-nullity") {
  TestRng rng{42};
  for (int trial = 0; trial < 20; ++trial) {
    int rows = static_cast<int>(rng.range(2, 6));
    int cols = static_cast<int>(rng.range(2, 6));
    RatMatrix a(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) a(i, j) = rat(rng.range(-5, 5), rng.range(1, 3));
    auto k = kernel_basis(a);
    CHECK((a * k).is_zero());
    CHECK(rank(a) + k.cols() == cols);
  }
}

TEST_CASE("6x4 rank-3 kernel") {
  // columns: c0, c1, c2 random-ish independent, c3 = c0 + 2 c1 - c2
  RatMatrix a(6, 4);
  long c0[] = {1, 0, 2, -1, 3, 0}, c1[] = {0, 1, 1, 1, 0, 2}, c2[] = {2, -1, 0, 1, 1, 1};
  for (int i = 0; i < 6; ++i) {
    a(i, 0) = Rat(c0[i]);
    a(i, 1) = Rat(c1[i]);
    a(i, 2) = Rat(c2[i]);
    a(i, 3) = Rat(c0[i] + 2 * c1[i] - c2[i]);
  }
  REQUIRE(rank(a) == 3);
  auto k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  CHECK((a * k).is_zero());
}

TEST_CASE("sym_diagonalize basics") {
  auto [p1, d1] = sym_diagonalize(mat(2, 2, {1, 0, 0, -1}));
  CHECK(d1 == mat(2, 2, {1, 0, 0, -1}));
  CHECK(signature(mat(2, 2, {1, 0, 0, -1})) == 0);

  RatMatrix h = mat(2, 2, {0, 1, 1, 0});
  auto [p2, d2] = sym_diagonalize(h);
  CHECK(p2.transpose() * h * p2 == d2);
  int pos = 0, neg = 0;
  for (int i = 0; i < 2; ++i) (sgn(d2(i, i)) > 0 ? pos : neg)++;
  CHECK(pos == 1);
  CHECK(neg == 1);

  CHECK(signature(RatMatrix::identity(3)) == 3);
  CHECK_THROWS_AS(sym_diagonalize(mat(2, 2, {1, 2, 3, 4})), std::invalid_argument);
}

TEST_CASE("sym_diagonalize congruence identity on random symmetric matrices") {
  TestRng rng{7};
  for (int trial = 0; trial < 25; ++trial) {
    int n = static_cast<int>(rng.range(1, 6));
    RatMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        a(i, j) = rat(rng.range(-4, 4), rng.range(1, 2));
        a(j, i) = a(i, j);
      }
    auto [p, d] = sym_diagonalize(a);
    CHECK(p.transpose() * a * p == d);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) CHECK(is_zero(d(i, j)));
    CHECK(!is_zero(det(p)));
  }
}

TEST_CASE("charpoly examples") {
  CHECK(charpoly(RatMatrix(2, 2)) == poly({0, 0, 1}));
  CHECK(charpoly(mat(2, 2, {0, -1, 1, 1})) == poly({1, -1, 1}));
  // companion matrix of x^3 - 2
  RatMatrix c(3, 3);
  c(0, 2) = Rat(2);
  c(1, 0) = Rat(1);
  c(2, 1) = Rat(1);
  CHECK(charpoly(c) == poly({-2, 0, 0, 1}));
  CHECK_THROWS_AS(charpoly(RatMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("Cayley-Hamilton on random matrices") {
  TestRng rng{99};
  for (int trial = 0; trial < 15; ++trial) {
    int n = static_cast<int>(rng.range(1, 5));
    RatMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = rat(rng.range(-3, 3), rng.range(1, 2));
    RatPoly cp = charpoly(a);
    CHECK(cp.is_monic());
    CHECK(cp.degree() == n);
    CHECK(cp.eval(a).is_zero());
    // minpoly divides charpoly and annihilates
    RatPoly mp = minpoly(a);
    CHECK(divides(mp, cp));
    CHECK(mp.eval(a).is_zero());
  }
}

TEST_CASE("factor x^2-1") {
  auto f = factor_poly_Q(poly({-1, 0, 1}));
  REQUIRE(f.size() == 2);
  CHECK(f[0].first == poly({-1, 1}));
  CHECK(f[0].second == 1);
  CHECK(f[1].first == poly({1, 1}));
  CHECK(f[1].second == 1);
}

TEST_CASE("factor x^2+7 irreducible") {
  auto f = factor_poly_Q(poly({7, 0, 1}));
  REQUIRE(f.size() == 1);
  CHECK(f[0].first == poly({7, 0, 1}));
  CHECK(f[0].second == 1);
}

TEST_CASE("factor x^4+4 splits into two quadratics") {
  auto f = factor_poly_Q(poly({4, 0, 0, 0, 1}));
  REQUIRE(f.size() == 2);
  CHECK(f[0].first == poly({2, -2, 1}));
  CHECK(f[1].first == poly({2, 2, 1}));
  CHECK((f[0].first * f[1].first) == poly({4, 0, 0, 0, 1}));
}

TEST_CASE("factorization reassembles with multiplicities and units") {
  TestRng rng{2024};
  for (int trial = 0; trial < 12; ++trial) {
    // build a product of small polynomials, possibly repeated
    RatPoly f = RatPoly::constant(rat(rng.range(1, 3), rng.range(1, 2)));
    int pieces = static_cast<int>(rng.range(1, 3));
    for (int k = 0; k < pieces; ++k) {
      int d = static_cast<int>(rng.range(1, 3));
      std::vector<Rat> c(d + 1);
      for (int i = 0; i < d; ++i) c[i] = Rat(rng.range(-4, 4));
      c[d] = Rat(rng.range(1, 3));
      RatPoly q{std::move(c)};
      int mult = static_cast<int>(rng.range(1, 2));
      for (int t = 0; t < mult; ++t) f = f * q;
    }
    auto factors = factor_poly_Q(f);
    RatPoly prod = RatPoly::constant(Rat(1));
    for (const auto& [q, mult] : factors) {
      CHECK(q.is_monic());
      for (int t = 0; t < mult; ++t) prod = prod * q;
    }
    // product equals input up to the rational unit lc(f)
    CHECK(prod * f.lc() == f);
  }
}

TEST_CASE("factored pieces of degree >= 2 have no rational root") {
  // rational root theorem probe on a moderate sample of candidates
  auto f = factor_poly_Q(poly({4, 0, 0, 0, 1}) * poly({-1, 1}) * poly({-2, 0, 1}));
  for (const auto& [q, mult] : f) {
    if (q.degree() < 2) continue;
    for (long num = -8; num <= 8; ++num)
      for (long den = 1; den <= 4; ++den) CHECK(!is_zero(q.eval(rat(num, den))));
  }
}

TEST_CASE("factor handles non-monic and rational coefficients") {
  // 6x^2 - 6 = 6(x-1)(x+1)
  auto f = factor_poly_Q(poly({-6, 0, 6}));
  REQUIRE(f.size() == 2);
  CHECK(f[0].first == poly({-1, 1}));
  CHECK(f[1].first == poly({1, 1}));
  // (x/2 - 1/3)*(x + 5) scaled
  RatPoly g = RatPoly({rat(-1, 3), rat(1, 2)}) * RatPoly({Rat(5), Rat(1)});
  auto fg = factor_poly_Q(g);
  REQUIRE(fg.size() == 2);
  RatPoly prod = fg[0].first * fg[1].first;
  CHECK(prod * g.lc() == g);
}

TEST_CASE("factor cyclotomic-like and repeated factors") {
  // (x^2+x+1)^2 (x-3)
  RatPoly q1 = poly({1, 1, 1});
  RatPoly f = q1 * q1 * poly({-3, 1});
  auto fac = factor_poly_Q(f);
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].first == poly({-3, 1}));
  CHECK(fac[0].second == 1);
  CHECK(fac[1].first == q1);
  CHECK(fac[1].second == 2);
}

TEST_CASE("minpoly of diagonalizable repeated-eigenvalue matrix") {
  RatMatrix a = RatMatrix::identity(3) * Rat(5);
  CHECK(minpoly(a) == poly({-5, 1}));
  RatMatrix j(2, 2);
  j(0, 0) = j(1, 1) = Rat(5);
  j(0, 1) = Rat(1);
  CHECK(minpoly(j) == poly({25, -10, 1}));
}

TEST_CASE("det and inverse") {
  RatMatrix a = mat(2, 2, {1, 2, 3, 4});
  CHECK(det(a) == Rat(-2));
  CHECK(inverse(a) * a == RatMatrix::identity(2));
  CHECK_THROWS_AS(inverse(mat(2, 2, {1, 1, 1, 1})), std::domain_error);
  CHECK(!try_inverse(mat(2, 2, {1, 1, 1, 1})).has_value());
}

TEST_CASE("solve returns consistent particular solutions") {
  RatMatrix a = mat(2, 3, {1, 0, 1, 0, 1, 1});
  RatMatrix b = mat(2, 1, {3, 4});
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);
  // inconsistent system
  RatMatrix a2 = mat(2, 1, {1, 1});
  RatMatrix b2 = mat(2, 1, {1, 2});
  CHECK(!solve(a2, b2).has_value());
}
