#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <gmpxx.h>

#include "doctest.h"
#include "gkred/linalg.hpp"
#include "gkred/rng.hpp"
#include "gkred/sampling.hpp"

using namespace gkr;

namespace {

const VarContext& c3() {
  static VarContext ctx(3);
  return ctx;
}

Poly var(int v, int e = 1) { return Poly::variable(&c3(), v, e); }
Poly con(long n, long d = 1) {
  return Poly::constant(&c3(), Scalar(mpq_class(n, d)));
}

// z1*z2 - z0*z1 - z0*z2 + z0^2, the hand expansion of (z1-z0)(z2-z0)
Poly f0_expanded() {
  return var(1) * var(2) - var(0) * var(1) - var(0) * var(2) + var(0, 2);
}

Poly moment_map() {
  Poly mu(&c3());
  for (int i = 0; i < 3; ++i) mu += var(i) * var(i + 3);
  return mu - con(1);
}

}  // namespace

TEST_CASE("scalar field arithmetic is exact") {
  Rng rng(11);
  for (int it = 0; it < 300; ++it) {
    Scalar a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * (b * c) == (a * b) * c);
    CHECK(a + (-a) == Scalar(0));
    if (!b.is_zero()) CHECK(a / b * b == a);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}

TEST_CASE("poly arithmetic: binomial and identity examples") {
  Poly s = var(0) + var(3);  // z0 + zb0
  Poly sq = s * s;
  Poly expect = var(0, 2) + con(2) * var(0) * var(3) + var(3, 2);
  CHECK(sq == expect);

  Poly f0 = (var(1) - var(0)) * (var(2) - var(0));
  CHECK(f0 * con(1) == f0);
  CHECK(f0 == f0_expanded());
}

TEST_CASE("poly example: expansion checked at 5 random rational points") {
  Poly lhs = (var(1) - var(0)) * (var(2) - var(0));
  Poly rhs = f0_expanded();
  Rng rng(23);
  for (int it = 0; it < 5; ++it) {
    std::vector<Scalar> pt;
    for (int v = 0; v < 6; ++v) pt.push_back(rng.scalar());
    CHECK(lhs.eval_exact(pt) == rhs.eval_exact(pt));
  }
}

TEST_CASE("poly ring axioms on random inputs") {
  Rng rng(5);
  for (int it = 0; it < 60; ++it) {
    Poly a = random_poly(&c3(), rng, 3, 4);
    Poly b = random_poly(&c3(), rng, 3, 4);
    Poly c = random_poly(&c3(), rng, 3, 4);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("conjugation is an involutive ring morphism") {
  Rng rng(7);
  for (int it = 0; it < 50; ++it) {
    Poly a = random_poly(&c3(), rng, 3, 4);
    Poly b = random_poly(&c3(), rng, 3, 4);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
  }
  // conj(i*z0) = -i*zb0
  Poly iz0 = Scalar::i() * var(0);
  CHECK(iz0.conj() == (-Scalar::i()) * var(3));
  // the moment map is real
  CHECK(moment_map().conj() == moment_map());
}

TEST_CASE("partial derivatives: Leibniz, commutation, Euler identity") {
  Rng rng(9);
  for (int it = 0; it < 40; ++it) {
    Poly a = random_poly(&c3(), rng, 3, 4);
    Poly b = random_poly(&c3(), rng, 3, 4);
    int u = rng.uniform_int(0, 5), v = rng.uniform_int(0, 5);
    CHECK((a * b).partial(u) == a.partial(u) * b + a * b.partial(u));
    CHECK(a.partial(u).partial(v) == a.partial(v).partial(u));
  }
  CHECK(var(0, 2).partial(0) == con(2) * var(0));

  // sum_p d_{z_p} f_i = 0 for the symmetric-difference solution
  Poly f[3] = {(var(1) - var(0)) * (var(2) - var(0)),
               (var(0) - var(1)) * (var(2) - var(1)),
               (var(0) - var(2)) * (var(1) - var(2))};
  for (const Poly& fi : f) {
    Poly s = fi.partial(0) + fi.partial(1) + fi.partial(2);
    CHECK(s.is_zero());
    // Euler identity for degree-2 homogeneous polynomials
    Poly euler = var(0) * fi.partial(0) + var(1) * fi.partial(1) +
                 var(2) * fi.partial(2) - con(2) * fi;
    CHECK(euler.is_zero());
    int deg = -1;
    CHECK(fi.is_homogeneous(&deg));
    CHECK(deg == 2);
  }
}

TEST_CASE("rational functions: field axioms and cross-multiplication equality") {
  Rng rng(13);
  for (int it = 0; it < 40; ++it) {
    Poly pa = random_poly(&c3(), rng, 2, 3);
    Poly pb = random_poly(&c3(), rng, 2, 3);
    Poly pc = random_poly(&c3(), rng, 2, 3);
    if (pb.is_zero() || pc.is_zero()) continue;
    RatFunc a(pa, pb), b(pc, pb), c(pb, pc);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == RatFunc::constant(&c3(), Scalar(1)));
    }
    // a/b == (a*c)/(b*c)
    CHECK(RatFunc(pa, pb) == RatFunc(pa * pc, pb * pc));
  }
}

TEST_CASE("ratfunc_solve: identity, 1x1, and 2x2 with back-substitution oracle") {
  const VarContext* ctx = &c3();
  Rng rng(17);

  // identity matrix
  Mat<RatFunc> I(3, 3, RatFunc::zero(ctx));
  for (int i = 0; i < 3; ++i) I(i, i) = RatFunc::constant(ctx, Scalar(1));
  std::vector<RatFunc> b = {RatFunc(var(0)), RatFunc(var(1) * var(2)),
                            RatFunc::constant(ctx, Scalar(7))};
  auto x = ratfunc_solve(I, b);
  for (int i = 0; i < 3; ++i) CHECK(x[i] == b[i]);

  // 1x1: K11 x = rhs means x = rhs / K11
  Mat<RatFunc> K(1, 1);
  K(0, 0) = RatFunc(con(2) * (var(0) * var(3) + var(1) * var(4)));
  std::vector<RatFunc> rhs = {RatFunc(var(0) * var(4))};
  auto sol = ratfunc_solve(K, rhs);
  CHECK(sol[0] * K(0, 0) == rhs[0]);

  // 2x2 with polynomial entries, verified by back-substitution at 5 points
  for (int rep = 0; rep < 5; ++rep) {
    Mat<RatFunc> A(2, 2);
    A(0, 0) = RatFunc(random_poly(ctx, rng, 2, 3) + con(5));
    A(0, 1) = RatFunc(random_poly(ctx, rng, 2, 2));
    A(1, 0) = RatFunc(random_poly(ctx, rng, 2, 2));
    A(1, 1) = RatFunc(random_poly(ctx, rng, 2, 3) + con(7));
    std::vector<RatFunc> c = {RatFunc(random_poly(ctx, rng, 2, 2)),
                              RatFunc(random_poly(ctx, rng, 2, 2))};
    auto y = ratfunc_solve(A, c);
    for (int i = 0; i < 2; ++i) {
      RatFunc res = A(i, 0) * y[0] + A(i, 1) * y[1] - c[i];
      CHECK(res.is_zero());  // exact residual
      for (int p = 0; p < 5; ++p) {
        std::vector<Scalar> pt;
        for (int v = 0; v < 6; ++v) pt.push_back(rng.scalar(3));
        Scalar den0 = res.den().eval_exact(pt);
        if (!den0.is_zero()) CHECK(res.eval_exact(pt) == Scalar(0));
      }
    }
  }

  // singular matrix reports the vanishing determinant
  Mat<RatFunc> S(2, 2);
  S(0, 0) = RatFunc(var(0));
  S(0, 1) = RatFunc(var(1));
  S(1, 0) = RatFunc(var(0) * var(2));
  S(1, 1) = RatFunc(var(1) * var(2));
  CHECK_THROWS_AS(ratfunc_solve(S, {RatFunc(con(1)), RatFunc(con(1))}), error);
  CHECK(ratfunc_det(S).is_zero());
}

TEST_CASE("determinant and inverse over the rational-function field") {
  const VarContext* ctx = &c3();
  Rng rng(19);
  for (int rep = 0; rep < 6; ++rep) {
    Mat<RatFunc> A(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        A(i, j) = RatFunc(random_poly(ctx, rng, 1, 2, 2) +
                          (i == j ? con(3 + i) : con(0)));
    RatFunc det = ratfunc_det(A);
    if (det.is_zero()) continue;
    Mat<RatFunc> Ainv = ratfunc_inverse(A);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        RatFunc acc = RatFunc::zero(ctx);
        for (int k = 0; k < 3; ++k) acc += A(i, k) * Ainv(k, j);
        CHECK(acc == RatFunc::constant(ctx, Scalar(i == j ? 1 : 0)));
      }
  }
}

TEST_CASE("evaluation: sphere points, locus points, homomorphism") {
  Poly mu = moment_map();
  // mu at (1,0,0) = 0
  std::vector<Scalar> p100 = {Scalar(1), Scalar(0), Scalar(0),
                              Scalar(1), Scalar(0), Scalar(0)};
  CHECK(mu.eval_exact(p100) == Scalar(0));

  // f0 vanishes at the joint point z = (1,1,1)
  Poly f0 = (var(1) - var(0)) * (var(2) - var(0));
  std::vector<Scalar> p111(6, Scalar(1));
  CHECK(f0.eval_exact(p111) == Scalar(0));

  // evaluation is a ring homomorphism to complex doubles within tol
  Rng rng(29);
  for (int it = 0; it < 20; ++it) {
    Poly a = random_poly(&c3(), rng, 3, 4, 3);
    Poly b = random_poly(&c3(), rng, 3, 4, 3);
    std::vector<complex_d> pt;
    for (int v = 0; v < 6; ++v) pt.emplace_back(rng.gauss(), rng.gauss());
    complex_d lhs = (a * b).eval_c(pt);
    complex_d rhs = a.eval_c(pt) * b.eval_c(pt);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * (1 + std::abs(rhs)));
  }

  // conjugate consistency at conj-consistent points
  for (int it = 0; it < 20; ++it) {
    Poly a = random_poly(&c3(), rng, 3, 4, 3);
    Rng r2(100 + it);
    EvalPoint p = box_point(&c3(), r2);
    Scalar va = a.eval_exact(p.xq);
    Scalar vc = a.conj().eval_exact(p.xq);
    CHECK(va.conj() == vc);
  }
}

TEST_CASE("exact sphere sampling lands exactly on the moment-map zero locus") {
  Rng rng(31);
  Poly mu = moment_map();
  for (int it = 0; it < 10; ++it) {
    EvalPoint p = sphere_point(&c3(), rng);
    CHECK(mu.eval_exact(p.xq) == Scalar(0));
  }
}

TEST_CASE("exact jets agree with symbolic partials") {
  Rng rng(37);
  for (int it = 0; it < 15; ++it) {
    Poly a = random_poly(&c3(), rng, 4, 5);
    Poly b = random_poly(&c3(), rng, 3, 4) + con(3);
    RatFunc f(a, b);
    EvalPoint p = box_point(&c3(), rng);
    auto j = jet_eval<ExactField>(f, p, 2);
    CHECK(j.v == f.eval_exact(p.xq));
    for (int v = 0; v < 6; ++v)
      CHECK(j.D1(v) == f.partial(v).eval_exact(p.xq));
    for (int u = 0; u < 6; ++u)
      for (int v = u; v < 6; ++v)
        CHECK(j.D2(u, v) == f.partial(u).partial(v).eval_exact(p.xq));
  }
}

TEST_CASE("exact polynomial division") {
  Poly f0 = (var(1) - var(0)) * (var(2) - var(0));
  Poly g = var(1) - var(0);
  CHECK(f0.exact_div(g) == var(2) - var(0));
  Poly q;
  CHECK_FALSE((f0 + con(1)).try_exact_div(g, &q));
}

TEST_CASE("canonical serialization is stable") {
  Poly p = var(0, 2) + Scalar::i() * var(1) * var(4) - con(1, 2);
  CHECK(p.str() == "z0^2 + i*z1*zb1 - 1/2");
  RatFunc r(p, var(2));
  CHECK(r.str() == "(z0^2 + i*z1*zb1 - 1/2)/(z2)");
}
