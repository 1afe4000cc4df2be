#include "gkred/sampling.hpp"

#include <cmath>

namespace gkr {

EvalPoint sphere_point(const VarContext* ctx, Rng& rng, int den_bits) {
  const int rdim = 2 * ctx->n;
  // Gaussian direction on S^{rdim-1}
  std::vector<double> u(rdim);
  double norm = 0;
  do {
    norm = 0;
    for (double& x : u) {
      x = rng.gauss();
      norm += x * x;
    }
    norm = std::sqrt(norm);
  } while (norm < 1e-6 || std::abs(u[rdim - 1] / norm - 1.0) < 1e-3);
  for (double& x : u) x /= norm;

  // stereographic preimage from the last coordinate, rationalized
  const long den = 1L << den_bits;
  std::vector<mpq_class> y(rdim - 1);
  mpq_class y2(0);
  for (int i = 0; i < rdim - 1; ++i) {
    double yi = u[i] / (1.0 - u[rdim - 1]);
    y[i] = mpq_class(long(llround(yi * double(den))), den);
    y[i].canonicalize();
    y2 += y[i] * y[i];
  }
  // exact image on the sphere
  mpq_class denom = y2 + 1;
  std::vector<mpq_class> x(rdim);
  for (int i = 0; i < rdim - 1; ++i) x[i] = 2 * y[i] / denom;
  x[rdim - 1] = (y2 - 1) / denom;

  std::vector<Scalar> z(ctx->n);
  for (int k = 0; k < ctx->n; ++k) z[k] = Scalar(x[2 * k], x[2 * k + 1]);
  return EvalPoint::from_exact(ctx, z);
}

EvalPoint box_point(const VarContext* ctx, Rng& rng, int mag) {
  std::vector<Scalar> z(ctx->n);
  for (int k = 0; k < ctx->n; ++k)
    z[k] = Scalar(rng.rational(mag) / 4, rng.rational(mag) / 4);
  return EvalPoint::from_exact(ctx, z);
}

Poly random_poly(const VarContext* ctx, Rng& rng, int deg, int nterms,
                 int mag) {
  Poly p(ctx);
  for (int t = 0; t < nterms; ++t) {
    Mono m = 0;
    int budget = rng.uniform_int(0, deg);
    for (int d = 0; d < budget; ++d) {
      int v = rng.uniform_int(0, ctx->nvars() - 1);
      m = mono_mul(m, mono_var(v, 1));
    }
    Poly term(ctx);
    term = Poly::constant(ctx, rng.scalar(mag));
    for (int v = 0; v < ctx->nvars(); ++v) {
      int e = mono_exp(m, v);
      if (e) term *= Poly::variable(ctx, v, e);
    }
    p += term;
  }
  return p;
}

Poly random_holomorphic_poly(const VarContext* ctx, Rng& rng, int deg,
                             int nterms, int mag) {
  Poly p(ctx);
  for (int t = 0; t < nterms; ++t) {
    Poly term = Poly::constant(ctx, rng.scalar(mag));
    int budget = rng.uniform_int(0, deg);
    for (int d = 0; d < budget; ++d) {
      int v = rng.uniform_int(0, ctx->n - 1);
      term *= Poly::variable(ctx, v, 1);
    }
    p += term;
  }
  return p;
}

VectorField random_real_field(const Chart* ch, Rng& rng, int deg, int nterms,
                              int mag) {
  VectorField X(ch);
  const VarContext* ctx = ch->ctx();
  for (int v = 0; v < ctx->n; ++v) {
    Poly c = random_poly(ctx, rng, deg, nterms, mag);
    X[v] = RatFunc(c);
    X[ctx->conj_var(v)] = RatFunc(c.conj());
  }
  return X;
}

Form random_form(const Chart* ch, Rng& rng, int degree, int poly_deg,
                 int nterms, int mag) {
  Form w(ch);
  const int d = ch->dirs();
  // run over a few random ascending index sets
  int count = degree == 0 ? 1 : std::min(6, d);
  for (int rep = 0; rep < count; ++rep) {
    Form::Mask m = 0;
    while (mask_degree(m) < degree)
      m |= Form::Mask(1) << rng.uniform_int(0, d - 1);
    Form t(ch);
    t.set(m, RatFunc(random_poly(ch->ctx(), rng, poly_deg, nterms, mag)));
    w = w + t;
  }
  return w;
}

}  // namespace gkr
