#include "gkred/evalpoint.hpp"

namespace gkr {

EvalPoint EvalPoint::from_exact(const VarContext* ctx,
                                const std::vector<Scalar>& z_coords) {
  GKR_REQUIRE((int)z_coords.size() == ctx->n, "expected n holomorphic coords");
  EvalPoint p;
  p.ctx = ctx;
  p.exact = true;
  p.xq.resize(ctx->nvars());
  for (int i = 0; i < ctx->n; ++i) {
    p.xq[i] = z_coords[i];
    p.xq[i + ctx->n] = z_coords[i].conj();
  }
  p.xc.resize(ctx->nvars());
  for (int v = 0; v < ctx->nvars(); ++v) p.xc[v] = p.xq[v].to_complex();
  return p;
}

EvalPoint EvalPoint::from_exact_full(const VarContext* ctx,
                                     const std::vector<Scalar>& all_coords) {
  GKR_REQUIRE((int)all_coords.size() == ctx->nvars(), "expected 2n coords");
  EvalPoint p;
  p.ctx = ctx;
  p.exact = true;
  p.xq = all_coords;
  p.xc.resize(ctx->nvars());
  for (int v = 0; v < ctx->nvars(); ++v) p.xc[v] = p.xq[v].to_complex();
  return p;
}

EvalPoint EvalPoint::from_complex(const VarContext* ctx,
                                  const std::vector<complex_d>& z_coords) {
  GKR_REQUIRE((int)z_coords.size() == ctx->n, "expected n holomorphic coords");
  EvalPoint p;
  p.ctx = ctx;
  p.exact = false;
  p.xc.resize(ctx->nvars());
  for (int i = 0; i < ctx->n; ++i) {
    p.xc[i] = z_coords[i];
    p.xc[i + ctx->n] = std::conj(z_coords[i]);
  }
  return p;
}

template <class F>
Jet<typename F::K> jet_eval(const Poly& p, const EvalPoint& pt, int order) {
  using K = typename F::K;
  const VarContext* ctx = p.ctx() ? p.ctx() : pt.ctx;
  const int nv = ctx->nvars();
  Jet<K> out(nv, order);
  if (p.is_zero()) return out;

  // power tables per variable
  int maxe[8] = {0};
  for (const auto& t : p.terms())
    for (int v = 0; v < nv; ++v)
      maxe[v] = std::max(maxe[v], mono_exp(t.mono, v));
  std::vector<std::vector<K>> pw(nv);
  for (int v = 0; v < nv; ++v) {
    pw[v].resize(maxe[v] + 1);
    pw[v][0] = K(1);
    K x = F::coord(pt, v);
    for (int e = 1; e <= maxe[v]; ++e) pw[v][e] = pw[v][e - 1] * x;
  }
  auto mono_val = [&](Mono m) {
    K acc(1);
    for (int v = 0; v < nv; ++v) {
      int e = mono_exp(m, v);
      if (e) acc = acc * pw[v][e];
    }
    return acc;
  };

  for (const auto& t : p.terms()) {
    K c = F::from_scalar(t.coef);
    out.v = out.v + c * mono_val(t.mono);
    if (order >= 1) {
      for (int a = 0; a < nv; ++a) {
        int ea = mono_exp(t.mono, a);
        if (!ea) continue;
        out.d1[a] = out.d1[a] + c * K(ea) * mono_val(t.mono - mono_var(a, 1));
      }
    }
    if (order >= 2) {
      for (int a = 0; a < nv; ++a) {
        int ea = mono_exp(t.mono, a);
        if (!ea) continue;
        for (int b = a; b < nv; ++b) {
          int eb = mono_exp(t.mono, b);
          if (a == b) {
            if (ea < 2) continue;
            out.d2[out.idx2(a, a)] =
                out.d2[out.idx2(a, a)] +
                c * K(ea * (ea - 1)) * mono_val(t.mono - mono_var(a, 2));
          } else {
            if (!eb) continue;
            out.d2[out.idx2(a, b)] =
                out.d2[out.idx2(a, b)] +
                c * K(ea * eb) *
                    mono_val(t.mono - mono_var(a, 1) - mono_var(b, 1));
          }
        }
      }
    }
  }
  return out;
}

template <class F>
Jet<typename F::K> jet_eval(const RatFunc& r, const EvalPoint& pt, int order) {
  auto num = jet_eval<F>(r.num(), pt, order);
  if (r.den().is_constant()) {
    auto c = Jet<typename F::K>::constant(
        num.nv, order, F::from_scalar(r.den().constant_value()));
    return num / c;
  }
  auto den = jet_eval<F>(r.den(), pt, order);
  GKR_REQUIRE(!F::is_zero(den.v), "rational function pole at evaluation point");
  return num / den;
}

template Jet<Scalar> jet_eval<ExactField>(const Poly&, const EvalPoint&, int);
template Jet<complex_d> jet_eval<DoubleField>(const Poly&, const EvalPoint&,
                                              int);
template Jet<Scalar> jet_eval<ExactField>(const RatFunc&, const EvalPoint&,
                                          int);
template Jet<complex_d> jet_eval<DoubleField>(const RatFunc&, const EvalPoint&,
                                              int);

}  // namespace gkr
