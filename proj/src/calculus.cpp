#include "gkred/calculus.hpp"

namespace gkr {

Form ext_d(const Form& w) {
  const Chart* ch = w.chart();
  Form r(ch);
  for (const auto& kv : w.comps()) {
    for (int v = 0; v < ch->dirs(); ++v) {
      RatFunc dc = kv.second.partial(v);
      if (dc.is_zero()) continue;
      Form::Mask mv = Form::Mask(1) << v;
      int s = wedge_sign(mv, kv.first);
      if (!s) continue;
      if (s < 0) dc = -dc;
      Form t(ch);
      t.set(mv | kv.first, dc);
      r = r + t;
    }
  }
  return r;
}

Form interior(const VectorField& X, const Form& w) {
  const Chart* ch = w.chart();
  Form r(ch);
  for (const auto& kv : w.comps()) {
    Form::Mask m = kv.first;
    int pos = 0;
    for (Form::Mask x = m; x;) {
      int v = std::countr_zero(x);
      x &= x - 1;
      if (!X[v].is_zero()) {
        RatFunc c = kv.second * X[v];
        if (pos & 1) c = -c;
        Form t(ch);
        t.set(m & ~(Form::Mask(1) << v), c);
        r = r + t;
      }
      ++pos;
    }
  }
  return r;
}

Form lie_derivative(const VectorField& X, const Form& w) {
  return ext_d(interior(X, w)) + interior(X, ext_d(w));
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
  GKR_REQUIRE(X.chart() == Y.chart(), "lie_bracket: chart mismatch");
  const Chart* ch = X.chart();
  VectorField r(ch);
  for (int k = 0; k < ch->dirs(); ++k) {
    RatFunc acc = RatFunc::zero(ch->ctx());
    for (int j = 0; j < ch->dirs(); ++j) {
      if (!X[j].is_zero()) acc += X[j] * Y[k].partial(j);
      if (!Y[j].is_zero()) acc -= Y[j] * X[k].partial(j);
    }
    r[k] = acc;
  }
  return r;
}

GSection lie_derivative(const VectorField& X, const GSection& s) {
  return {lie_bracket(X, s.vec), lie_derivative(X, s.form)};
}

Spinor clifford(const GSection& s, const Spinor& phi) {
  return interior(s.vec, phi) + wedge(s.form, phi);
}

GSection Bivector::interior(const GSection& u) const {
  GKR_REQUIRE(!pieces.empty(), "interior of empty bivector");
  const Chart* ch = pieces[0].a.chart();
  GSection r(ch);
  for (const Piece& p : pieces) {
    RatFunc ua = pairing(u, p.a);
    RatFunc ub = pairing(u, p.b);
    r = r + p.b.scaled(ua * RatFunc::constant(ch->ctx(), p.weight)) -
        p.a.scaled(ub * RatFunc::constant(ch->ctx(), p.weight));
  }
  return r;
}

Spinor bivector_action(const Bivector& eps, const Spinor& phi) {
  GKR_REQUIRE(!eps.pieces.empty(), "action of empty bivector");
  const Chart* ch = eps.pieces[0].a.chart();
  Spinor r(ch);
  Scalar half(mpq_class(1, 2));
  for (const auto& p : eps.pieces) {
    Spinor t = clifford(p.a, clifford(p.b, phi)) -
               clifford(p.b, clifford(p.a, phi));
    r = r + t.scaled(half * p.weight);
  }
  return r;
}

Spinor exp_bivector_action(const Bivector& eps, const Spinor& phi) {
  if (eps.pieces.empty()) return phi;
  const Chart* ch = phi.chart();
  Spinor acc = phi;
  Spinor term = phi;
  Scalar sign(1);
  mpq_class fact(1);
  // the action shifts degrees by at most 2; 2n+2 applications must kill it
  const int bound = 2 * ch->n() + 2;
  for (int k = 1; k <= bound; ++k) {
    term = bivector_action(eps, term);
    if (term.is_zero()) return acc;
    sign = -sign;
    fact *= k;
    acc = acc + term.scaled(sign * Scalar(mpq_class(1) / fact));
  }
  GKR_REQUIRE(false, "bivector exponential did not terminate (malformed eps)");
  return acc;
}

}  // namespace gkr
