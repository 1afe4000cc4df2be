#include "gkred/genmetric.hpp"

namespace gkr {

GenMetric::GenMetric(const Chart* ch, Mat<RatFunc> g, Form b, Form h)
    : chart_(ch), g_(std::move(g)), b_(std::move(b)), h_(std::move(h)) {
  const int d = ch->dirs();
  GKR_REQUIRE(g_.rows() == d && g_.cols() == d, "metric shape mismatch");
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      GKR_REQUIRE(g_(i, j) == g_(j, i), "metric must be symmetric");
  GKR_REQUIRE(b_.is_zero() || b_.is_homogeneous_degree(2),
              "b must be a 2-form");
  GKR_REQUIRE(h_.is_zero() || h_.is_homogeneous_degree(3),
              "h must be a 3-form");
  GKR_REQUIRE(ext_d(h_).is_zero(), "splitting curvature h must be closed");
  hm_ = h_ + ext_d(b_);
}

const Mat<RatFunc>& GenMetric::g_inv() const {
  if (!have_inv_) {
    ginv_ = ratfunc_inverse(g_);
    have_inv_ = true;
  }
  return ginv_;
}

RatFunc GenMetric::det_g() const { return ratfunc_det(g_); }

RatFunc GenMetric::pair(const VectorField& X, const VectorField& Y) const {
  RatFunc acc = RatFunc::zero(chart_->ctx());
  for (int i = 0; i < chart_->dirs(); ++i) {
    if (X[i].is_zero()) continue;
    for (int j = 0; j < chart_->dirs(); ++j) {
      if (Y[j].is_zero() || g_(i, j).is_zero()) continue;
      acc += g_(i, j) * X[i] * Y[j];
    }
  }
  return acc;
}

Form GenMetric::lower(const VectorField& X) const {
  Form a(chart_);
  for (int v = 0; v < chart_->dirs(); ++v) {
    RatFunc acc = RatFunc::zero(chart_->ctx());
    for (int u = 0; u < chart_->dirs(); ++u)
      if (!X[u].is_zero() && !g_(u, v).is_zero()) acc += g_(u, v) * X[u];
    a.set(Form::Mask(1) << v, acc);
  }
  return a;
}

VectorField GenMetric::raise(const Form& alpha) const {
  const auto& gi = g_inv();
  VectorField X(chart_);
  for (int v = 0; v < chart_->dirs(); ++v) {
    RatFunc acc = RatFunc::zero(chart_->ctx());
    for (int u = 0; u < chart_->dirs(); ++u) {
      RatFunc a = alpha.get(Form::Mask(1) << u);
      if (!a.is_zero() && !gi(v, u).is_zero()) acc += gi(v, u) * a;
    }
    X[v] = acc;
  }
  return X;
}

RatFunc GenMetric::form_pair(const Form& a, const Form& b) const {
  VectorField B = raise(b);
  RatFunc acc = RatFunc::zero(chart_->ctx());
  for (int v = 0; v < chart_->dirs(); ++v)
    acc += a.get(Form::Mask(1) << v) * B[v];
  return acc;
}

GSection GenMetric::graph_section(const VectorField& X, int sign) const {
  Form f = interior(X, b_);
  Form gx = lower(X);
  f = sign > 0 ? f + gx : f - gx;
  return {X, f};
}

FrameBundle GenMetric::eigenframe(int sign) const {
  FrameBundle F;
  F.label = sign > 0 ? "V+" : "V-";
  for (int v = 0; v < chart_->dirs(); ++v)
    F.secs.push_back(graph_section(VectorField::basis(chart_, v), sign));
  return F;
}

Connection::Connection(const Chart* ch)
    : chart_(ch),
      dirs_(ch->dirs()),
      G_(size_t(dirs_) * dirs_ * dirs_, RatFunc::zero(ch->ctx())) {}

VectorField Connection::apply(const VectorField& X,
                              const VectorField& Y) const {
  VectorField r(chart_);
  for (int k = 0; k < dirs_; ++k) {
    RatFunc acc = RatFunc::zero(chart_->ctx());
    for (int i = 0; i < dirs_; ++i) {
      if (X[i].is_zero()) continue;
      acc += X[i] * Y[k].partial(i);
      for (int j = 0; j < dirs_; ++j) {
        if (Y[j].is_zero() || gamma(k, i, j).is_zero()) continue;
        acc += gamma(k, i, j) * X[i] * Y[j];
      }
    }
    r[k] = acc;
  }
  return r;
}

Form Connection::apply_coform(const VectorField& X, const Form& alpha) const {
  Form r(chart_);
  for (int v = 0; v < dirs_; ++v) {
    RatFunc acc = RatFunc::zero(chart_->ctx());
    for (int i = 0; i < dirs_; ++i) {
      if (X[i].is_zero()) continue;
      acc += X[i] * alpha.get(Form::Mask(1) << v).partial(i);
      for (int j = 0; j < dirs_; ++j) {
        const RatFunc& a = alpha.get(Form::Mask(1) << j);
        if (a.is_zero() || gamma(j, i, v).is_zero()) continue;
        acc -= gamma(j, i, v) * X[i] * a;
      }
    }
    r.set(Form::Mask(1) << v, acc);
  }
  return r;
}

VectorField Connection::torsion(const VectorField& X,
                                const VectorField& Y) const {
  return apply(X, Y) - apply(Y, X) - lie_bracket(X, Y);
}

Connection levi_civita(const GenMetric& gm) {
  const Chart* ch = gm.chart();
  const int d = ch->dirs();
  const auto& g = gm.g();
  const auto& gi = gm.g_inv();
  Connection c(ch);
  Scalar half(mpq_class(1, 2));
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        RatFunc acc = RatFunc::zero(ch->ctx());
        for (int l = 0; l < d; ++l) {
          if (gi(k, l).is_zero()) continue;
          RatFunc t = g(j, l).partial(i) + g(i, l).partial(j) -
                      g(i, j).partial(l);
          if (!t.is_zero()) acc += gi(k, l) * t;
        }
        acc = acc.scaled(half);
        c.gamma(k, i, j) = acc;
        c.gamma(k, j, i) = acc;
      }
    }
  return c;
}

std::vector<RatFunc> three_form_table(const Form& H) {
  const Chart* ch = H.chart();
  const int d = ch->dirs();
  std::vector<RatFunc> T(size_t(d) * d * d, RatFunc::zero(ch->ctx()));
  auto at = [&](int i, int j, int k) -> RatFunc& {
    return T[(size_t(i) * d + j) * d + k];
  };
  for (const auto& kv : H.comps()) {
    int vs[8], m = 0;
    for (Form::Mask x = kv.first; x;) {
      int v = std::countr_zero(x);
      x &= x - 1;
      vs[m++] = v;
    }
    GKR_REQUIRE(m == 3, "three_form_table: non 3-form component");
    int perislot[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                          {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    for (int p = 0; p < 6; ++p) {
      int sign = p < 3 ? 1 : -1;
      RatFunc c = sign > 0 ? kv.second : -kv.second;
      at(vs[perislot[p][0]], vs[perislot[p][1]], vs[perislot[p][2]]) = c;
    }
  }
  return T;
}

Connection bismut(const GenMetric& gm, int sign) {
  const Chart* ch = gm.chart();
  const int d = ch->dirs();
  Connection c = levi_civita(gm);
  const Form& H = gm.metric_twist();
  if (H.is_zero()) return c;
  auto T = three_form_table(H);
  const auto& gi = gm.g_inv();
  Scalar half(mpq_class(1, 2));
  if (sign < 0) half = -half;
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        RatFunc acc = RatFunc::zero(ch->ctx());
        for (int l = 0; l < d; ++l) {
          const RatFunc& h = T[(size_t(l) * d + i) * d + j];
          if (h.is_zero() || gi(k, l).is_zero()) continue;
          acc += gi(k, l) * h;
        }
        if (!acc.is_zero()) c.gamma(k, i, j) += acc.scaled(half);
      }
  return c;
}

VectorField bismut_from_graphs(const GenMetric& gm, const VectorField& X,
                               const VectorField& Y, int sign) {
  GSection u = gm.graph_section(X, -sign);
  GSection v = gm.graph_section(Y, sign);
  GSection w = courant_bracket(u, v, gm.h());
  // split w = s_+(P) + s_-(Q): P - Q = g^{-1}(form(w) - i_{pi(w)} b)
  Form rem = w.form - interior(w.vec, gm.b());
  VectorField diff = gm.raise(rem);
  Scalar half(mpq_class(1, 2));
  VectorField P(gm.chart()), Q(gm.chart());
  for (int k = 0; k < gm.chart()->dirs(); ++k) {
    P[k] = (w.vec[k] + diff[k]).scaled(half);
    Q[k] = (w.vec[k] - diff[k]).scaled(half);
  }
  return sign > 0 ? P : Q;
}

VectorField Curvature::apply(const VectorField& X, const VectorField& Y,
                             const VectorField& Z) const {
  VectorField r(chart_);
  for (int l = 0; l < dirs_; ++l) {
    RatFunc acc = RatFunc::zero(chart_->ctx());
    for (int k = 0; k < dirs_; ++k)
      for (int i = 0; i < dirs_; ++i)
        for (int j = 0; j < dirs_; ++j) {
          const RatFunc& c = coef(l, k, i, j);
          if (c.is_zero()) continue;
          acc += c * Z[k] * X[i] * Y[j];
        }
    r[l] = acc;
  }
  return r;
}

Curvature riemann_curvature(const Connection& c) {
  const Chart* ch = c.chart();
  const int d = ch->dirs();
  std::vector<RatFunc> R(size_t(d) * d * d * d, RatFunc::zero(ch->ctx()));
  auto at = [&](int l, int k, int i, int j) -> RatFunc& {
    return R[((size_t(l) * d + k) * d + i) * d + j];
  };
  for (int l = 0; l < d; ++l)
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
          RatFunc acc = c.gamma(l, j, k).partial(i) -
                        c.gamma(l, i, k).partial(j);
          for (int m = 0; m < d; ++m) {
            if (!c.gamma(m, j, k).is_zero() && !c.gamma(l, i, m).is_zero())
              acc += c.gamma(l, i, m) * c.gamma(m, j, k);
            if (!c.gamma(m, i, k).is_zero() && !c.gamma(l, j, m).is_zero())
              acc -= c.gamma(l, j, m) * c.gamma(m, i, k);
          }
          at(l, k, i, j) = acc;
          at(l, k, j, i) = -acc;
        }
  return Curvature(ch, std::move(R));
}

}  // namespace gkr
