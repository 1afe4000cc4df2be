#pragma once

#include "gkred/frames.hpp"

namespace gkr {

// Generalized metric presented in a fixed isotropic splitting with curvature
// h: a metric g, a 2-form b, and the 3-form twist h of the splitting.  The
// metric splitting itself then has twist H_m = h + db, and
// V_+/- = graph(b +/- g).
class GenMetric {
 public:
  GenMetric(const Chart* ch, Mat<RatFunc> g, Form b, Form h);

  const Chart* chart() const { return chart_; }
  const Mat<RatFunc>& g() const { return g_; }
  const Mat<RatFunc>& g_inv() const;
  const Form& b() const { return b_; }
  const Form& h() const { return h_; }
  const Form& metric_twist() const { return hm_; }  // h + db

  RatFunc pair(const VectorField& X, const VectorField& Y) const;
  Form lower(const VectorField& X) const;           // g(X, .)
  VectorField raise(const Form& alpha) const;       // g^{-1} alpha
  RatFunc form_pair(const Form& a, const Form& b) const;  // g^{-1}(a, b)

  // X + (b + sign*g)(X)
  GSection graph_section(const VectorField& X, int sign) const;
  FrameBundle eigenframe(int sign) const;  // graphs over the chart basis

  RatFunc det_g() const;

 private:
  const Chart* chart_;
  Mat<RatFunc> g_;
  Form b_, h_, hm_;
  mutable Mat<RatFunc> ginv_;
  mutable bool have_inv_ = false;
};

// Christoffel table: nabla_{d_i} d_j = Gamma^k_{ij} d_k.
class Connection {
 public:
  Connection() = default;
  explicit Connection(const Chart* ch);

  const Chart* chart() const { return chart_; }
  const RatFunc& gamma(int k, int i, int j) const {
    return G_[(size_t(k) * dirs_ + i) * dirs_ + j];
  }
  RatFunc& gamma(int k, int i, int j) {
    return G_[(size_t(k) * dirs_ + i) * dirs_ + j];
  }

  VectorField apply(const VectorField& X, const VectorField& Y) const;
  // nabla_X of a 1-form: (nabla_X alpha)(Y) = X(alpha(Y)) - alpha(nabla_X Y).
  Form apply_coform(const VectorField& X, const Form& alpha) const;

  // T(X,Y) = nabla_X Y - nabla_Y X - [X,Y]
  VectorField torsion(const VectorField& X, const VectorField& Y) const;

 private:
  const Chart* chart_ = nullptr;
  int dirs_ = 0;
  std::vector<RatFunc> G_;
};

Connection levi_civita(const GenMetric& gm);

// nabla +/- (1/2) g^{-1} H_m, torsion 3-form = +/- H_m.
Connection bismut(const GenMetric& gm, int sign);

// Tangent part of the V_sign projection of [s_{-sign}(X), s_{sign}(Y)]_h,
// where s_{+/-}(Z) = Z + (b +/- g)(Z).  Equals bismut(gm, sign) applied to
// (X, Y) whenever the graphs decomposition is non-degenerate.
VectorField bismut_from_graphs(const GenMetric& gm, const VectorField& X,
                               const VectorField& Y, int sign);

// Full curvature table R(d_i, d_j) d_k = R^l_{kij} d_l.
class Curvature {
 public:
  Curvature() = default;
  Curvature(const Chart* ch, std::vector<RatFunc> R)
      : chart_(ch), dirs_(ch->dirs()), R_(std::move(R)) {}
  const RatFunc& coef(int l, int k, int i, int j) const {
    return R_[((size_t(l) * dirs_ + k) * dirs_ + i) * dirs_ + j];
  }
  VectorField apply(const VectorField& X, const VectorField& Y,
                    const VectorField& Z) const;

 private:
  const Chart* chart_ = nullptr;
  int dirs_ = 0;
  std::vector<RatFunc> R_;
};

Curvature riemann_curvature(const Connection& c);

// Antisymmetric component table H_{ijk} of a 3-form.
std::vector<RatFunc> three_form_table(const Form& H);

}  // namespace gkr
