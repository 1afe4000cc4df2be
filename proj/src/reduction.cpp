#include "gkred/reduction.hpp"

namespace gkr {

namespace {

RatFunc one_form_on(const Form& a, const VectorField& X) {
  return interior(X, a).get(0);
}

}  // namespace

RatFunc ReductionSetup::theta_of(const Form& th, const VectorField& W) const {
  return one_form_on(th, W);
}

VectorField ReductionSetup::make_tangent(const VectorField& W) const {
  if (ns == 0) return W;
  VectorField out = W;
  for (int a = 0; a < ns; ++a) {
    RatFunc c = RatFunc::zero(chart->ctx());
    for (int b = 0; b < ns; ++b) c += Gn_inv(a, b) * one_form_on(dsig[b], W);
    out = out - Nr[a].scaled(c);
  }
  return out;
}

VectorField ReductionSetup::lift(const VectorField& Wt, int which) const {
  const std::vector<Form>& th =
      which > 0 ? theta_p : (which < 0 ? theta_m : theta_avg);
  VectorField out = Wt;
  for (int a = 0; a < ng; ++a)
    out = out - act.V[a].scaled(one_form_on(th[a], Wt));
  return out;
}

VectorField ReductionSetup::project_tau(int sign, const VectorField& W) const {
  const std::vector<VectorField>& k = sign > 0 ? kp : km;
  VectorField out = W;
  for (int a = 0; a < ng + ns; ++a) {
    RatFunc c = RatFunc::zero(chart->ctx());
    for (int b = 0; b < ng + ns; ++b) c += Tc_inv(a, b) * gm->pair(W, k[b]);
    out = out - k[a].scaled(c);
  }
  return out;
}

std::vector<RatFunc> ReductionSetup::tau_residuals(int sign,
                                                   const VectorField& Y) const {
  std::vector<RatFunc> res;
  for (int a = 0; a < ng; ++a) {
    RatFunc r = gm->pair(Y, act.V[a]);
    RatFunc x = one_form_on(xi_m[a], Y);
    res.push_back(sign > 0 ? r + x : r - x);
  }
  for (int a = 0; a < ns; ++a) res.push_back(one_form_on(dsig[a], Y));
  return res;
}

VectorField ReductionSetup::rho(int sign, const VectorField& X_opp,
                                const VectorField& Y_same,
                                const Connection& bis_sign) const {
  return project_tau(sign, bis_sign.apply(X_opp, Y_same));
}

VectorField ReductionSetup::relative_curvature_def(
    const VectorField& Xp, const VectorField& Xm, const VectorField& Yp,
    const VectorField& Ym, const Connection& bis_plus,
    const Connection& bis_minus) const {
  (void)Xm;
  VectorField a = rho(-1, Xp, Ym, bis_minus);
  VectorField b = rho(+1, Ym, Xp, bis_plus);
  VectorField c = lie_bracket(Xp, Ym);
  return a - b - c;
}

std::vector<RatFunc> ReductionSetup::relative_curvature_formula(
    const VectorField& Xp, const VectorField& Ym,
    const Connection& bis_minus) const {
  VectorField W = make_tangent(bis_minus.apply(Xp, Ym));
  std::vector<RatFunc> R(ng, RatFunc::zero(chart->ctx()));
  Scalar m2(-2);
  for (int a = 0; a < ng; ++a) {
    RatFunc acc = RatFunc::zero(chart->ctx());
    for (int b = 0; b < ng; ++b) acc += T_M_inv(a, b) * gm->pair(W, Vm_M[b]);
    R[a] = acc.scaled(m2);
  }
  return R;
}

std::vector<RatFunc> ReductionSetup::relative_curvature_ambient(
    const VectorField& Xp, const VectorField& Ym,
    const Connection& bis_minus) const {
  VectorField W = bis_minus.apply(Xp, Ym);
  std::vector<RatFunc> R(ng, RatFunc::zero(chart->ctx()));
  Scalar m2(-2);
  for (int a = 0; a < ng; ++a) {
    RatFunc acc = RatFunc::zero(chart->ctx());
    for (int b = 0; b < ng; ++b) {
      RatFunc inner = gm->pair(W, Vm[b]);
      for (int al = 0; al < ns; ++al)
        for (int be = 0; be < ns; ++be)
          inner -= Gn_inv(al, be) * one_form_on(dsig[al], W) *
                   one_form_on(dsig[be], Vm[b]);
      acc += T_M_inv(a, b) * inner;
    }
    R[a] = acc.scaled(m2);
  }
  return R;
}

RatFunc ReductionSetup::reduced_H_via_gamma(const VectorField& Wt1,
                                            const VectorField& Wt2,
                                            const VectorField& Wt3) const {
  VectorField X = lift(Wt1, 0), Y = lift(Wt2, 0), Z = lift(Wt3, 0);
  Form total = gm->metric_twist() + ext_d(gamma);
  return total.on({X, Y, Z});
}

RatFunc ReductionSetup::reduced_H_via_omega(const VectorField& Wt1,
                                            const VectorField& Wt2,
                                            const VectorField& Wt3) const {
  VectorField X = lift(Wt1, +1), Y = lift(Wt2, +1), Z = lift(Wt3, +1);
  Form total = gm->metric_twist();
  for (int a = 0; a < ng; ++a) {
    Form omega_a(chart);
    for (int b = 0; b < ng; ++b) {
      if (K_inv(b, a).is_zero()) continue;
      omega_a = omega_a + ext_d(xi_plus[b]).scaled(K_inv(b, a));
    }
    total = total + wedge(omega_a, xi_m[a]);
  }
  return total.on({X, Y, Z});
}

RatFunc ReductionSetup::reduced_H_via_torsion(const VectorField& Wt1,
                                              const VectorField& Wt2,
                                              const VectorField& Wt3,
                                              const Connection& bis_plus) const {
  VectorField X = lift(Wt1, +1), Y = lift(Wt2, +1), Z = lift(Wt3, +1);
  VectorField t = rho(+1, lift(Wt1, -1), Y, bis_plus) -
                  rho(+1, lift(Wt2, -1), X, bis_plus) -
                  lift(lie_bracket(X, Y), +1);
  return gm->pair(t, Z);
}

VectorField ReductionSetup::submanifold_bismut(const VectorField& X,
                                               const VectorField& Y,
                                               const Connection& bis) const {
  VectorField out = bis.apply(X, Y);
  for (int al = 0; al < ns; ++al) {
    RatFunc c = RatFunc::zero(chart->ctx());
    for (int be = 0; be < ns; ++be) {
      Form nd = bis.apply_coform(X, dsig[be]);
      c += Gn_inv(al, be) * one_form_on(nd, Y);
    }
    out = out + Nr[al].scaled(c);
  }
  return out;
}

RatFunc ReductionSetup::reduced_curvature_closed(const VectorField& WtX,
                                                 const VectorField& WtY,
                                                 const VectorField& WtZ,
                                                 const VectorField& WtW,
                                                 const Connection& bis_minus,
                                                 const Curvature& R_minus) const {
  VectorField Xp = lift(WtX, +1), Yp = lift(WtY, +1);
  VectorField Zm = lift(WtZ, -1), Wm = lift(WtW, -1);

  // level-set curvature of the ambient minus connection
  RatFunc acc = gm->pair(R_minus.apply(Xp, Yp, Zm), Wm);
  for (int al = 0; al < ns; ++al)
    for (int be = 0; be < ns; ++be) {
      if (Gn_inv(al, be).is_zero()) continue;
      RatFunc zy = one_form_on(bis_minus.apply_coform(Yp, dsig[be]), Zm);
      RatFunc wx = one_form_on(bis_minus.apply_coform(Xp, dsig[al]), Wm);
      RatFunc zx = one_form_on(bis_minus.apply_coform(Xp, dsig[be]), Zm);
      RatFunc wy = one_form_on(bis_minus.apply_coform(Yp, dsig[al]), Wm);
      acc += Gn_inv(al, be) * (zy * wx - zx * wy);
    }

  // curvature of tau_+ against the minus-side two-form
  Scalar half(mpq_class(1, 2));
  for (int a = 0; a < ng; ++a) {
    RatFunc omega_a = RatFunc::zero(chart->ctx());
    for (int b = 0; b < ng; ++b) {
      if (K_inv(b, a).is_zero()) continue;
      omega_a += K_inv(b, a) * ext_d(xi_plus[b]).on({Xp, Yp});
    }
    if (omega_a.is_zero()) continue;
    acc -= (omega_a * ext_d(xi_minus[a]).on({Zm, Wm})).scaled(half);
  }

  // vertical second-fundamental contribution
  std::vector<VectorField> DX, DY;
  for (int a = 0; a < ng; ++a) {
    DX.push_back(submanifold_bismut(Xp, Vm_M[a], bis_minus));
    DY.push_back(submanifold_bismut(Yp, Vm_M[a], bis_minus));
  }
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < ng; ++b) {
      if (T_M_inv(a, b).is_zero()) continue;
      acc += T_M_inv(a, b) * (gm->pair(Zm, DY[a]) * gm->pair(Wm, DX[b]) -
                              gm->pair(Zm, DX[a]) * gm->pair(Wm, DY[b]));
    }
  return acc;
}

RatFunc ReductionSetup::reduced_curvature_direct(const VectorField& WtX,
                                                 const VectorField& WtY,
                                                 const VectorField& WtZ,
                                                 const VectorField& WtW,
                                                 const Connection& bis_minus) const {
  VectorField Xp = lift(WtX, +1), Yp = lift(WtY, +1);
  VectorField Zm = lift(WtZ, -1), Wm = lift(WtW, -1);
  VectorField A = rho(-1, Yp, Zm, bis_minus);
  VectorField B = rho(-1, Xp, Zm, bis_minus);
  VectorField U = lift(lie_bracket(Xp, Yp), +1);
  VectorField R = rho(-1, Xp, A, bis_minus) - rho(-1, Yp, B, bis_minus) -
                  rho(-1, U, Zm, bis_minus);
  return gm->pair(R, Wm);
}

ReductionSetup build_frames(const ExtendedAction& act, const GenMetric& gm,
                            bool validate) {
  if (validate) validate_action(act, gm);
  ReductionSetup rs;
  rs.chart = act.chart;
  rs.gm = &gm;
  rs.act = act;
  rs.ng = act.group_size();
  rs.ns = (int)act.sigma.size();
  const Chart* ch = rs.chart;
  const VarContext* ctx = ch->ctx();

  rs.xi_m = metric_splitting_forms(act, gm);
  for (int a = 0; a < rs.ng; ++a) {
    VectorField gx = gm.raise(rs.xi_m[a]);
    rs.Vp.push_back(act.V[a] + gx);
    rs.Vm.push_back(act.V[a] - gx);
  }
  for (const Poly& s : act.sigma) {
    Form ds = ext_d(Form::function(ch, RatFunc(s)));
    rs.dsig.push_back(ds);
    rs.Nr.push_back(gm.raise(ds));
  }
  rs.Gn = Mat<RatFunc>(rs.ns, rs.ns, RatFunc::zero(ctx));
  for (int a = 0; a < rs.ns; ++a)
    for (int b = 0; b < rs.ns; ++b)
      rs.Gn(a, b) = one_form_on(rs.dsig[a], rs.Nr[b]);
  if (rs.ns) rs.Gn_inv = ratfunc_inverse(rs.Gn);

  rs.kp = rs.Vp;
  rs.km = rs.Vm;
  for (int a = 0; a < rs.ns; ++a) {
    rs.kp.push_back(rs.Nr[a]);
    rs.km.push_back(-rs.Nr[a]);
  }
  const int nk = rs.ng + rs.ns;
  rs.Tc = Mat<RatFunc>(nk, nk, RatFunc::zero(ctx));
  for (int a = 0; a < nk; ++a)
    for (int b = a; b < nk; ++b) {
      rs.Tc(a, b) = gm.pair(rs.kp[a], rs.kp[b]);
      rs.Tc(b, a) = rs.Tc(a, b);
      GKR_REQUIRE(rs.Tc(a, b) == gm.pair(rs.km[a], rs.km[b]),
                  "frames: plus/minus Gram matrices disagree");
    }
  rs.Tc_inv = ratfunc_inverse(rs.Tc);

  for (int a = 0; a < rs.ng; ++a) {
    rs.Vp_M.push_back(rs.make_tangent(rs.Vp[a]));
    rs.Vm_M.push_back(rs.make_tangent(rs.Vm[a]));
  }

  rs.Q = Mat<RatFunc>(rs.ng, rs.ng, RatFunc::zero(ctx));
  rs.K = Mat<RatFunc>(rs.ng, rs.ng, RatFunc::zero(ctx));
  rs.T_M = Mat<RatFunc>(rs.ng, rs.ng, RatFunc::zero(ctx));
  for (int a = 0; a < rs.ng; ++a)
    for (int b = 0; b < rs.ng; ++b) {
      rs.Q(a, b) = gm.pair(act.V[a], act.V[b]);
      rs.K(a, b) = rs.Q(a, b) - one_form_on(rs.xi_m[a], act.V[b]);
      rs.T_M(a, b) = gm.pair(rs.Vm_M[a], rs.Vm_M[b]);
      GKR_REQUIRE(rs.T_M(a, b) == gm.pair(rs.Vp_M[a], rs.Vp_M[b]),
                  "frames: intrinsic Gram differs between signs");
    }
  if (rs.ng) {
    rs.Q_inv = ratfunc_inverse(rs.Q);
    rs.K_inv = ratfunc_inverse(rs.K);
    rs.T_M_inv = ratfunc_inverse(rs.T_M);
  }

  for (int a = 0; a < rs.ng; ++a) {
    rs.xi_plus.push_back(gm.lower(rs.Vp_M[a]));
    rs.xi_minus.push_back(gm.lower(rs.Vm_M[a]));
  }

  // connection 1-forms of tau_{+/-}: duals of V_a against the frames
  for (int a = 0; a < rs.ng; ++a) {
    Form tp(ch), tm(ch);
    for (int b = 0; b < rs.ng; ++b) {
      tp = tp + rs.xi_plus[b].scaled(rs.K_inv(b, a));
      tm = tm + rs.xi_minus[b].scaled(rs.K_inv(a, b));
    }
    rs.theta_p.push_back(tp);
    rs.theta_m.push_back(tm);
  }
  for (int a = 0; a < rs.ng; ++a)
    for (int c = 0; c < rs.ng; ++c) {
      RatFunc dp = one_form_on(rs.theta_p[a], act.V[c]);
      RatFunc dm = one_form_on(rs.theta_m[a], act.V[c]);
      Scalar want(a == c ? 1 : 0);
      GKR_REQUIRE(dp == RatFunc::constant(ctx, want),
                  "frames: theta_+ is not dual to the generators");
      GKR_REQUIRE(dm == RatFunc::constant(ctx, want),
                  "frames: theta_- is not dual to the generators");
    }

  // connection 1-form of the average distribution tau
  {
    std::vector<Form> beta;
    for (int a = 0; a < rs.ng; ++a) {
      Form ba = gm.lower(act.V[a]);
      for (int c = 0; c < rs.ng; ++c) {
        RatFunc xa_vc = one_form_on(rs.xi_m[a], act.V[c]);
        if (xa_vc.is_zero()) continue;
        for (int b = 0; b < rs.ng; ++b)
          ba = ba - rs.xi_m[b].scaled(rs.Q_inv(c, b) * xa_vc);
      }
      beta.push_back(ba);
    }
    Mat<RatFunc> B(rs.ng, rs.ng, RatFunc::zero(ctx));
    for (int a = 0; a < rs.ng; ++a)
      for (int d = 0; d < rs.ng; ++d) B(a, d) = one_form_on(beta[a], act.V[d]);
    Mat<RatFunc> Binv = rs.ng ? ratfunc_inverse(B) : B;
    for (int a = 0; a < rs.ng; ++a) {
      Form th(ch);
      for (int b = 0; b < rs.ng; ++b) th = th + beta[b].scaled(Binv(a, b));
      rs.theta_avg.push_back(th);
      for (int c = 0; c < rs.ng; ++c) {
        Scalar want(a == c ? 1 : 0);
        GKR_REQUIRE(one_form_on(th, act.V[c]) == RatFunc::constant(ctx, want),
                    "frames: average theta is not dual to the generators");
      }
    }
  }

  // gamma = -1/2 Q^{ab}[xi_b - xi_b(V_c) theta^c] ^ [g(V_a) - Q_{ad} theta^d]
  //         - xi_a ^ theta^a + 1/2 xi_b(V_a) theta^a ^ theta^b
  {
    Form gamma(ch);
    Scalar half(mpq_class(1, 2));
    for (int a = 0; a < rs.ng; ++a)
      for (int b = 0; b < rs.ng; ++b) {
        if (rs.Q_inv(a, b).is_zero()) continue;
        Form left = rs.xi_m[b];
        for (int c = 0; c < rs.ng; ++c) {
          RatFunc xv = one_form_on(rs.xi_m[b], act.V[c]);
          if (!xv.is_zero()) left = left - rs.theta_avg[c].scaled(xv);
        }
        Form right = gm.lower(act.V[a]);
        for (int d = 0; d < rs.ng; ++d)
          if (!rs.Q(a, d).is_zero())
            right = right - rs.theta_avg[d].scaled(rs.Q(a, d));
        gamma = gamma - wedge(left, right).scaled(rs.Q_inv(a, b)).scaled(half);
      }
    for (int a = 0; a < rs.ng; ++a)
      gamma = gamma - wedge(rs.xi_m[a], rs.theta_avg[a]);
    for (int a = 0; a < rs.ng; ++a)
      for (int b = 0; b < rs.ng; ++b) {
        RatFunc xv = one_form_on(rs.xi_m[b], act.V[a]);
        if (!xv.is_zero())
          gamma = gamma +
                  wedge(rs.theta_avg[a], rs.theta_avg[b]).scaled(xv).scaled(half);
      }
    rs.gamma = gamma;
  }

  return rs;
}

GSection pullback_coform(const Form& xi, const ReductionSetup& rs) {
  const Chart* ch = rs.chart;
  GKR_REQUIRE(rs.ns == 0, "pullback_coform: group-only reduction expected");
  // basic input: annihilates the generators and is invariant
  for (int a = 0; a < rs.ng; ++a) {
    GKR_REQUIRE(interior(rs.act.V[a], xi).get(0).is_zero(),
                "pullback_coform: input form is not basic");
    GKR_REQUIRE(lie_derivative(rs.act.V[a], xi).is_zero(),
                "pullback_coform: input form is not invariant");
  }
  GSection out{VectorField(ch), xi};
  for (int b = 0; b < rs.ng; ++b) {
    RatFunc c = RatFunc::zero(ch->ctx());
    for (int a = 0; a < rs.ng; ++a)
      c += rs.T_M_inv(a, b) * rs.gm->form_pair(xi, rs.xi_m[a]);
    out = out - GSection{rs.act.V[b], rs.xi_m[b]}.scaled(c);
  }
  return out;
}

}  // namespace gkr
