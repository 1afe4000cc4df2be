#pragma once

#include "gkred/action.hpp"

namespace gkr {

// Frames and Gram data for the reduction of a generalized Riemannian manifold
// by an extended group action, optionally across a level set sigma = 0.  The
// group and level-set constraints are treated as one combined family of
// generators: the projections along the combined frames coincide with the
// two-stage reduction (ambient -> level set -> quotient).
//
// All reduced objects are represented upstairs: base vector fields by their
// horizontal lifts, reduced tensors by their values on lifts.
struct ReductionSetup {
  const Chart* chart = nullptr;
  const GenMetric* gm = nullptr;
  ExtendedAction act;
  int ng = 0;  // group generators
  int ns = 0;  // defining functions

  std::vector<Form> xi_m;            // metric-splitting form parts (group)
  std::vector<VectorField> Vp, Vm;   // ambient V_a^{+/-} = V_a +/- g^{-1}xi_a
  std::vector<Form> dsig;            // d sigma^alpha
  std::vector<VectorField> Nr;       // g^{-1} d sigma^alpha
  Mat<RatFunc> Gn, Gn_inv;           // normal Gram g^{-1}(ds,ds)

  std::vector<VectorField> kp, km;   // combined frames of k_{+/-}
  Mat<RatFunc> Tc, Tc_inv;           // combined Gram (same for both signs)

  // intrinsic (level-set corrected) group frame data
  std::vector<VectorField> Vp_M, Vm_M;
  Mat<RatFunc> Q, Q_inv;             // g(V_a, V_b)
  Mat<RatFunc> K, K_inv;             // K_ab = Q_ab - xi_a(V_b)
  Mat<RatFunc> T_M, T_M_inv;         // g(V^{-,M}_a, V^{-,M}_b)
  std::vector<Form> xi_plus, xi_minus;  // 1-forms g(V^{+/-,M}_a)
  std::vector<Form> theta_p, theta_m, theta_avg;  // connection 1-forms
  Form gamma;                        // 2-form entering the (H + d gamma) route

  // ---- exact symbolic operations (all identities over RatFunc) ----

  // subtracts normal components so d sigma(result) = 0 identically
  VectorField make_tangent(const VectorField& W) const;
  // horizontal lift of the class of a tangent invariant field:
  // which = +1 (tau_+), -1 (tau_-), 0 (average tau)
  VectorField lift(const VectorField& W_tangent, int which) const;
  // g-orthogonal projection onto tau_{sign} along the combined k_{sign}
  VectorField project_tau(int sign, const VectorField& W) const;
  // membership residuals of the tau_{sign} defining equations
  std::vector<RatFunc> tau_residuals(int sign, const VectorField& Y) const;

  RatFunc theta_of(const Form& th, const VectorField& W) const;

  // reduced Bismut connections as tau_{-/+} lifts:
  //   rho_-(X,Y) = P_{tau_-}(nabla^-_{X^+} Y^-),
  //   rho_+(X,Y) = P_{tau_+}(nabla^+_{X^-} Y^+),
  // given the matching lifts and the ambient Bismut connection of that sign.
  VectorField rho(int sign, const VectorField& X_opp, const VectorField& Y_same,
                  const Connection& bis_sign) const;

  // relative curvature of (tau_+, tau_-):
  // definition rho_-(X,Y) - rho_+(Y,X) - [X^+, Y^-]
  VectorField relative_curvature_def(const VectorField& Xp,
                                     const VectorField& Xm,
                                     const VectorField& Yp,
                                     const VectorField& Ym,
                                     const Connection& bis_plus,
                                     const Connection& bis_minus) const;
  // closed coefficient form R^a = -2 T^{ab} g(nabla~^-_{X^+} Y^-, V_b^{-,M})
  // with nabla~^- the level-set projected ambient connection
  std::vector<RatFunc> relative_curvature_formula(
      const VectorField& Xp, const VectorField& Ym,
      const Connection& bis_minus) const;
  // ambient-extension route (level-set corrections explicit)
  std::vector<RatFunc> relative_curvature_ambient(
      const VectorField& Xp, const VectorField& Ym,
      const Connection& bis_minus) const;

  // splitting-curvature evaluations on lifts of one base triple
  RatFunc reduced_H_via_gamma(const VectorField& Wt1, const VectorField& Wt2,
                              const VectorField& Wt3) const;
  RatFunc reduced_H_via_omega(const VectorField& Wt1, const VectorField& Wt2,
                              const VectorField& Wt3) const;
  // torsion route: g(rho_+(X,Y) - rho_+(Y,X) - lift_+[X,Y], Z^+)
  RatFunc reduced_H_via_torsion(const VectorField& Wt1, const VectorField& Wt2,
                                const VectorField& Wt3,
                                const Connection& bis_plus) const;

  // level-set Bismut connection (arbitrary ambient extensions):
  // projection of the ambient value to the tangent bundle of sigma = 0
  VectorField submanifold_bismut(const VectorField& X, const VectorField& Y,
                                 const Connection& bis_sign) const;

  // closed form of the reduced minus-connection curvature:
  //   g~(R~(X,Y)Z, W) = R1(X+,Y+,Z-,W-)
  //     - (1/2) Omega_+^a(X+,Y+) d xi_a^-(Z-,W-)
  //     + T^{ab}[g(Z-, D_{Y+}V_a^-) g(W-, D_{X+}V_b^-) - (X <-> Y)],
  // with R1 the level-set curvature of the ambient minus connection and D the
  // level-set projected connection.
  RatFunc reduced_curvature_closed(const VectorField& WtX,
                                   const VectorField& WtY,
                                   const VectorField& WtZ,
                                   const VectorField& WtW,
                                   const Connection& bis_minus,
                                   const Curvature& R_minus) const;
  // direct second-covariant-derivative curvature of rho_-
  RatFunc reduced_curvature_direct(const VectorField& WtX,
                                   const VectorField& WtY,
                                   const VectorField& WtZ,
                                   const VectorField& WtW,
                                   const Connection& bis_minus) const;
};

ReductionSetup build_frames(const ExtendedAction& act, const GenMetric& gm,
                            bool validate = true);

// [pi]^* of a basic 1-form: xi - T^{ab} g^{-1}(xi, xi_a) (V_b + xi_b),
// the kernel-of-anchor representative in K^G (group case, no sigma).
GSection pullback_coform(const Form& xi, const ReductionSetup& rs);

}  // namespace gkr
