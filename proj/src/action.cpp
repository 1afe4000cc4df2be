#include "gkred/action.hpp"

namespace gkr {

std::vector<Form> metric_splitting_forms(const ExtendedAction& act,
                                         const GenMetric& gm) {
  std::vector<Form> out;
  out.reserve(act.V.size());
  for (int a = 0; a < act.group_size(); ++a)
    out.push_back(act.xi[a] - interior(act.V[a], gm.b()));
  return out;
}

namespace {

// (L_V g)_{ij} = V^k d_k g_ij + g_kj d_i V^k + g_ik d_j V^k
bool metric_invariant(const VectorField& V, const Mat<RatFunc>& g,
                      const Chart* ch) {
  const int d = ch->dirs();
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      RatFunc acc = RatFunc::zero(ch->ctx());
      for (int k = 0; k < d; ++k) {
        if (!V[k].is_zero()) acc += V[k] * g(i, j).partial(k);
        if (!g(k, j).is_zero()) acc += g(k, j) * V[k].partial(i);
        if (!g(i, k).is_zero()) acc += g(i, k) * V[k].partial(j);
      }
      if (!acc.is_zero()) return false;
    }
  return true;
}

}  // namespace

void validate_action(const ExtendedAction& act, const GenMetric& gm) {
  const Chart* ch = act.chart;
  GKR_REQUIRE(act.xi.size() == act.V.size(),
              "action: one form part per generator required");
  std::vector<Form> xim = metric_splitting_forms(act, gm);
  const Form& Hm = gm.metric_twist();

  for (int a = 0; a < act.group_size(); ++a) {
    for (int b = 0; b < act.group_size(); ++b) {
      Form iso = interior(act.V[a], xim[b]) + interior(act.V[b], xim[a]);
      GKR_REQUIRE(iso.is_zero(), "action: isotropy i_a xi_b + i_b xi_a != 0");
    }
    Form twist = interior(act.V[a], Hm) - ext_d(xim[a]);
    GKR_REQUIRE(twist.is_zero(), "action: i_a H_m != d xi_a");
    GKR_REQUIRE(metric_invariant(act.V[a], gm.g(), ch),
                "action: metric not invariant under generator");
    GKR_REQUIRE(lie_derivative(act.V[a], gm.b()).is_zero(),
                "action: b-field not invariant under generator");
    for (const Poly& s : act.sigma) {
      RatFunc tangent = act.V[a].apply(RatFunc(s));
      GKR_REQUIRE(tangent.is_zero(),
                  "action: generator not tangent to the sigma locus");
    }
    for (const Poly& m : act.mu) {
      RatFunc inv = act.V[a].apply(RatFunc(m));
      GKR_REQUIRE(inv.is_zero(), "action: moment map not invariant");
    }
  }

  for (int a = 0; a < act.group_size(); ++a)
    for (int b = 0; b < act.group_size(); ++b) {
      GSection sa{act.V[a], xim[a]}, sb{act.V[b], xim[b]};
      GSection got = courant_bracket(sa, sb, Hm);
      GSection want(ch);
      for (int c = 0; c < act.group_size(); ++c) {
        Scalar f = act.structure_const(a, b, c);
        if (!f.is_zero()) want = want + GSection{act.V[c], xim[c]}.scaled(f);
      }
      GKR_REQUIRE(got == want, "action: bracket-preservation fails");
    }
}

}  // namespace gkr
