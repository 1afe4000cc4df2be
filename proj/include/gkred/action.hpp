#pragma once

#include "gkred/genmetric.hpp"

namespace gkr {

// Extended group action data in the ambient splitting: generators V_a with
// 1-form parts xi_a, structure constants, an optional moment map, and
// optional submanifold defining functions.  Reduction code converts the form
// parts to the metric splitting internally (xi_a - i_{V_a} b).
struct ExtendedAction {
  const Chart* chart = nullptr;
  std::vector<VectorField> V;
  std::vector<Form> xi;                 // degree-1; same length as V
  // f[a][b][c]: [e_a, e_b] = f_{ab}^c e_c; empty means abelian
  std::vector<std::vector<std::vector<Scalar>>> fabc;
  std::vector<Poly> mu;                 // moment map components
  std::vector<Poly> sigma;              // submanifold defining functions

  int group_size() const { return (int)V.size(); }
  Scalar structure_const(int a, int b, int c) const {
    if (fabc.empty()) return Scalar(0);
    return fabc[a][b][c];
  }
};

// Exact validation of the action against a generalized metric:
//   isotropy       i_a xi_b^m + i_b xi_a^m = 0,
//   twist relation i_a H_m = d xi_a^m,
//   brackets       [V_a + xi_a^m, V_b + xi_b^m]_{H_m} = f_ab^c (V_c + xi_c^m),
//   invariance     L_{V_a} g = 0, L_{V_a} b = 0,
//   tangency       d sigma(V_a) = 0,
// where xi^m = xi - i_V b is the metric-splitting form part.
// Throws with a descriptive message on the first violated identity.
void validate_action(const ExtendedAction& act, const GenMetric& gm);

// Metric-splitting form parts.
std::vector<Form> metric_splitting_forms(const ExtendedAction& act,
                                         const GenMetric& gm);

}  // namespace gkr
