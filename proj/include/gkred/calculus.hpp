#pragma once

#include "gkred/gsection.hpp"

namespace gkr {

// Exterior derivative; d(d(w)) = 0.
Form ext_d(const Form& w);

// Interior product i_X w (antiderivation of degree -1).
Form interior(const VectorField& X, const Form& w);

// Cartan formula L_X = d i_X + i_X d.
Form lie_derivative(const VectorField& X, const Form& w);

// Lie bracket of vector fields.
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

// Lie derivative of a vector field (= bracket) and of a GSection via the
// untwisted Dorfman bracket with a plain vector field.
GSection lie_derivative(const VectorField& X, const GSection& s);

using Spinor = Form;

// Clifford action (X+xi).phi = i_X phi + xi ^ phi.
Spinor clifford(const GSection& s, const Spinor& phi);

// Decomposable bivector over GSections: sum of wedge pairs with a scalar
// weight, eps = sum_k w_k * (A_k ^ B_k).
struct Bivector {
  struct Piece {
    Scalar weight;
    GSection a, b;
  };
  std::vector<Piece> pieces;

  bool empty() const { return pieces.empty(); }
  // i_u eps with the full pairing: <u,A> B - <u,B> A per wedge pair.
  GSection interior(const GSection& u) const;
};

// One Clifford application of the bivector: each wedge pair acts as the
// antisymmetrized composition (A.(B.phi) - B.(A.phi))/2.
Spinor bivector_action(const Bivector& eps, const Spinor& phi);

// exp(-eps).phi as a terminating series; throws if the series fails to
// terminate within the degree bound (malformed eps).
Spinor exp_bivector_action(const Bivector& eps, const Spinor& phi);

}  // namespace gkr
