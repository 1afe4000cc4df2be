#pragma once

#include "gkred/form.hpp"
#include "gkred/rng.hpp"

namespace gkr {

// Exact Gaussian-rational point on the unit sphere sum |z_i|^2 = 1: a seeded
// Gaussian direction is rationalized through stereographic projection, which
// lands exactly on the sphere.  Residuals of on-sphere identities can then be
// reported as exact rationals instead of floating error.
EvalPoint sphere_point(const VarContext* ctx, Rng& rng, int den_bits = 16);

// Exact random point in a box away from nothing in particular; conjugate
// consistent (zb = conj z).
EvalPoint box_point(const VarContext* ctx, Rng& rng, int mag = 4);

// Random polynomial with terms of total degree <= deg.
Poly random_poly(const VarContext* ctx, Rng& rng, int deg, int nterms,
                 int mag = 4);

// Random polynomial in the holomorphic variables only.
Poly random_holomorphic_poly(const VarContext* ctx, Rng& rng, int deg,
                             int nterms, int mag = 4);

// Conjugation-real random vector field (X = conj X) with polynomial
// coefficients of degree <= deg.
VectorField random_real_field(const Chart* ch, Rng& rng, int deg, int nterms,
                              int mag = 3);

// Random k-form with polynomial coefficients.
Form random_form(const Chart* ch, Rng& rng, int degree, int poly_deg,
                 int nterms, int mag = 3);

}  // namespace gkr
