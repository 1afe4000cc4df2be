#include "gkred/gsection.hpp"

#include "gkred/calculus.hpp"

namespace gkr {

std::string GSection::str() const {
  return vec.str() + "  +  " + form.str();
}

RatFunc pairing(const GSection& a, const GSection& b, PairingConvention conv) {
  RatFunc p = interior(b.vec, a.form).get(0) + interior(a.vec, b.form).get(0);
  if (conv == PairingConvention::half)
    p = p.scaled(Scalar(mpq_class(1, 2)));
  return p;
}

GSection courant_bracket(const GSection& a, const GSection& b, const Form& H) {
  VectorField xy = lie_bracket(a.vec, b.vec);
  Form f = lie_derivative(a.vec, b.form) - interior(b.vec, ext_d(a.form));
  if (!H.is_zero()) f = f + interior(b.vec, interior(a.vec, H));
  return {std::move(xy), std::move(f)};
}

GSection courant_bracket(const GSection& a, const GSection& b) {
  return courant_bracket(a, b, Form::zero(a.chart()));
}

GSection b_transform(const Form& B, const GSection& a) {
  GKR_REQUIRE(B.is_zero() || B.is_homogeneous_degree(2),
              "b_transform needs a 2-form");
  return {a.vec, a.form + interior(a.vec, B)};
}

}  // namespace gkr
