#pragma once

#include "gkred/form.hpp"

namespace gkr {

// Pairing convention switch.  The default follows <X+xi, Y+eta> = xi(Y) +
// eta(X) (no 1/2); `half` is the other common normalization.  The Clifford
// module relation s.s.phi = <s,s>.phi holds with the `half` convention, since
// the spinor action is the plain interior-product/wedge one.
enum class PairingConvention { full, half };

// Section of TM + T*M: a vector field plus a 1-form.
struct GSection {
  VectorField vec;
  Form form;  // degree-1 part only

  GSection() = default;
  explicit GSection(const Chart* ch) : vec(ch), form(ch) {}
  GSection(VectorField v, Form f) : vec(std::move(v)), form(std::move(f)) {
    GKR_REQUIRE(form.is_zero() || form.is_homogeneous_degree(1),
                "GSection form part must have degree 1");
  }
  const Chart* chart() const { return vec.chart(); }

  GSection operator-() const { return {-vec, -form}; }
  friend GSection operator+(const GSection& a, const GSection& b) {
    return {a.vec + b.vec, a.form + b.form};
  }
  friend GSection operator-(const GSection& a, const GSection& b) {
    return {a.vec - b.vec, a.form - b.form};
  }
  friend bool operator==(const GSection& a, const GSection& b) {
    return a.vec == b.vec && a.form == b.form;
  }
  GSection scaled(const RatFunc& f) const {
    return {vec.scaled(f), form.scaled(f)};
  }
  GSection scaled(const Scalar& c) const {
    return {vec.scaled(RatFunc::constant(chart()->ctx(), c)),
            form.scaled(c)};
  }
  GSection conj() const { return {vec.conj(), form.conj()}; }
  bool is_zero() const { return vec.is_zero() && form.is_zero(); }

  std::string str() const;
};

RatFunc pairing(const GSection& a, const GSection& b,
                PairingConvention conv = PairingConvention::full);

// H-twisted (Dorfman-type) bracket
//   [X+xi, Y+eta]_H = [X,Y] + L_X eta - i_Y d xi + i_Y i_X H.
GSection courant_bracket(const GSection& a, const GSection& b, const Form& H);
GSection courant_bracket(const GSection& a, const GSection& b);

// e^B (X+xi) = X + xi + i_X B.
GSection b_transform(const Form& B, const GSection& a);

}  // namespace gkr
