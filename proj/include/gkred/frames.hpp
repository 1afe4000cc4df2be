#pragma once

#include "gkred/calculus.hpp"

namespace gkr {

// A list of GSections spanning a subbundle of TM + T*M.
struct FrameBundle {
  std::vector<GSection> secs;
  std::string label;

  FrameBundle() = default;
  FrameBundle(std::vector<GSection> s, std::string lab)
      : secs(std::move(s)), label(std::move(lab)) {}
  int size() const { return (int)secs.size(); }
  const Chart* chart() const { return secs.at(0).chart(); }
};

// Coordinate vector of a GSection in the 4n chart basis (tangent then form).
std::vector<RatFunc> section_coords(const GSection& s);
GSection section_from_coords(const Chart* ch, const std::vector<RatFunc>& c);

// Exact expansion s = sum_i c_i F_i.  Throws if s does not lie in the exact
// span of the frame (residual reported).
std::vector<RatFunc> expand_in_frame(const GSection& s, const FrameBundle& F);

// Splits s = proj + rest with proj in span(sub) and rest in span(complement);
// throws if sub + complement do not span s exactly.
GSection project_onto(const GSection& s, const FrameBundle& sub,
                      const FrameBundle& complement);

// Numeric generic-rank certificate: |det| of the transition matrix at a point
// (frame must be square in the 4n coordinates).  Exact determinant when the
// frame has constant coefficients.
double rank_certificate(const FrameBundle& F, const EvalPoint& p);

// Exact isotropy check: every pairwise pairing vanishes identically.
bool is_isotropic(const FrameBundle& F);

// Exact orthogonality between two frames.
bool is_orthogonal(const FrameBundle& A, const FrameBundle& B);

}  // namespace gkr
