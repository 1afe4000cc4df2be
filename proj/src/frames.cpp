#include "gkred/frames.hpp"

namespace gkr {

std::vector<RatFunc> section_coords(const GSection& s) {
  const Chart* ch = s.chart();
  std::vector<RatFunc> c(2 * ch->dirs(), RatFunc::zero(ch->ctx()));
  for (int v = 0; v < ch->dirs(); ++v) {
    c[v] = s.vec[v];
    c[ch->dirs() + v] = s.form.get(Form::Mask(1) << v);
  }
  return c;
}

GSection section_from_coords(const Chart* ch, const std::vector<RatFunc>& c) {
  GSection s(ch);
  for (int v = 0; v < ch->dirs(); ++v) {
    s.vec[v] = c[v];
    s.form.set(Form::Mask(1) << v, c[ch->dirs() + v]);
  }
  return s;
}

std::vector<RatFunc> expand_in_frame(const GSection& s, const FrameBundle& F) {
  const Chart* ch = s.chart();
  const int dim = 2 * ch->dirs();
  Mat<RatFunc> A(dim, F.size());
  for (int j = 0; j < F.size(); ++j) {
    auto col = section_coords(F.secs[j]);
    for (int i = 0; i < dim; ++i) A(i, j) = col[i];
  }
  std::vector<RatFunc> b = section_coords(s);
  if (F.size() == dim) {
    // square: direct exact solve
    return ratfunc_solve(A, b);
  }
  std::vector<RatFunc> x;
  GKR_REQUIRE(ratfunc_solve_consistent(A, b, &x),
              "section not in the span of frame '" + F.label + "'");
  // exact residual check (solve_consistent already guarantees it, but the
  // reconstruction is cheap and is the contract)
  GSection rec(ch);
  for (int j = 0; j < F.size(); ++j) rec = rec + F.secs[j].scaled(x[j]);
  GKR_REQUIRE(rec == s, "frame expansion residual nonzero");
  return x;
}

GSection project_onto(const GSection& s, const FrameBundle& sub,
                      const FrameBundle& complement) {
  FrameBundle joint;
  joint.label = sub.label + "+" + complement.label;
  joint.secs = sub.secs;
  joint.secs.insert(joint.secs.end(), complement.secs.begin(),
                    complement.secs.end());
  auto c = expand_in_frame(s, joint);
  GSection proj(s.chart());
  for (int j = 0; j < sub.size(); ++j) proj = proj + sub.secs[j].scaled(c[j]);
  return proj;
}

double rank_certificate(const FrameBundle& F, const EvalPoint& p) {
  const Chart* ch = F.chart();
  const int dim = 2 * ch->dirs();
  GKR_REQUIRE(F.size() == dim, "rank certificate needs a full frame");
  // numeric determinant via partial-pivot elimination
  Mat<complex_d> M(dim, dim);
  for (int j = 0; j < F.size(); ++j) {
    auto col = section_coords(F.secs[j]);
    for (int i = 0; i < dim; ++i) M(i, j) = col[i].eval_c(p.xc);
  }
  complex_d det = 1.0;
  for (int k = 0; k < dim; ++k) {
    int piv = k;
    for (int r = k + 1; r < dim; ++r)
      if (std::abs(M(r, k)) > std::abs(M(piv, k))) piv = r;
    if (std::abs(M(piv, k)) == 0.0) return 0.0;
    if (piv != k) {
      for (int j = 0; j < dim; ++j) std::swap(M(piv, j), M(k, j));
      det = -det;
    }
    det *= M(k, k);
    for (int r = k + 1; r < dim; ++r) {
      complex_d f = M(r, k) / M(k, k);
      for (int j = k; j < dim; ++j) M(r, j) -= f * M(k, j);
    }
  }
  return std::abs(det);
}

bool is_isotropic(const FrameBundle& F) {
  for (int i = 0; i < F.size(); ++i)
    for (int j = i; j < F.size(); ++j)
      if (!pairing(F.secs[i], F.secs[j]).is_zero()) return false;
  return true;
}

bool is_orthogonal(const FrameBundle& A, const FrameBundle& B) {
  for (const auto& a : A.secs)
    for (const auto& b : B.secs)
      if (!pairing(a, b).is_zero()) return false;
  return true;
}

}  // namespace gkr
