#pragma once

#include <array>
#include <vector>

#include "gkred/linalg.hpp"

namespace gkr {

// Evaluation point for a chart.  Carries exact Gaussian-rational coordinates
// (when available) and their double-precision mirror.  Conjugate-consistent
// points put zb_i = conj(z_i); generic points may not (they live on the
// complexified chart and are used for identity spot checks).
struct EvalPoint {
  const VarContext* ctx = nullptr;
  bool exact = false;
  std::vector<Scalar> xq;      // exact coordinates, size 2n (when exact)
  std::vector<complex_d> xc;   // double coordinates, size 2n
  double tol = 1e-9;

  static EvalPoint from_exact(const VarContext* ctx,
                              const std::vector<Scalar>& z_coords);
  static EvalPoint from_exact_full(const VarContext* ctx,
                                   const std::vector<Scalar>& all_coords);
  static EvalPoint from_complex(const VarContext* ctx,
                                const std::vector<complex_d>& z_coords);
};

// Truncated Taylor expansion (order <= 2) of a quantity at a point, over an
// abstract coefficient field K.  Derivatives are taken with respect to the
// 2n chart variables treated as independent directions.  ord records how many
// derivative levels are trustworthy; arithmetic propagates the minimum.
template <class K>
struct Jet {
  int nv = 0;
  int ord = 2;
  K v{};
  std::vector<K> d1;   // size nv
  std::vector<K> d2;   // packed upper triangle, size nv*(nv+1)/2

  Jet() = default;
  Jet(int nvars, int order) : nv(nvars), ord(order), v() {
    if (ord >= 1) d1.assign(nv, K());
    if (ord >= 2) d2.assign(nv * (nv + 1) / 2, K());
  }
  static Jet constant(int nvars, int order, const K& c) {
    Jet j(nvars, order);
    j.v = c;
    return j;
  }
  int idx2(int a, int b) const {
    if (a > b) std::swap(a, b);
    return a * nv - a * (a - 1) / 2 + (b - a);
  }
  const K& D1(int a) const { return d1[a]; }
  const K& D2(int a, int b) const { return d2[idx2(a, b)]; }

  Jet operator-() const {
    Jet r = *this;
    r.v = K() - r.v;
    for (auto& x : r.d1) x = K() - x;
    for (auto& x : r.d2) x = K() - x;
    return r;
  }
  friend Jet operator+(const Jet& a, const Jet& b) {
    Jet r(a.nv, std::min(a.ord, b.ord));
    r.v = a.v + b.v;
    for (int i = 0; i < (int)r.d1.size(); ++i) r.d1[i] = a.d1[i] + b.d1[i];
    for (int i = 0; i < (int)r.d2.size(); ++i) r.d2[i] = a.d2[i] + b.d2[i];
    return r;
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    Jet r(a.nv, std::min(a.ord, b.ord));
    r.v = a.v - b.v;
    for (int i = 0; i < (int)r.d1.size(); ++i) r.d1[i] = a.d1[i] - b.d1[i];
    for (int i = 0; i < (int)r.d2.size(); ++i) r.d2[i] = a.d2[i] - b.d2[i];
    return r;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r(a.nv, std::min(a.ord, b.ord));
    r.v = a.v * b.v;
    if (r.ord >= 1)
      for (int i = 0; i < r.nv; ++i)
        r.d1[i] = a.d1[i] * b.v + a.v * b.d1[i];
    if (r.ord >= 2)
      for (int i = 0; i < r.nv; ++i)
        for (int j = i; j < r.nv; ++j)
          r.d2[r.idx2(i, j)] = a.D2(i, j) * b.v + a.v * b.D2(i, j) +
                               a.d1[i] * b.d1[j] + a.d1[j] * b.d1[i];
    return r;
  }
  friend Jet operator/(const Jet& a, const Jet& b) { return a * b.reciprocal(); }

  Jet reciprocal() const {
    Jet r(nv, ord);
    K inv = K(1) / v;
    r.v = inv;
    K inv2 = inv * inv;
    if (ord >= 1)
      for (int i = 0; i < nv; ++i) r.d1[i] = K() - d1[i] * inv2;
    if (ord >= 2) {
      K inv3 = inv2 * inv;
      K two(2);
      for (int i = 0; i < nv; ++i)
        for (int j = i; j < nv; ++j)
          r.d2[idx2(i, j)] =
              two * d1[i] * d1[j] * inv3 - D2(i, j) * inv2;
    }
    return r;
  }

  // Directional/partial derivative as a lower-order jet.
  Jet partial(int a) const {
    GKR_REQUIRE(ord >= 1, "jet order exhausted");
    Jet r(nv, ord - 1);
    r.v = d1[a];
    if (r.ord >= 1)
      for (int i = 0; i < nv; ++i) r.d1[i] = D2(a, i);
    return r;
  }
  Jet truncated(int order) const {
    Jet r(nv, std::min(ord, order));
    r.v = v;
    if (r.ord >= 1) r.d1 = d1;
    if (r.ord >= 2) r.d2 = d2;
    return r;
  }
};

// Field adapters used by templated point computations.
struct ExactField {
  using K = Scalar;
  static K from_scalar(const Scalar& s) { return s; }
  static K coord(const EvalPoint& p, int v) { return p.xq[v]; }
  static bool is_zero(const K& k) { return k.is_zero(); }
  static double abs(const K& k) { return std::sqrt(abs2_d(k)); }
};
struct DoubleField {
  using K = complex_d;
  static K from_scalar(const Scalar& s) { return s.to_complex(); }
  static K coord(const EvalPoint& p, int v) { return p.xc[v]; }
  static bool is_zero(const K& k) { return std::abs(k) < 1e-300; }
  static double abs(const K& k) { return std::abs(k); }
};

template <class F>
Jet<typename F::K> jet_eval(const Poly& p, const EvalPoint& pt, int order);

template <class F>
Jet<typename F::K> jet_eval(const RatFunc& r, const EvalPoint& pt, int order);

extern template Jet<Scalar> jet_eval<ExactField>(const Poly&, const EvalPoint&,
                                                 int);
extern template Jet<complex_d> jet_eval<DoubleField>(const Poly&,
                                                     const EvalPoint&, int);
extern template Jet<Scalar> jet_eval<ExactField>(const RatFunc&,
                                                 const EvalPoint&, int);
extern template Jet<complex_d> jet_eval<DoubleField>(const RatFunc&,
                                                     const EvalPoint&, int);

}  // namespace gkr
