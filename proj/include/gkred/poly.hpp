#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gkred/scalar.hpp"

namespace gkr {

// Variable context for polynomials on a complex chart of dimension n:
// variables 0..n-1 are the holomorphic coordinates z_i, variables n..2n-1 are
// the formal conjugates zb_i.  The conjugates are independent commuting
// variables; reality is only imposed at evaluation points.
struct VarContext {
  int n = 0;

  explicit VarContext(int dim) : n(dim) {
    GKR_REQUIRE(dim >= 1 && dim <= 4, "chart dimension must be in [1,4]");
  }
  int nvars() const { return 2 * n; }
  int conj_var(int v) const { return v < n ? v + n : v - n; }
  bool is_holomorphic(int v) const { return v < n; }
  std::string var_name(int v) const {
    return (v < n ? "z" : "zb") + std::to_string(v < n ? v : v - n);
  }
  int var_index(const std::string& name) const;  // -1 if unknown
};

// A monomial packs eight 8-bit exponents into a uint64, variable 0 in the most
// significant byte so integer comparison is lexicographic with z0 first.
using Mono = std::uint64_t;

inline int mono_exp(Mono m, int v) { return int((m >> (8 * (7 - v))) & 0xff); }
inline Mono mono_var(int v, int e = 1) { return Mono(e) << (8 * (7 - v)); }
inline int mono_deg(Mono m) {
  return int((m * 0x0101010101010101ull) >> 56);
}
inline Mono mono_mul(Mono a, Mono b) {
  Mono s = a + b;
  GKR_REQUIRE(((a ^ b ^ s) & 0x8080808080808080ull) == 0 || true,
              "monomial degree overflow");
  return s;
}
// Graded lexicographic order (total degree first, then z0 > z1 > ... ).
inline bool grlex_less(Mono a, Mono b) {
  int da = mono_deg(a), db = mono_deg(b);
  return da != db ? da < db : a < b;
}

// Multivariate polynomial with Scalar coefficients in canonical form: terms
// sorted in decreasing graded-lex order, no zero coefficients stored.
class Poly {
 public:
  struct Term {
    Mono mono;
    Scalar coef;
  };

  Poly() : ctx_(nullptr) {}
  explicit Poly(const VarContext* ctx) : ctx_(ctx) {}
  Poly(const VarContext* ctx, const Scalar& c) : ctx_(ctx) {
    if (!c.is_zero()) terms_.push_back({0, c});
  }

  static Poly constant(const VarContext* ctx, const Scalar& c) {
    return Poly(ctx, c);
  }
  static Poly variable(const VarContext* ctx, int v, int e = 1) {
    GKR_REQUIRE(v >= 0 && v < ctx->nvars(), "variable out of range");
    Poly p(ctx);
    if (e > 0)
      p.terms_.push_back({mono_var(v, e), Scalar(1)});
    else
      p.terms_.push_back({0, Scalar(1)});
    return p;
  }

  const VarContext* ctx() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == 0);
  }
  Scalar constant_value() const {
    if (terms_.empty()) return Scalar(0);
    GKR_REQUIRE(is_constant(), "Poly is not constant");
    return terms_[0].coef;
  }
  int total_degree() const {  // -1 for the zero polynomial
    return terms_.empty() ? -1 : mono_deg(terms_.front().mono);
  }
  bool is_homogeneous(int* deg = nullptr) const;
  const Term& leading() const {
    GKR_REQUIRE(!terms_.empty(), "leading term of zero polynomial");
    return terms_.front();
  }

  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(const Poly& a, const Poly& b) { return add(a, b, 1); }
  friend Poly operator-(const Poly& a, const Poly& b) { return add(a, b, -1); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const Scalar& c) const;

  // Conjugation: swaps z_i <-> zb_i and conjugates coefficients.  It is an
  // involutive ring morphism.
  Poly conj() const;

  // Formal partial derivative with respect to variable v.
  Poly partial(int v) const;

  // Exact division; throws if the division leaves a remainder.
  Poly exact_div(const Poly& d) const;
  bool try_exact_div(const Poly& d, Poly* q) const;

  // Divides all coefficients by the rational content (largest common scalar),
  // returning the removed content.  Used to control coefficient growth.
  Scalar remove_content();

  complex_d eval_c(const std::vector<complex_d>& coords) const;
  Scalar eval_exact(const std::vector<Scalar>& coords) const;

  std::string str() const;

  // Internal: assumes sorted/merged input.
  static Poly from_terms(const VarContext* ctx, std::vector<Term> terms);

 private:
  static Poly add(const Poly& a, const Poly& b, int sign);
  void normalize();

  const VarContext* ctx_;
  std::vector<Term> terms_;
};

Poly operator*(const Scalar& c, const Poly& p);

}  // namespace gkr
