#pragma once

#include "gkred/poly.hpp"

namespace gkr {

// Rational function num/den over the polynomial ring.  Equality is decided by
// exact cross-multiplication; no multivariate gcd normalization is attempted
// beyond scalar and monomial content removal.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    GKR_REQUIRE(!den_.is_zero(), "rational function with zero denominator");
    normalize();
  }
  RatFunc(const Poly& num)  // NOLINT(google-explicit-constructor)
      : num_(num), den_(Poly(num.ctx(), Scalar(1))) {}

  static RatFunc zero(const VarContext* ctx) { return RatFunc(Poly(ctx)); }
  static RatFunc constant(const VarContext* ctx, const Scalar& c) {
    return RatFunc(Poly::constant(ctx, c));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const VarContext* ctx() const { return num_.ctx() ? num_.ctx() : den_.ctx(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  Poly as_poly() const {
    GKR_REQUIRE(den_.is_constant(), "rational function is not polynomial");
    return num_.scaled(den_.constant_value().inverse());
  }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) {
    return !(a == b);
  }

  RatFunc inverse() const {
    GKR_REQUIRE(!is_zero(), "inverse of zero rational function");
    return RatFunc(den_, num_);
  }
  RatFunc conj() const { return RatFunc(num_.conj(), den_.conj()); }
  RatFunc partial(int v) const;  // quotient rule
  RatFunc scaled(const Scalar& c) const { return RatFunc(num_.scaled(c), den_); }

  complex_d eval_c(const std::vector<complex_d>& coords) const;
  Scalar eval_exact(const std::vector<Scalar>& coords) const;

  std::string str() const;

 private:
  void normalize();

  Poly num_, den_;
};

RatFunc operator*(const Scalar& c, const RatFunc& r);

}  // namespace gkr
