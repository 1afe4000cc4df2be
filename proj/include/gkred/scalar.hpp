#pragma once

#include <gmpxx.h>

#include <string>

#include "gkred/common.hpp"

namespace gkr {

// Exact Gaussian rational a + b*i.  All field operations are exact; there is
// no rounding anywhere in Scalar arithmetic.
struct Scalar {
  mpq_class re, im;

  Scalar() : re(0), im(0) {}
  Scalar(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& r) : re(r), im(0) {}  // NOLINT
  Scalar(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar of(long num, long den) { return Scalar(mpq_class(num, den)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_real() const { return im == 0; }

  Scalar conj() const { return Scalar(re, -im); }

  Scalar operator-() const { return Scalar(-re, -im); }
  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    mpq_class r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    GKR_REQUIRE(!o.is_zero(), "Scalar division by zero");
    mpq_class n = o.re * o.re + o.im * o.im;
    mpq_class r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = r;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const {
    Scalar one(1);
    return one / *this;
  }

  complex_d to_complex() const { return {re.get_d(), im.get_d()}; }

  // Canonical text form, explicit `i` for the imaginary unit.
  std::string str() const;
};

// Parses "a/b", "a", "a/b*i", "a+b*i", "a/b-c/d*i" style literals.
Scalar parse_scalar(const std::string& text);

double abs2_d(const Scalar& s);

}  // namespace gkr
