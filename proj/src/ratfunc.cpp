#include "gkred/ratfunc.hpp"

namespace gkr {

namespace {

// Common monomial factor of all terms (elementwise minimum of exponents).
Mono monomial_content(const Poly& p) {
  if (p.is_zero()) return 0;
  const VarContext* ctx = p.ctx();
  int mins[8] = {255, 255, 255, 255, 255, 255, 255, 255};
  for (const auto& t : p.terms())
    for (int v = 0; v < ctx->nvars(); ++v)
      mins[v] = std::min(mins[v], mono_exp(t.mono, v));
  Mono m = 0;
  for (int v = 0; v < ctx->nvars(); ++v)
    if (mins[v]) m |= mono_var(v, mins[v]);
  return m;
}

Poly shift_down(const Poly& p, Mono m) {
  if (m == 0) return p;
  std::vector<Poly::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) terms.push_back({t.mono - m, t.coef});
  return Poly::from_terms(p.ctx(), std::move(terms));
}

}  // namespace

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(den_.ctx(), Scalar(1));
    return;
  }
  Mono mc_n = monomial_content(num_);
  Mono mc_d = monomial_content(den_);
  Mono common = 0;
  const VarContext* c = ctx();
  for (int v = 0; v < c->nvars(); ++v) {
    int e = std::min(mono_exp(mc_n, v), mono_exp(mc_d, v));
    if (e) common |= mono_var(v, e);
  }
  if (common) {
    num_ = shift_down(num_, common);
    den_ = shift_down(den_, common);
  }
  // short polynomial cancellation: equal num/den, or den divides num
  if (num_ == den_) {
    num_ = Poly(c, Scalar(1));
    den_ = Poly(c, Scalar(1));
  } else if (!den_.is_constant() && den_.terms().size() <= 16) {
    Poly q;
    if (num_.try_exact_div(den_, &q)) {
      num_ = q;
      den_ = Poly(c, Scalar(1));
    }
  }
  Scalar lead = den_.remove_content();
  num_ = num_.scaled(lead.inverse());
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero())
    return RatFunc::zero(a.ctx() ? a.ctx() : b.ctx());
  // cross-cancel cheap cases before multiplying
  if (a.num_ == b.den_) return RatFunc(b.num_, a.den_);
  if (b.num_ == a.den_) return RatFunc(a.num_, b.den_);
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  GKR_REQUIRE(!b.is_zero(), "division by zero rational function");
  if (a.is_zero()) return a;
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc operator*(const Scalar& c, const RatFunc& r) { return r.scaled(c); }

RatFunc RatFunc::partial(int v) const {
  if (den_.is_constant())
    return RatFunc(num_.partial(v), den_);
  return RatFunc(num_.partial(v) * den_ - num_ * den_.partial(v), den_ * den_);
}

complex_d RatFunc::eval_c(const std::vector<complex_d>& coords) const {
  return num_.eval_c(coords) / den_.eval_c(coords);
}

Scalar RatFunc::eval_exact(const std::vector<Scalar>& coords) const {
  Scalar d = den_.eval_exact(coords);
  GKR_REQUIRE(!d.is_zero(), "rational function pole at evaluation point");
  return num_.eval_exact(coords) / d;
}

std::string RatFunc::str() const {
  if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace gkr
