#include "gkred/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace gkr {

int VarContext::var_index(const std::string& name) const {
  for (int v = 0; v < nvars(); ++v)
    if (var_name(v) == name) return v;
  return -1;
}

bool Poly::is_homogeneous(int* deg) const {
  if (terms_.empty()) {
    if (deg) *deg = 0;
    return true;
  }
  int d = mono_deg(terms_.front().mono);
  for (const Term& t : terms_)
    if (mono_deg(t.mono) != d) return false;
  if (deg) *deg = d;
  return true;
}

Poly Poly::from_terms(const VarContext* ctx, std::vector<Term> terms) {
  Poly p(ctx);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex_less(b.mono, a.mono); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coef += t.coef;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
  }
  terms_ = std::move(out);
}

Poly Poly::add(const Poly& a, const Poly& b, int sign) {
  const VarContext* ctx = a.ctx_ ? a.ctx_ : b.ctx_;
  GKR_REQUIRE(!a.ctx_ || !b.ctx_ || a.ctx_ == b.ctx_,
              "polynomial variable-context mismatch");
  Poly r(ctx);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    bool take_a;
    if (i == a.terms_.size())
      take_a = false;
    else if (j == b.terms_.size())
      take_a = true;
    else if (a.terms_[i].mono == b.terms_[j].mono) {
      Scalar c = sign > 0 ? a.terms_[i].coef + b.terms_[j].coef
                          : a.terms_[i].coef - b.terms_[j].coef;
      if (!c.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
      ++i, ++j;
      continue;
    } else
      take_a = grlex_less(b.terms_[j].mono, a.terms_[i].mono);
    if (take_a) {
      r.terms_.push_back(a.terms_[i]);
      ++i;
    } else {
      r.terms_.push_back({b.terms_[j].mono, sign > 0 ? b.terms_[j].coef
                                                     : -b.terms_[j].coef});
      ++j;
    }
  }
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  const VarContext* ctx = a.ctx_ ? a.ctx_ : b.ctx_;
  GKR_REQUIRE(!a.ctx_ || !b.ctx_ || a.ctx_ == b.ctx_,
              "polynomial variable-context mismatch");
  if (a.is_zero() || b.is_zero()) return Poly(ctx);
  std::unordered_map<Mono, Scalar> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      Mono m = mono_mul(ta.mono, tb.mono);
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(m, ta.coef * tb.coef);
      else
        it->second += ta.coef * tb.coef;
    }
  std::vector<Poly::Term> terms;
  terms.reserve(acc.size());
  for (auto& kv : acc)
    if (!kv.second.is_zero()) terms.push_back({kv.first, std::move(kv.second)});
  return Poly::from_terms(ctx, std::move(terms));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono ||
        a.terms_[i].coef != b.terms_[i].coef)
      return false;
  return true;
}

Poly Poly::operator-() const {
  Poly r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono, -t.coef});
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  if (c.is_zero()) return Poly(ctx_);
  Poly r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono, t.coef * c});
  return r;
}

Poly operator*(const Scalar& c, const Poly& p) { return p.scaled(c); }

Poly Poly::conj() const {
  GKR_REQUIRE(ctx_, "conjugation needs a variable context");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) {
    Mono m = 0;
    for (int v = 0; v < ctx_->nvars(); ++v) {
      int e = mono_exp(t.mono, v);
      if (e) m |= mono_var(ctx_->conj_var(v), e);
    }
    terms.push_back({m, t.coef.conj()});
  }
  return from_terms(ctx_, std::move(terms));
}

Poly Poly::partial(int v) const {
  GKR_REQUIRE(ctx_ && v >= 0 && v < ctx_->nvars(), "unknown variable");
  std::vector<Term> terms;
  for (const Term& t : terms_) {
    int e = mono_exp(t.mono, v);
    if (e == 0) continue;
    Mono m = t.mono - mono_var(v, 1);
    terms.push_back({m, t.coef * Scalar(e)});
  }
  return from_terms(ctx_, std::move(terms));
}

bool Poly::try_exact_div(const Poly& d, Poly* q) const {
  GKR_REQUIRE(!d.is_zero(), "division by the zero polynomial");
  Poly r = *this;
  Poly quot(ctx_);
  const Mono dm = d.leading().mono;
  const Scalar dc = d.leading().coef;
  while (!r.is_zero()) {
    Mono rm = r.leading().mono;
    // check divisibility of leading monomials
    Mono qm = 0;
    bool ok = true;
    for (int v = 0; v < ctx_->nvars(); ++v) {
      int e = mono_exp(rm, v) - mono_exp(dm, v);
      if (e < 0) {
        ok = false;
        break;
      }
      if (e) qm |= mono_var(v, e);
    }
    if (!ok) return false;
    Scalar qc = r.leading().coef / dc;
    Poly qt(ctx_);
    qt.terms_.push_back({qm, qc});
    quot += qt;
    r -= qt * d;
  }
  *q = quot;
  return true;
}

Poly Poly::exact_div(const Poly& d) const {
  Poly q;
  GKR_REQUIRE(try_exact_div(d, &q), "inexact polynomial division");
  return q;
}

Scalar Poly::remove_content() {
  if (terms_.empty()) return Scalar(1);
  // Use the leading coefficient: cheap, makes the polynomial monic-leading.
  Scalar c = terms_.front().coef;
  if (c.is_one()) return c;
  for (Term& t : terms_) t.coef /= c;
  return c;
}

complex_d Poly::eval_c(const std::vector<complex_d>& coords) const {
  GKR_REQUIRE((int)coords.size() == ctx_->nvars(), "coordinate count mismatch");
  complex_d acc = 0;
  for (const Term& t : terms_) {
    complex_d m = t.coef.to_complex();
    for (int v = 0; v < ctx_->nvars(); ++v)
      for (int e = mono_exp(t.mono, v); e > 0; --e) m *= coords[v];
    acc += m;
  }
  return acc;
}

Scalar Poly::eval_exact(const std::vector<Scalar>& coords) const {
  GKR_REQUIRE((int)coords.size() == ctx_->nvars(), "coordinate count mismatch");
  Scalar acc(0);
  for (const Term& t : terms_) {
    Scalar m = t.coef;
    for (int v = 0; v < ctx_->nvars(); ++v)
      for (int e = mono_exp(t.mono, v); e > 0; --e) m *= coords[v];
    acc += m;
  }
  return acc;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    std::string c = t.coef.str();
    bool neg = false;
    if (c.size() > 1 && c[0] == '-' && c.find('+') == std::string::npos &&
        c.rfind('-') == 0) {
      neg = true;
      c = c.substr(1);
    }
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    std::string mono;
    for (int v = 0; v < ctx_->nvars(); ++v) {
      int e = mono_exp(t.mono, v);
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx_->var_name(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    bool trivial_coef = (c == "1") && !mono.empty();
    bool needs_parens = c.find('+') != std::string::npos ||
                        c.find('-') != std::string::npos;
    if (!trivial_coef) {
      if (needs_parens)
        os << "(" << c << ")";
      else
        os << c;
    }
    if (!mono.empty()) {
      if (!trivial_coef) os << "*";
      os << mono;
    }
  }
  return os.str();
}

}  // namespace gkr
