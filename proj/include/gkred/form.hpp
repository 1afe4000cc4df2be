#pragma once

#include <map>

#include "gkred/evalpoint.hpp"

namespace gkr {

// Chart of complex dimension n with the 2n real-analytic directions
// d/dz_0..d/dz_{n-1}, d/dzb_0..d/dzb_{n-1} and dual covectors dz_i, dzb_i.
// Basis index v matches the variable index of the VarContext.
struct Chart {
  VarContext vars;
  explicit Chart(int n) : vars(n) {}
  int n() const { return vars.n; }
  int dirs() const { return vars.nvars(); }
  const VarContext* ctx() const { return &vars; }
};

// Vector field with RatFunc components in the chart frame.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(const Chart* ch)
      : chart_(ch), comp_(ch->dirs(), RatFunc::zero(ch->ctx())) {}

  static VectorField basis(const Chart* ch, int v) {
    VectorField x(ch);
    x.comp_[v] = RatFunc::constant(ch->ctx(), Scalar(1));
    return x;
  }

  const Chart* chart() const { return chart_; }
  const RatFunc& operator[](int v) const { return comp_[v]; }
  RatFunc& operator[](int v) { return comp_[v]; }
  bool is_zero() const {
    for (const auto& c : comp_)
      if (!c.is_zero()) return false;
    return true;
  }

  VectorField operator-() const;
  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend bool operator==(const VectorField& a, const VectorField& b);
  VectorField scaled(const RatFunc& f) const;
  VectorField conj() const;

  // Acts as a derivation on functions.
  RatFunc apply(const RatFunc& f) const;

  std::string str() const;

 private:
  const Chart* chart_ = nullptr;
  std::vector<RatFunc> comp_;
};

// Differential form, possibly inhomogeneous (a spinor is exactly that).
// Components are indexed by bitmasks over the 2n covectors, each stored in
// ascending basis order.
class Form {
 public:
  using Mask = std::uint32_t;

  Form() = default;
  explicit Form(const Chart* ch) : chart_(ch) {}

  static Form zero(const Chart* ch) { return Form(ch); }
  static Form function(const Chart* ch, const RatFunc& f) {
    Form w(ch);
    w.set(0, f);
    return w;
  }
  static Form covector(const Chart* ch, int v) {
    Form w(ch);
    w.set(Mask(1) << v, RatFunc::constant(ch->ctx(), Scalar(1)));
    return w;
  }

  const Chart* chart() const { return chart_; }
  const std::map<Mask, RatFunc>& comps() const { return comp_; }
  bool is_zero() const { return comp_.empty(); }
  void set(Mask m, const RatFunc& f) {
    if (f.is_zero())
      comp_.erase(m);
    else
      comp_[m] = f;
  }
  RatFunc get(Mask m) const {
    auto it = comp_.find(m);
    return it == comp_.end() ? RatFunc::zero(chart_->ctx()) : it->second;
  }
  // Highest/lowest degrees present; -1 on the zero form.
  int max_degree() const;
  bool is_homogeneous_degree(int k) const;
  Form degree_part(int k) const;

  Form operator-() const;
  friend Form operator+(const Form& a, const Form& b);
  friend Form operator-(const Form& a, const Form& b);
  friend bool operator==(const Form& a, const Form& b) {
    return (a - b).is_zero();
  }
  Form scaled(const RatFunc& f) const;
  Form scaled(const Scalar& c) const;
  Form conj() const;

  friend Form wedge(const Form& a, const Form& b);

  // Evaluate a homogeneous piece on vector fields (degree = #args).
  RatFunc on(const std::vector<VectorField>& args) const;

  std::string str() const;

 private:
  const Chart* chart_ = nullptr;
  std::map<Mask, RatFunc> comp_;
};

int mask_degree(Form::Mask m);
// Sign of merging two disjoint ascending products (0 if masks overlap).
int wedge_sign(Form::Mask a, Form::Mask b);

}  // namespace gkr
