#include "gkred/form.hpp"

#include <bit>
#include <functional>
#include <sstream>

namespace gkr {

VectorField VectorField::operator-() const {
  VectorField r(chart_);
  for (int v = 0; v < chart_->dirs(); ++v) r.comp_[v] = -comp_[v];
  return r;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  VectorField r(a.chart_);
  for (int v = 0; v < a.chart_->dirs(); ++v) r.comp_[v] = a.comp_[v] + b.comp_[v];
  return r;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  VectorField r(a.chart_);
  for (int v = 0; v < a.chart_->dirs(); ++v) r.comp_[v] = a.comp_[v] - b.comp_[v];
  return r;
}

bool operator==(const VectorField& a, const VectorField& b) {
  for (int v = 0; v < a.chart_->dirs(); ++v)
    if (a.comp_[v] != b.comp_[v]) return false;
  return true;
}

VectorField VectorField::scaled(const RatFunc& f) const {
  VectorField r(chart_);
  for (int v = 0; v < chart_->dirs(); ++v) r.comp_[v] = comp_[v] * f;
  return r;
}

VectorField VectorField::conj() const {
  VectorField r(chart_);
  const VarContext* c = chart_->ctx();
  for (int v = 0; v < chart_->dirs(); ++v)
    r.comp_[c->conj_var(v)] = comp_[v].conj();
  return r;
}

RatFunc VectorField::apply(const RatFunc& f) const {
  RatFunc acc = RatFunc::zero(chart_->ctx());
  for (int v = 0; v < chart_->dirs(); ++v)
    if (!comp_[v].is_zero()) acc += comp_[v] * f.partial(v);
  return acc;
}

std::string VectorField::str() const {
  std::ostringstream os;
  bool first = true;
  for (int v = 0; v < chart_->dirs(); ++v) {
    if (comp_[v].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << comp_[v].str() << ")*D" << chart_->ctx()->var_name(v);
  }
  return first ? "0" : os.str();
}

int mask_degree(Form::Mask m) { return std::popcount(m); }

int wedge_sign(Form::Mask a, Form::Mask b) {
  if (a & b) return 0;
  int sign = 1;
  // for each generator in b, count generators of a above it
  for (Form::Mask x = b; x;) {
    int v = std::countr_zero(x);
    x &= x - 1;
    int above = std::popcount(a >> (v + 1));
    if (above & 1) sign = -sign;
  }
  return sign;
}

int Form::max_degree() const {
  int d = -1;
  for (const auto& kv : comp_) d = std::max(d, mask_degree(kv.first));
  return d;
}

bool Form::is_homogeneous_degree(int k) const {
  for (const auto& kv : comp_)
    if (mask_degree(kv.first) != k) return false;
  return true;
}

Form Form::degree_part(int k) const {
  Form r(chart_);
  for (const auto& kv : comp_)
    if (mask_degree(kv.first) == k) r.comp_[kv.first] = kv.second;
  return r;
}

Form Form::operator-() const {
  Form r(chart_);
  for (const auto& kv : comp_) r.comp_[kv.first] = -kv.second;
  return r;
}

Form operator+(const Form& a, const Form& b) {
  Form r(a.chart_ ? a.chart_ : b.chart_);
  r.comp_ = a.comp_;
  for (const auto& kv : b.comp_) {
    auto it = r.comp_.find(kv.first);
    if (it == r.comp_.end())
      r.comp_[kv.first] = kv.second;
    else {
      it->second += kv.second;
      if (it->second.is_zero()) r.comp_.erase(it);
    }
  }
  return r;
}

Form operator-(const Form& a, const Form& b) { return a + (-b); }

Form Form::scaled(const RatFunc& f) const {
  Form r(chart_);
  if (f.is_zero()) return r;
  for (const auto& kv : comp_) r.comp_[kv.first] = kv.second * f;
  return r;
}

Form Form::scaled(const Scalar& c) const {
  Form r(chart_);
  if (c.is_zero()) return r;
  for (const auto& kv : comp_) r.comp_[kv.first] = kv.second.scaled(c);
  return r;
}

Form Form::conj() const {
  Form r(chart_);
  const VarContext* c = chart_->ctx();
  const int n = c->n;
  for (const auto& kv : comp_) {
    // image mask: swap dz_i <-> dzb_i, then re-sort; parity from inversions
    Mask low = kv.first & ((Mask(1) << n) - 1);
    Mask high = kv.first >> n;
    Mask img = (low << n) | high;
    // parity of the permutation sending ascending original generators to
    // their images: count inversions among image positions
    int vs[8], k = 0;
    for (Mask x = kv.first; x;) {
      int v = std::countr_zero(x);
      x &= x - 1;
      vs[k++] = c->conj_var(v);
    }
    int inv = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (vs[i] > vs[j]) ++inv;
    RatFunc coef = kv.second.conj();
    if (inv & 1) coef = -coef;
    auto it = r.comp_.find(img);
    if (it == r.comp_.end())
      r.comp_[img] = coef;
    else
      it->second += coef;
  }
  // clean zeros
  for (auto it = r.comp_.begin(); it != r.comp_.end();)
    it = it->second.is_zero() ? r.comp_.erase(it) : std::next(it);
  return r;
}

Form wedge(const Form& a, const Form& b) {
  Form r(a.chart_ ? a.chart_ : b.chart_);
  for (const auto& ka : a.comp_)
    for (const auto& kb : b.comp_) {
      int s = wedge_sign(ka.first, kb.first);
      if (!s) continue;
      RatFunc c = ka.second * kb.second;
      if (s < 0) c = -c;
      Form::Mask m = ka.first | kb.first;
      auto it = r.comp_.find(m);
      if (it == r.comp_.end())
        r.comp_[m] = c;
      else {
        it->second += c;
        if (it->second.is_zero()) r.comp_.erase(it);
      }
    }
  return r;
}

RatFunc Form::on(const std::vector<VectorField>& args) const {
  const int k = (int)args.size();
  RatFunc acc = RatFunc::zero(chart_->ctx());
  for (const auto& kv : comp_) {
    if (mask_degree(kv.first) != k) continue;
    int vs[8], m = 0;
    for (Mask x = kv.first; x;) {
      int v = std::countr_zero(x);
      x &= x - 1;
      vs[m++] = v;
    }
    // det of the k x k matrix args[i][vs[j]]
    int perm[8];
    for (int i = 0; i < k; ++i) perm[i] = i;
    RatFunc det = RatFunc::zero(chart_->ctx());
    // Leibniz over permutations (k <= 4 in practice)
    std::function<void(int, int)> rec = [&](int depth, int sign) {
      if (depth == k) {
        RatFunc prod = RatFunc::constant(chart_->ctx(), Scalar(sign));
        for (int i = 0; i < k; ++i) prod *= args[i][vs[perm[i]]];
        det += prod;
        return;
      }
      for (int i = depth; i < k; ++i) {
        std::swap(perm[depth], perm[i]);
        rec(depth + 1, i == depth ? sign : -sign);
        std::swap(perm[depth], perm[i]);
      }
    };
    rec(0, 1);
    acc += kv.second * det;
  }
  return acc;
}

std::string Form::str() const {
  if (comp_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& kv : comp_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << kv.second.str() << ")";
    for (Mask x = kv.first; x;) {
      int v = std::countr_zero(x);
      x &= x - 1;
      os << "*d" << chart_->ctx()->var_name(v);
    }
  }
  return os.str();
}

}  // namespace gkr
