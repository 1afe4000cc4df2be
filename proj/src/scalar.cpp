#include "gkred/scalar.hpp"

#include <cctype>
#include <sstream>

namespace gkr {

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (im == 0) {
    os << re.get_str();
  } else if (re == 0) {
    if (im == 1)
      os << "i";
    else if (im == -1)
      os << "-i";
    else
      os << im.get_str() << "*i";
  } else {
    os << re.get_str();
    mpq_class a = abs(im);
    os << (im > 0 ? "+" : "-");
    if (a == 1)
      os << "i";
    else
      os << a.get_str() << "*i";
  }
  return os.str();
}

double abs2_d(const Scalar& s) {
  mpq_class n = s.re * s.re + s.im * s.im;
  return n.get_d();
}

namespace {

// One signed summand: rational optionally followed by "*i" or bare "i".
size_t parse_part(const std::string& t, size_t pos, Scalar* out) {
  int sign = 1;
  while (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
    if (t[pos] == '-') sign = -sign;
    ++pos;
  }
  GKR_REQUIRE(pos < t.size(), "scalar literal: trailing sign");
  mpq_class mag(1);
  bool have_digits = false;
  if (std::isdigit(static_cast<unsigned char>(t[pos]))) {
    size_t start = pos;
    while (pos < t.size() &&
           (std::isdigit(static_cast<unsigned char>(t[pos])) || t[pos] == '/'))
      ++pos;
    mag = mpq_class(t.substr(start, pos - start));
    mag.canonicalize();
    have_digits = true;
  }
  bool imag = false;
  if (pos < t.size() && t[pos] == '*') ++pos;
  if (pos < t.size() && t[pos] == 'i') {
    imag = true;
    ++pos;
  }
  GKR_REQUIRE(have_digits || imag, "scalar literal: expected digits or i");
  if (sign < 0) mag = -mag;
  if (imag)
    out->im += mag;
  else
    out->re += mag;
  return pos;
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  GKR_REQUIRE(!t.empty(), "empty scalar literal");
  Scalar s;
  size_t pos = 0;
  while (pos < t.size()) pos = parse_part(t, pos, &s);
  return s;
}

}  // namespace gkr
