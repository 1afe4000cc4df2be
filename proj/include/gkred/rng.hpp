#pragma once

#include <random>

#include "gkred/scalar.hpp"

namespace gkr {

// Deterministic seeded randomness for tests and sample-point generation.
// mt19937_64 is fully specified by the standard, so runs are reproducible
// across platforms for a fixed seed.
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  int uniform_int(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(eng);
  }
  double gauss() {
    std::normal_distribution<double> d(0.0, 1.0);
    return d(eng);
  }
  // Small rational p/q with |p| <= mag, 1 <= q <= mag.
  mpq_class rational(int mag = 8) {
    int p = uniform_int(-mag, mag);
    int q = uniform_int(1, mag);
    mpq_class r(p, q);
    r.canonicalize();
    return r;
  }
  mpq_class rational_nonzero(int mag = 8) {
    for (;;) {
      mpq_class r = rational(mag);
      if (r != 0) return r;
    }
  }
  Scalar scalar(int mag = 8) { return Scalar(rational(mag), rational(mag)); }
  Scalar real_scalar(int mag = 8) { return Scalar(rational(mag)); }
  Scalar scalar_nonzero(int mag = 8) {
    for (;;) {
      Scalar s = scalar(mag);
      if (!s.is_zero()) return s;
    }
  }
};

}  // namespace gkr
