#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gkr {

using complex_d = std::complex<double>;

struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

#define GKR_REQUIRE(cond, msg)                         \
  do {                                                 \
    if (!(cond)) throw ::gkr::error(std::string(msg)); \
  } while (0)

}  // namespace gkr
