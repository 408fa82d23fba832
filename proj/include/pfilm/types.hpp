#pragma once

#include <complex>

namespace pfilm {

using Complex = std::complex<double>;

// CGS-Gaussian units throughout; lengths in cm unless a name says otherwise.
inline constexpr double c_light = 2.998e10;  // cm/s

inline constexpr const char* version = "0.1.0";

}  // namespace pfilm
