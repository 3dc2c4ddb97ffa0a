// numeric.hpp - small numeric helpers shared across the library

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace afdm {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// sinc(u) = sin(pi u) / (pi u), sinc(0) = 1.
inline double sinc(double u) {
    if (u == 0.0) return 1.0;
    const double pu = kPi * u;
    return std::sin(pu) / pu;
}

// Reduce a phase argument before trig evaluation once it is large enough
// that raw sin/cos would lose accuracy to argument rounding.
inline double guard_angle(double a) {
    if (std::abs(a) > 1e8) return std::remainder(a, kTwoPi);
    return a;
}

// exp(j a) with the guard above.
inline cplx cis(double a) {
    a = guard_angle(a);
    return {std::cos(a), std::sin(a)};
}

// exp(j 2 pi t) for a phase given in turns, reduced exactly to [-1/2, 1/2).
inline cplx cis_turns(double t) {
    t = std::remainder(t, 1.0);
    const double a = kTwoPi * t;
    return {std::cos(a), std::sin(a)};
}

}  // namespace afdm
