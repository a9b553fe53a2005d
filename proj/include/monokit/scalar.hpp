#pragma once

#include <cmath>
#include <cstdlib>
#include <limits>

namespace monokit {

// |t|^s with the conventions 0^0 = 1 and 0^s = 0 for s > 0.
// Negative s at t = 0 yields +inf; callers that must not see it
// treat the point as nondifferentiable.
inline double pow_abs(double t, double s) {
    if (s == 0.0) return 1.0;
    const double a = std::abs(t);
    if (a == 0.0) return s > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::pow(a, s);
}

// t|t|^{s} (odd power), 0 at t = 0 for s >= 0.
inline double odd_pow(double t, double s) {
    return t * pow_abs(t, s);
}

inline double sgn(double t) {
    return (t > 0.0) - (t < 0.0);
}

} // namespace monokit
