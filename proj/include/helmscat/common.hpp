#pragma once

#include <cmath>
#include <complex>

#include <Eigen/Core>

namespace helmscat {

using cplx = std::complex<double>;
using Vec2 = Eigen::Vector2d;

inline Vec2 unit_from_angle(double a) { return Vec2(std::cos(a), std::sin(a)); }

// i^l for integer l (exact, cycles through {1, i, -1, -i}).
inline cplx imag_unit_pow(int l)
{
    switch (((l % 4) + 4) % 4) {
        case 0: return cplx(1.0, 0.0);
        case 1: return cplx(0.0, 1.0);
        case 2: return cplx(-1.0, 0.0);
        default: return cplx(0.0, -1.0);
    }
}

// (-i)^l = conj(i^l) for integer l.
inline cplx neg_imag_unit_pow(int l) { return std::conj(imag_unit_pow(l)); }

inline cplx expi(double phase) { return cplx(std::cos(phase), std::sin(phase)); }

} // namespace helmscat
