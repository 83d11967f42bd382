#pragma once

#include <complex>
#include <vector>

namespace helmscat::specfun {

// Cylinder functions of integer order on the positive real axis.
//
// J_l is computed by Miller's downward recurrence with the
// normalization sum J_0 + 2*sum_m J_{2m} = 1 (upward recurrence for J
// is unstable once l exceeds x).  Y_0/Y_1 come from the ascending
// series for small arguments and from Steed's continued fraction CF2
// for x >= 2; higher orders follow by upward recurrence, which is
// stable for Y.  Orders are capped at 200, far above anything the
// solvers request (|l| <= 60 in the amplitude series).

inline constexpr int kMaxOrder = 200;

double bessel_j(int l, double x);
double bessel_y(int l, double x);

// J_0..J_lmax in one downward pass.
std::vector<double> bessel_j_sequence(int lmax, double x);
// Y_0..Y_lmax; throws std::overflow_error if a value is not representable.
std::vector<double> bessel_y_sequence(int lmax, double x);

struct CylinderFunctionValue {
    int order;
    double argument;
    double j;
    double y;
    std::complex<double> h1; // j + i*y by construction
};

CylinderFunctionValue cylinder_functions(int l, double x);

// H_l^(1)(x) = J_l(x) + i Y_l(x); negative orders via H_{-l} = (-1)^l H_l.
std::complex<double> hankel1(int l, double x);

// H_0^(1)..H_lmax^(1).
std::vector<std::complex<double>> hankel1_sequence(int lmax, double x);

// d/dx H_l^(1)(x) = H_{l-1}^(1)(x) - (l/x) H_l^(1)(x).
std::complex<double> hankel1_derivative(int l, double x);

} // namespace helmscat::specfun
