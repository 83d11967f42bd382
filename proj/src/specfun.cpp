#include "helmscat/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace helmscat::specfun {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kPi = 3.14159265358979323846;

void check_order(int l)
{
    if (l < 0 || l > kMaxOrder)
        throw std::domain_error("specfun: order out of range [0, 200]: " + std::to_string(l));
}

// Miller downward recurrence, normalized via J_0 + 2*sum_{m>=1} J_{2m} = 1.
// Values are rescaled on the fly so intermediates never overflow.
std::vector<double> miller_j(int lmax, double x)
{
    std::vector<double> out(static_cast<size_t>(lmax) + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }

    const int start = std::max(lmax, static_cast<int>(std::ceil(x))) + 52;
    constexpr double kBig = 1e280;
    constexpr double kScale = 1e-280;

    double jp = 0.0;    // J_{m+1} (unnormalized)
    double jc = 1e-30;  // J_m
    double sum = 0.0;
    if (start % 2 == 0) sum += 2.0 * jc;
    if (start <= lmax) out[start] = jc;

    for (int m = start; m >= 1; --m) {
        double jm = (2.0 * m / x) * jc - jp; // J_{m-1}
        jp = jc;
        jc = jm;
        const int n = m - 1;
        if (n == 0)
            sum += jc;
        else if (n % 2 == 0)
            sum += 2.0 * jc;
        if (n <= lmax) out[n] = jc;
        if (std::abs(jc) > kBig) {
            jc *= kScale;
            jp *= kScale;
            sum *= kScale;
            for (int i = n; i <= lmax; ++i) out[i] *= kScale;
        }
    }

    for (auto& v : out) v /= sum;
    return out;
}

// Ascending series, reliable for x < 2 where cancellation is negligible.
void y01_series(double x, double j0, double j1, double* y0, double* y1)
{
    const double q = x * x / 4.0;
    const double lg = std::log(x / 2.0) + kEulerGamma;

    double term = 1.0, h = 0.0, s0 = 0.0;
    for (int m = 1; m < 60; ++m) {
        term *= -q / (m * m);
        h += 1.0 / m;
        const double add = -term * h; // (-1)^{m+1} h_m q^m / (m!)^2
        s0 += add;
        if (std::abs(add) < 1e-18 * std::abs(s0) + 1e-300) break;
    }
    *y0 = (2.0 / kPi) * (lg * j0 + s0);

    // Y_1 = (2/pi)(ln(x/2)+gamma) J_1 - 2/(pi x)
    //       - (x/(2 pi)) sum_m (h_m + h_{m+1}) (-q)^m / (m! (m+1)!)
    double t = 1.0, hm = 0.0, s1 = 1.0; // m = 0 term: (h_0 + h_1) = 1
    for (int m = 1; m < 60; ++m) {
        t *= -q / (m * (m + 1));
        hm += 1.0 / m;
        const double add = t * (2.0 * hm + 1.0 / (m + 1));
        s1 += add;
        if (std::abs(add) < 1e-18 * std::abs(s1) + 1e-300) break;
    }
    *y1 = (2.0 / kPi) * lg * j1 - 2.0 / (kPi * x) - (x / (2.0 * kPi)) * s1;
}

// Steed's CF2 at order 0:  H_0'(x)/H_0(x) = -1/(2x) + i + (i/x) K,
// K = a_1/(b_1 + a_2/(b_2 + ...)), a_n = (n - 1/2)^2, b_n = 2(x + i n).
// Converges for x >= 2.  Evaluated with the modified Lentz method.
std::complex<double> cf2_ratio(double x)
{
    using C = std::complex<double>;
    constexpr double tiny = 1e-290;
    C f(tiny, 0.0), c(tiny, 0.0), d(0.0, 0.0);
    for (int n = 1; n <= 10000; ++n) {
        const double a = (n - 0.5) * (n - 0.5);
        const C b(2.0 * x, 2.0 * n);
        d = b + a * d;
        if (std::abs(d) < tiny) d = C(tiny, 0.0);
        c = b + a / c;
        if (std::abs(c) < tiny) c = C(tiny, 0.0);
        d = 1.0 / d;
        const C delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16)
            return C(-0.5 / x, 1.0) + C(0.0, 1.0 / x) * f;
    }
    throw std::runtime_error("specfun: CF2 failed to converge");
}

void y01(double x, double j0, double j1, double* y0, double* y1)
{
    if (x < 2.0) {
        y01_series(x, j0, j1, y0, y1);
        return;
    }
    const std::complex<double> pq = cf2_ratio(x); // J0' + iY0' over J0 + iY0
    const double p = pq.real(), q = pq.imag();
    *y0 = (p * j0 + j1) / q;          // from Re: J0' = p J0 - q Y0, J0' = -J1
    *y1 = -(q * j0 + p * *y0);        // Y1 = -Y0'
}

} // namespace

std::vector<double> bessel_j_sequence(int lmax, double x)
{
    check_order(lmax);
    if (x < 0.0)
        throw std::domain_error("specfun: bessel_j requires x >= 0");
    return miller_j(lmax, x);
}

double bessel_j(int l, double x)
{
    return bessel_j_sequence(l, x)[static_cast<size_t>(l)];
}

std::vector<double> bessel_y_sequence(int lmax, double x)
{
    check_order(lmax);
    if (x <= 0.0)
        throw std::domain_error("specfun: bessel_y requires x > 0");

    const auto j = miller_j(std::max(lmax, 1), x);
    double y0, y1;
    y01(x, j[0], j[1], &y0, &y1);

    std::vector<double> out(static_cast<size_t>(lmax) + 1);
    out[0] = y0;
    if (lmax >= 1) out[1] = y1;
    for (int l = 1; l < lmax; ++l) {
        out[l + 1] = (2.0 * l / x) * out[l] - out[l - 1];
        if (!std::isfinite(out[l + 1]))
            throw std::overflow_error("specfun: Y_" + std::to_string(l + 1) +
                                      " overflows at x = " + std::to_string(x));
    }
    return out;
}

double bessel_y(int l, double x)
{
    return bessel_y_sequence(l, x)[static_cast<size_t>(l)];
}

CylinderFunctionValue cylinder_functions(int l, double x)
{
    const double j = bessel_j(l, x);
    const double y = bessel_y(l, x);
    return CylinderFunctionValue{l, x, j, y, std::complex<double>(j, y)};
}

std::complex<double> hankel1(int l, double x)
{
    const int a = std::abs(l);
    check_order(a);
    if (x <= 0.0)
        throw std::domain_error("specfun: hankel1 requires x > 0");
    const double j = bessel_j(a, x);
    const double y = bessel_y(a, x);
    std::complex<double> h(j, y);
    return (l < 0 && (a % 2) == 1) ? -h : h;
}

std::vector<std::complex<double>> hankel1_sequence(int lmax, double x)
{
    check_order(lmax);
    if (x <= 0.0)
        throw std::domain_error("specfun: hankel1 requires x > 0");
    const auto j = miller_j(lmax, x);
    const auto y = bessel_y_sequence(lmax, x);
    std::vector<std::complex<double>> out(static_cast<size_t>(lmax) + 1);
    for (int l = 0; l <= lmax; ++l) out[l] = {j[l], y[l]};
    return out;
}

std::complex<double> hankel1_derivative(int l, double x)
{
    if (x <= 0.0)
        throw std::domain_error("specfun: hankel1_derivative requires x > 0");
    if (l == 0) return -hankel1(1, x);
    return hankel1(l - 1, x) - (static_cast<double>(l) / x) * hankel1(l, x);
}

} // namespace helmscat::specfun
