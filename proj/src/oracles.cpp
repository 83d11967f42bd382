#include "helmscat/oracles.hpp"

#include "helmscat/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace helmscat::oracles {

namespace {

constexpr int kSeriesCap = 60;

cplx hankel1_deriv_from_seq(const std::vector<cplx>& h, int l, double x)
{
    if (l == 0) return -h[1];
    return h[l - 1] - (static_cast<double>(l) / x) * h[l];
}

} // namespace

CircleScatterer CircleScatterer::dirichlet(const Vec2& center, double radius)
{
    if (radius <= 0.0) throw std::invalid_argument("oracles: radius must be positive");
    return CircleScatterer{center, radius, BC::Dirichlet, 0.0};
}

CircleScatterer CircleScatterer::robin(const Vec2& center, double radius, double h)
{
    if (radius <= 0.0) throw std::invalid_argument("oracles: radius must be positive");
    if (h < 0.0) throw std::invalid_argument("oracles: Robin coefficient must be nonnegative");
    return CircleScatterer{center, radius, BC::Robin, h};
}

std::vector<cplx> series_coefficients(const CircleScatterer& s, double k)
{
    if (k <= 0.0) throw std::invalid_argument("oracles: wavenumber must be positive");
    const double ka = k * s.radius;
    const auto j = specfun::bessel_j_sequence(kSeriesCap + 1, ka);
    const auto h = specfun::hankel1_sequence(kSeriesCap + 1, ka);

    std::vector<cplx> r;
    r.reserve(kSeriesCap + 1);
    double partial = 0.0;
    for (int l = 0; l <= kSeriesCap; ++l) {
        cplx rl;
        if (s.bc == CircleScatterer::BC::Dirichlet) {
            rl = j[l] / h[l];
        } else {
            const double jd = (l == 0) ? -j[1] : j[l - 1] - (static_cast<double>(l) / ka) * j[l];
            const cplx hd = hankel1_deriv_from_seq(h, l, ka);
            rl = (k * jd + s.h * j[l]) / (k * hd + s.h * h[l]);
        }
        r.push_back(rl);
        const double weight = (l == 0) ? std::abs(rl) : 2.0 * std::abs(rl);
        partial += weight;
        if (l > ka && weight < 1e-14 * partial) return r;
    }
    throw std::runtime_error("oracles: amplitude series not converged at order 60");
}

cplx circle_amplitude(const CircleScatterer& s, double k, const Vec2& alpha_prime,
                      const Vec2& alpha)
{
    const auto r = series_coefficients(s, k);
    const double theta = std::atan2(alpha_prime.y(), alpha_prime.x());
    const double beta = std::atan2(alpha.y(), alpha.x());

    cplx sum = r[0];
    for (size_t l = 1; l < r.size(); ++l)
        sum += 2.0 * r[l] * std::cos(static_cast<double>(l) * (theta - beta));

    const cplx prefactor = -std::sqrt(2.0 / (M_PI * k)) * expi(-M_PI / 4.0) *
                           expi(k * (alpha - alpha_prime).dot(s.center));
    return prefactor * sum;
}

cplx circle_amplitude_dirichlet(const CircleScatterer& s, double k, const Vec2& alpha_prime,
                                const Vec2& alpha)
{
    if (s.bc != CircleScatterer::BC::Dirichlet)
        throw std::invalid_argument("oracles: scatterer is not Dirichlet");
    return circle_amplitude(s, k, alpha_prime, alpha);
}

cplx circle_amplitude_robin(const CircleScatterer& s, double k, const Vec2& alpha_prime,
                            const Vec2& alpha)
{
    if (s.bc != CircleScatterer::BC::Robin)
        throw std::invalid_argument("oracles: scatterer is not Robin");
    return circle_amplitude(s, k, alpha_prime, alpha);
}

cplx exact_boundary_scattered_field(const CircleScatterer& s, double k, const Vec2& alpha,
                                    double theta)
{
    const Vec2 x = s.center + s.radius * unit_from_angle(theta);
    return -expi(k * x.dot(alpha));
}

} // namespace helmscat::oracles
