#pragma once

#include "helmscat/common.hpp"

#include <vector>

namespace helmscat::oracles {

// Closed-form scattering data for a circular obstacle: the ground
// truth feeding every cross-validation in the workbench.
struct CircleScatterer {
    enum class BC { Dirichlet, Robin };

    Vec2 center = Vec2::Zero();
    double radius = 1.0;
    BC bc = BC::Dirichlet;
    double h = 0.0; // Robin coefficient u_N + h u = 0; h = 0 is Neumann

    static CircleScatterer dirichlet(const Vec2& center, double radius);
    static CircleScatterer robin(const Vec2& center, double radius, double h);
};

// Angular series coefficients R_l, l = 0..lmax, with the truncation
// order chosen so dropped terms fall below 1e-14 of the sum (cap 60).
// Dirichlet: R_l = J_l(ka)/H_l(ka).
// Robin:     R_l = (k J_l'(ka) + h J_l(ka)) / (k H_l'(ka) + h H_l(ka)).
std::vector<cplx> series_coefficients(const CircleScatterer& s, double k);

// A(alpha', alpha) = -sqrt(2/(pi k)) e^{-i pi/4} e^{i k (alpha - alpha') . x0}
//                    * sum_l R_l e^{i l (theta - beta)}
cplx circle_amplitude(const CircleScatterer& s, double k, const Vec2& alpha_prime,
                      const Vec2& alpha);
cplx circle_amplitude_dirichlet(const CircleScatterer& s, double k, const Vec2& alpha_prime,
                                const Vec2& alpha);
cplx circle_amplitude_robin(const CircleScatterer& s, double k, const Vec2& alpha_prime,
                            const Vec2& alpha);

// Scattered field on the circle itself for the Dirichlet condition:
// v(x) = -e^{i k x . alpha} at x = x0 + a(cos theta, sin theta).
cplx exact_boundary_scattered_field(const CircleScatterer& s, double k, const Vec2& alpha,
                                    double theta);

} // namespace helmscat::oracles
