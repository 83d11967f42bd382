#include "helmscat/grating.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace helmscat::grating {

namespace {

cplx mu_for_lambda(double lambda, double k)
{
    const double gap = k * k - lambda * lambda;
    if (gap > 0.0) return cplx(std::sqrt(gap), 0.0);
    return cplx(0.0, std::sqrt(-gap));
}

// exp(i mu y) with Im(mu) >= 0; safe for evanescent exponents because
// callers arrange nonnegative decay exponents.
cplx exp_imu(const cplx& mu, double y)
{
    const double re = -mu.imag() * y;
    const double ph = mu.real() * y;
    const double mag = std::exp(re);
    if (!std::isfinite(mag))
        throw std::overflow_error("grating: evanescent exponent overflow");
    return mag * expi(ph);
}

} // namespace

GratingProblem make_problem(const geometry::GratingProfile& profile, double k, double theta,
                            double b_depth, int jmax)
{
    if (k <= 0.0) throw std::invalid_argument("grating: wavenumber must be positive");
    if (theta <= 0.0 || theta > M_PI / 2.0 + 1e-15)
        throw std::invalid_argument("grating: incidence angle must lie in (0, pi/2]");
    if (b_depth <= 0.0) throw std::invalid_argument("grating: b_depth must be positive");
    if (jmax < 1) throw std::invalid_argument("grating: jmax must be positive");

    GratingProblem g{profile, k, theta, b_depth, jmax};
    for (int j = -jmax; j <= jmax; ++j) {
        const double lambda = k * std::cos(theta) + 2.0 * M_PI * j / profile.period();
        if (std::abs(lambda * lambda - k * k) < 1e-12)
            throw std::domain_error("grating: degenerate mode lambda_j^2 = k^2 at j = " +
                                    std::to_string(j));
    }
    return g;
}

ModeData mode(const GratingProblem& g, int j)
{
    if (std::abs(j) > g.jmax)
        throw std::invalid_argument("grating: mode index beyond jmax");
    const double lambda = g.k * std::cos(g.theta) + 2.0 * M_PI * j / g.period();
    if (std::abs(lambda * lambda - g.k * g.k) < 1e-12)
        throw std::domain_error("grating: degenerate mode at j = " + std::to_string(j));
    const cplx mu = mu_for_lambda(lambda, g.k);
    return ModeData{j, lambda, mu, lambda * lambda < g.k * g.k};
}

cplx mode_eigenfunction(const GratingProblem& g, int j, double x)
{
    const double lambda = g.k * std::cos(g.theta) + 2.0 * M_PI * j / g.period();
    return expi(lambda * x) / std::sqrt(g.period());
}

cplx green_g(const GratingProblem& g, const Vec2& x, const Vec2& xi)
{
    if ((x - xi).norm() < 1e-10)
        throw std::domain_error("grating: green_g evaluated at the source point");
    const double b = g.b_depth;
    if (x.y() < -b - 1e-14 || xi.y() < -b - 1e-14)
        throw std::domain_error("grating: points must satisfy y >= -b");

    const double t = std::max(x.y(), xi.y());
    const double s = std::min(x.y(), xi.y());
    const double L = g.period();
    const double kc = g.k * std::cos(g.theta);

    cplx acc = 0.0;
    for (int j = -g.jmax; j <= g.jmax; ++j) {
        const double lambda = kc + 2.0 * M_PI * j / L;
        const cplx mu = mu_for_lambda(lambda, g.k);
        // (exp(i mu (t+s+2b)) - exp(i mu (t-s))) / (2 i mu); both net
        // exponents are >= 0 so evanescent terms only ever decay.
        const cplx gj =
            (exp_imu(mu, t + s + 2.0 * b) - exp_imu(mu, t - s)) / (cplx(0.0, 2.0) * mu);
        acc += expi(lambda * (x.x() - xi.x())) / L * gj;
    }
    return acc;
}

GratingSolveResult solve_grating(const GratingProblem& g, int n_nodes, int n_poles,
                                 double w_min, double epsilon)
{
    if (n_poles >= n_nodes)
        throw std::invalid_argument("grating: need fewer poles than nodes");
    const auto disc = geometry::profile_nodes_and_poles(g.profile, n_nodes, n_poles);

    const Vec2 alpha = g.incident_direction();
    lstsq::CMatrix a(n_nodes, n_poles);
    lstsq::CVector rhs(n_nodes);
    for (int i = 0; i < n_nodes; ++i) {
        const Vec2& node = disc.nodes[i];
        rhs(i) = -expi(g.k * node.dot(alpha)); // minimize ||b + A c|| = ||A c - (-b)||
        for (int m = 0; m < n_poles; ++m) a(i, m) = green_g(g, node, disc.poles[m]);
    }

    const auto sol = lstsq::solve_spectral({a, rhs, w_min, epsilon});

    GratingSolveResult out;
    out.coefficients.assign(sol.c.data(), sol.c.data() + n_poles);
    out.solution = sol;
    out.nodes = disc.nodes;
    out.poles = disc.poles;
    return out;
}

cplx scattered_field(const GratingSolveResult& r, const GratingProblem& g, const Vec2& x)
{
    cplx acc = 0.0;
    for (size_t m = 0; m < r.poles.size(); ++m)
        acc += r.coefficients[m] * green_g(g, x, r.poles[m]);
    return acc;
}

} // namespace helmscat::grating
