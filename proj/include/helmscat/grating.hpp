#pragma once

#include "helmscat/common.hpp"
#include "helmscat/geometry.hpp"
#include "helmscat/lstsq.hpp"

#include <vector>

namespace helmscat::grating {

// Quasiperiodic scattering by an L-periodic profile: incident direction
// alpha = (cos theta, -sin theta), quasiperiodicity factor
// nu = e^{i k L cos theta}, mode wavenumbers
// lambda_j = k cos theta + 2 pi j / L and vertical exponents
// mu_j = sqrt(k^2 - lambda_j^2) (positive real when propagating,
// positive imaginary when evanescent).
struct GratingProblem {
    geometry::GratingProfile profile;
    double k = 1.0;
    double theta = M_PI / 4.0;
    double b_depth = 1.2;
    int jmax = 120;

    double period() const { return profile.period(); }
    Vec2 incident_direction() const { return Vec2(std::cos(theta), -std::sin(theta)); }
    cplx nu() const { return expi(k * period() * std::cos(theta)); }
};

// Validates theta, k, and non-degeneracy (lambda_j^2 != k^2 for all
// |j| <= jmax); throws std::domain_error on a Wood-anomaly degeneracy.
GratingProblem make_problem(const geometry::GratingProfile& profile, double k, double theta,
                            double b_depth = 1.2, int jmax = 120);

struct ModeData {
    int j = 0;
    double lambda = 0.0;
    cplx mu;
    bool propagating = false;
};

ModeData mode(const GratingProblem& g, int j);

// phi_j(x) = e^{i lambda_j x} / sqrt(L)
cplx mode_eigenfunction(const GratingProblem& g, int j, double x);

// Half-space quasiperiodic Green's function
//   g(x, xi) = sum_{|j| <= jmax} phi_j(x1) conj(phi_j(xi1)) g_j(x2, xi2),
//   g_j = v_j(max) psi_j(min),  v_j(y) = e^{i mu_j y},
//   psi_j(y) = mu_j^{-1} e^{i mu_j b} sin(mu_j (y + b)).
// Products are evaluated in combined-exponent form so evanescent modes
// never overflow:  g_j = (e^{i mu (t+s+2b)} - e^{i mu (t-s)}) / (2 i mu).
cplx green_g(const GratingProblem& g, const Vec2& x, const Vec2& xi);

struct GratingSolveResult {
    std::vector<cplx> coefficients;
    lstsq::LsqSolution solution;
    std::vector<Vec2> nodes;
    std::vector<Vec2> poles;
};

// MRC grating solve: minimize || b + A c || with b_i = u_0(x_i),
// A_im = g(x_i, xi_m), in the node-averaged norm (1/N) sum |.|^2.
GratingSolveResult solve_grating(const GratingProblem& g, int n_nodes, int n_poles,
                                 double w_min = 1e-8, double epsilon = 0.0);

// v(x) = sum_m c_m g(x, xi_m)
cplx scattered_field(const GratingSolveResult& r, const GratingProblem& g, const Vec2& x);

} // namespace helmscat::grating
