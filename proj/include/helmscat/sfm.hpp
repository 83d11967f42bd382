#pragma once

#include "helmscat/common.hpp"

#include <cstdint>
#include <vector>

namespace helmscat::sfm {

// Support Function Method: recovers d(l) = min_{x in Gamma} x.l from
// scattering-amplitude phases via the high-frequency approximation
// A(a', a) ~ -(1/2) sqrt(|a - a'|/kappa) e^{i k |a - a'| d(l)},
// l = (a - a')/|a - a'|.

struct AmplitudePair {
    Vec2 alpha;
    Vec2 alpha_prime;
    cplx amplitude;
};

struct AmplitudePairSet {
    Vec2 l = Vec2(1.0, 0.0);
    double k = 1.0;
    std::vector<AmplitudePair> pairs;
};

// Right-hand side of the Kirchhoff amplitude approximation.
cplx approx_amplitude(double d, double curvature, const Vec2& alpha, const Vec2& alpha_prime,
                      double k);

// Aperture pairs for direction l: alpha sweeps the arc |alpha . l| > 1/sqrt(2)
// symmetric about l, alpha' = alpha - 2 (alpha . l) l, so (alpha - alpha') is
// a positive multiple of l.
std::vector<std::pair<Vec2, Vec2>> pair_grid(const Vec2& l, int n_pairs);

struct SupportRecoveryOptions {
    double r_max = 20.0;          // a-priori containment radius: search t in [-r_max, r_max]
    double golden_tol = 1e-6;
};

// argmin_t Psi(t), Psi(t) = sum_pairs |A/|A| + e^{i k |a-a'| t}|^2, by a
// uniform grid of step <= pi/(200 k) refined with golden section.
double recover_support_dirichlet(const AmplitudePairSet& s, const SupportRecoveryOptions& opt = {});

struct RobinRecovery {
    double d = 0.0;
    double h_estimate = 0.0; // reported, but too noisy to identify h reliably
};

// Phase-regression variant: unwrap the phase of A over the |a - a'| grid,
// fit psi(t) ~ C1 t + C2, return d = C1/k and h = -k tan(C2/2).
RobinRecovery recover_support_robin(const AmplitudePairSet& s);

struct SupportSamples {
    std::vector<double> t; // uniform angles of l(t) = (cos t, sin t)
    std::vector<double> d; // recovered support values p(t_i)
    double k = 1.0;
};

// Envelope reconstruction x(t) = p(t) l(t) + p'(t) l'(t) with periodic
// central differences for p'.
std::vector<Vec2> reconstruct_boundary(const SupportSamples& s);

struct HalfPlaneGrid {
    double x0 = 0.0, y0 = 0.0; // lower-left corner
    double step = 0.1;
    int nx = 0, ny = 0;
    std::vector<std::uint8_t> inside; // row-major, 1 = kept by every half-plane
    bool any_marked = false;

    Vec2 point(int ix, int iy) const { return Vec2(x0 + ix * step, y0 + iy * step); }
    bool marked(int ix, int iy) const { return inside[static_cast<size_t>(iy) * nx + ix] != 0; }
};

// Marks grid points x with x . l_i >= d_i for every sample (the convex
// body as an intersection of half-planes).
HalfPlaneGrid localize_halfplanes(const SupportSamples& s, const Vec2& lower_left, double step,
                                  int nx, int ny);

} // namespace helmscat::sfm
