#pragma once

#include "helmscat/common.hpp"
#include "helmscat/geometry.hpp"
#include "helmscat/lstsq.hpp"

#include <vector>

namespace helmscat::mrc {

// Multi-pole radiating expansion
//   v(x) = sum_j sum_{|l| <= L} c_lj H_l^(1)(k |x - x_j|) e^{i l theta_j(x)}
// with poles x_j inside the obstacle.
struct RadiatingExpansion {
    double k = 1.0;
    std::vector<Vec2> poles;
    int order = 0; // L
    // (2L+1) coefficients per pole, pole-major, l = -L..L within a pole.
    std::vector<cplx> coefficients;

    cplx coefficient(int l, int j) const
    {
        return coefficients[static_cast<size_t>(j) * (2 * order + 1) + (l + order)];
    }
    cplx& coefficient(int l, int j)
    {
        return coefficients[static_cast<size_t>(j) * (2 * order + 1) + (l + order)];
    }
};

struct DirectProblem {
    geometry::Boundary boundary;
    double k = 1.0;
    Vec2 alpha = Vec2(1.0, 0.0); // incident direction
    int order = 5;               // L
    int pole_count = 4;          // J
    double pole_scale = 0.7;
    int knot_count = 720;        // M
    double w_min = 1e-8;
    double epsilon = 0.0;
};

// psi_lj(t) = H_l^(1)(k |r(t) - x_j|) e^{i l theta_j(t)}
cplx basis_function(const geometry::Boundary& b, const Vec2& pole, int l, double t, double k);

struct DirectSolveResult {
    RadiatingExpansion expansion;
    lstsq::LsqSolution solution;
};

// Basis matrix + SVD for one (boundary, k, poles, order, knots)
// configuration; reusable across incident directions.
class DirectFactorization {
public:
    explicit DirectFactorization(const DirectProblem& p);
    DirectSolveResult solve(const Vec2& alpha) const;

private:
    geometry::Boundary boundary_;
    double k_, w_min_, epsilon_;
    int order_, knots_;
    std::vector<Vec2> poles_;
    lstsq::Svd dec_;
};

// Assembles the knot-sampled basis matrix, b_m = -e^{i k r(t_m) . alpha},
// and delegates to the spectral least-squares solver.
DirectSolveResult solve_direct(const DirectProblem& p);

cplx near_field(const RadiatingExpansion& e, const Vec2& x);

// A(alpha') = sqrt(2/(pi k)) e^{-i pi/4} sum_j e^{-i k alpha'.x_j}
//             sum_l c_lj (-i)^l e^{i l theta'}
cplx far_field(const RadiatingExpansion& e, const Vec2& alpha_prime);

struct FarFieldFitResult {
    RadiatingExpansion expansion;
    lstsq::LsqSolution solution;
};

// Fits a single-pole expansion to far-field samples ("can two radiating
// solutions share a far field?" demonstration).  The norm is normalized
// by sqrt(#directions) so the identity function has norm 1.
FarFieldFitResult fit_far_field(const std::vector<Vec2>& directions,
                                const std::vector<cplx>& target, const Vec2& pole, int order,
                                double k, double w_min);

} // namespace helmscat::mrc
