#pragma once

#include "helmscat/common.hpp"
#include "helmscat/geometry.hpp"

#include <memory>
#include <vector>

namespace helmscat::biem {

// Combined double/single-layer density for the exterior Dirichlet
// problem,  phi + 2 int_Gamma {dPhi/dnu(y) - i eta Phi} phi ds = 2 f,
// discretized by the Nystrom method with the periodic log-weight
// quadrature on 2n equispaced parameters.
struct CombinedLayerDensity {
    geometry::Boundary boundary;
    int n = 32; // half the quadrature size
    double k = 1.0;
    double eta = 1.0;
    std::vector<double> params;  // 2n knots
    std::vector<cplx> values;    // density at the knots
};

// Factorizes the Nystrom system once; solves any number of boundary-data
// vectors against it.
class NystromSolver {
public:
    NystromSolver(const geometry::Boundary& b, double k, double eta, int n);
    ~NystromSolver();
    NystromSolver(NystromSolver&&) noexcept;
    NystromSolver& operator=(NystromSolver&&) noexcept;

    const std::vector<double>& params() const;

    CombinedLayerDensity solve(const std::vector<cplx>& f) const;
    // Dirichlet scattering data f = -e^{i k x . alpha}.
    CombinedLayerDensity solve_plane_wave(const Vec2& alpha) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

CombinedLayerDensity solve_density(const geometry::Boundary& b, const std::vector<cplx>& f,
                                   double k, double eta, int n);

// A(alpha') = e^{-i pi/4}/sqrt(8 pi k) int {k nu(y).alpha' + eta}
//             e^{-i k alpha'.y} phi(y) ds(y), trapezoid on the knots.
cplx far_field_biem(const CombinedLayerDensity& d, const Vec2& alpha_prime);

// Combined-layer potential at an exterior point.
cplx exterior_field(const CombinedLayerDensity& d, const Vec2& x);

} // namespace helmscat::biem
