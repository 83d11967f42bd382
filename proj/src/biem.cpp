#include "helmscat/biem.hpp"

#include "helmscat/specfun.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace helmscat::biem {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

// Kernels of the parametrized combined-field equation, split around the
// ln(4 sin^2((t - tau)/2)) singularity:
//   M  = (i/4) H_0(kr) |x'(tau)|                       (single layer)
//   L  = (ik/4) H_1(kr) beta / r                       (double layer)
// with beta = x2'(tau)(x1(t)-x1(tau)) - x1'(tau)(x2(t)-x2(tau)), so that
//   M1 = -(1/4pi) J_0(kr) |x'(tau)|,   L1 = -(k/4pi) J_1(kr) beta / r,
//   M2 = M - M1 w,                      L2 = L - L1 w.
struct KernelGeometry {
    std::vector<Vec2> p;   // points
    std::vector<Vec2> dp;  // first derivatives
    std::vector<Vec2> ddp; // second derivatives
    std::vector<double> speed;
};

} // namespace

struct NystromSolver::Impl {
    geometry::Boundary boundary;
    double k = 1.0, eta = 1.0;
    int n = 32;
    std::vector<double> params;
    KernelGeometry geo;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu;
};

NystromSolver::NystromSolver(const geometry::Boundary& b, double k, double eta, int n)
    : impl_(std::make_unique<Impl>())
{
    if (!b.smooth())
        throw std::invalid_argument("biem: Nystrom on equispaced parameters needs a smooth boundary");
    if (k <= 0.0 || eta <= 0.0) throw std::invalid_argument("biem: k and eta must be positive");
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("biem: quadrature size n must be even, >= 4");

    auto& im = *impl_;
    im.boundary = b;
    im.k = k;
    im.eta = eta;
    im.n = n;

    const int m = 2 * n;
    im.params.resize(m);
    im.geo.p.resize(m);
    im.geo.dp.resize(m);
    im.geo.ddp.resize(m);
    im.geo.speed.resize(m);
    for (int i = 0; i < m; ++i) {
        const double t = M_PI * i / n;
        im.params[i] = t;
        im.geo.p[i] = b.point(t);
        im.geo.dp[i] = b.tangent(t);
        im.geo.ddp[i] = b.second_derivative(t);
        im.geo.speed[i] = im.geo.dp[i].norm();
    }

    // Log-weight quadrature: R_d = -(2pi/n) sum_{s=1}^{n-1} cos(s d pi/n)/s
    //                              - (-1)^d pi/n^2.
    std::vector<double> r(m);
    for (int d = 0; d < m; ++d) {
        double acc = 0.0;
        for (int s = 1; s < n; ++s) acc += std::cos(s * d * M_PI / n) / s;
        r[d] = -(2.0 * M_PI / n) * acc - ((d % 2 == 0) ? 1.0 : -1.0) * M_PI / (n * n);
    }

    Eigen::MatrixXcd a(m, m);
    const cplx iu(0.0, 1.0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            cplx k1, k2;
            if (i == j) {
                const double sp = im.geo.speed[i];
                const Vec2& d1 = im.geo.dp[i];
                const Vec2& d2 = im.geo.ddp[i];
                const cplx m1(-sp / (4.0 * M_PI), 0.0);
                const cplx m2 = (cplx(0.0, 0.25) -
                                 cplx((kEulerGamma + std::log(k * sp / 2.0)) / (2.0 * M_PI), 0.0)) *
                                sp;
                const double l2 = (d2.x() * d1.y() - d1.x() * d2.y()) / (4.0 * M_PI * sp * sp);
                k1 = 2.0 * (0.0 - iu * eta * m1);
                k2 = 2.0 * (l2 - iu * eta * m2);
            } else {
                const Vec2 diff = im.geo.p[i] - im.geo.p[j];
                const double dist = diff.norm();
                const double beta =
                    im.geo.dp[j].y() * diff.x() - im.geo.dp[j].x() * diff.y();
                const double j0 = specfun::bessel_j(0, k * dist);
                const double j1 = specfun::bessel_j(1, k * dist);
                const cplx h0 = specfun::hankel1(0, k * dist);
                const cplx h1 = specfun::hankel1(1, k * dist);
                const cplx mfull = cplx(0.0, 0.25) * h0 * im.geo.speed[j];
                const cplx lfull = cplx(0.0, 0.25 * k) * h1 * beta / dist;
                const double m1 = -j0 * im.geo.speed[j] / (4.0 * M_PI);
                const double l1 = -k * j1 * beta / (4.0 * M_PI * dist);
                const double sin_half = std::sin((im.params[i] - im.params[j]) / 2.0);
                const double w = std::log(4.0 * sin_half * sin_half);
                k1 = 2.0 * (l1 - iu * eta * m1);
                k2 = 2.0 * ((lfull - l1 * w) - iu * eta * (mfull - m1 * w));
            }
            a(i, j) = r[(i - j + m) % m] * k1 + (M_PI / n) * k2;
        }
        a(i, i) += 1.0;
    }

    im.lu = a.partialPivLu();
}

NystromSolver::~NystromSolver() = default;
NystromSolver::NystromSolver(NystromSolver&&) noexcept = default;
NystromSolver& NystromSolver::operator=(NystromSolver&&) noexcept = default;

const std::vector<double>& NystromSolver::params() const { return impl_->params; }

CombinedLayerDensity NystromSolver::solve(const std::vector<cplx>& f) const
{
    const auto& im = *impl_;
    const int m = 2 * im.n;
    if (static_cast<int>(f.size()) != m)
        throw std::invalid_argument("biem: boundary data must be sampled at the 2n knots");

    Eigen::VectorXcd rhs(m);
    for (int i = 0; i < m; ++i) rhs(i) = 2.0 * f[i];
    Eigen::VectorXcd phi = im.lu.solve(rhs);
    if (!phi.allFinite())
        throw std::runtime_error("biem: singular Nystrom system");

    CombinedLayerDensity d;
    d.boundary = im.boundary;
    d.n = im.n;
    d.k = im.k;
    d.eta = im.eta;
    d.params = im.params;
    d.values.assign(phi.data(), phi.data() + m);
    return d;
}

CombinedLayerDensity NystromSolver::solve_plane_wave(const Vec2& alpha) const
{
    const auto& im = *impl_;
    std::vector<cplx> f(2 * im.n);
    for (int i = 0; i < 2 * im.n; ++i)
        f[i] = -expi(im.k * im.geo.p[i].dot(alpha));
    return solve(f);
}

CombinedLayerDensity solve_density(const geometry::Boundary& b, const std::vector<cplx>& f,
                                   double k, double eta, int n)
{
    return NystromSolver(b, k, eta, n).solve(f);
}

cplx far_field_biem(const CombinedLayerDensity& d, const Vec2& alpha_prime)
{
    const int m = 2 * d.n;
    cplx acc = 0.0;
    for (int j = 0; j < m; ++j) {
        const double t = d.params[j];
        const Vec2 y = d.boundary.point(t);
        const Vec2 nu = d.boundary.normal(t);
        const double sp = d.boundary.tangent(t).norm();
        acc += (d.k * nu.dot(alpha_prime) + d.eta) * expi(-d.k * alpha_prime.dot(y)) *
               d.values[j] * sp;
    }
    acc *= M_PI / d.n;
    return expi(-M_PI / 4.0) / std::sqrt(8.0 * M_PI * d.k) * acc;
}

cplx exterior_field(const CombinedLayerDensity& d, const Vec2& x)
{
    const int m = 2 * d.n;
    const cplx iu(0.0, 1.0);
    cplx acc = 0.0;
    for (int j = 0; j < m; ++j) {
        const double t = d.params[j];
        const Vec2 y = d.boundary.point(t);
        const Vec2 nu = d.boundary.normal(t);
        const double sp = d.boundary.tangent(t).norm();
        const Vec2 diff = x - y;
        const double dist = diff.norm();
        const cplx phi_kernel = cplx(0.0, 0.25) * specfun::hankel1(0, d.k * dist);
        const cplx dphi = cplx(0.0, 0.25 * d.k) * specfun::hankel1(1, d.k * dist) *
                          nu.dot(diff) / dist;
        acc += (dphi - iu * d.eta * phi_kernel) * d.values[j] * sp;
    }
    return acc * M_PI / static_cast<double>(d.n);
}

} // namespace helmscat::biem
