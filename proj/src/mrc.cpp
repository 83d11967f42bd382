#include "helmscat/mrc.hpp"

#include "helmscat/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace helmscat::mrc {

namespace {

// H_{-L}..H_{L} at one argument, reflected from the nonnegative orders.
std::vector<cplx> hankel_pm(int order, double x)
{
    const auto h = specfun::hankel1_sequence(order, x);
    std::vector<cplx> out(static_cast<size_t>(2 * order) + 1);
    for (int l = -order; l <= order; ++l) {
        cplx v = h[std::abs(l)];
        if (l < 0 && (-l) % 2 == 1) v = -v;
        out[l + order] = v;
    }
    return out;
}

} // namespace

cplx basis_function(const geometry::Boundary& b, const Vec2& pole, int l, double t, double k)
{
    const Vec2 d = b.point(t) - pole;
    const double dist = d.norm();
    if (dist < 1e-12)
        throw std::domain_error("mrc: boundary point coincides with a pole");
    const double theta = std::atan2(d.y(), d.x());
    return specfun::hankel1(l, k * dist) * expi(l * theta);
}

DirectFactorization::DirectFactorization(const DirectProblem& p)
    : boundary_(p.boundary),
      k_(p.k),
      w_min_(p.w_min),
      epsilon_(p.epsilon),
      order_(p.order),
      knots_(p.knot_count)
{
    const int L = p.order, J = p.pole_count, M = p.knot_count;
    const int N = (2 * L + 1) * J;
    if (M < N)
        throw std::invalid_argument("mrc: knot count must be at least (2L+1)J");

    poles_ = geometry::interior_poles(p.boundary, J, p.pole_scale);

    lstsq::CMatrix a(M, N);
    for (int m = 0; m < M; ++m) {
        const double t = 2.0 * M_PI * m / M;
        const Vec2 rt = p.boundary.point(t);
        for (int j = 0; j < J; ++j) {
            const Vec2 d = rt - poles_[j];
            const double dist = d.norm();
            if (dist < 1e-12)
                throw std::domain_error("mrc: knot coincides with a pole");
            const double theta = std::atan2(d.y(), d.x());
            const auto h = hankel_pm(L, p.k * dist);
            for (int l = -L; l <= L; ++l)
                a(m, j * (2 * L + 1) + (l + L)) = h[l + L] * expi(l * theta);
        }
    }
    dec_ = lstsq::svd(a);
}

DirectSolveResult DirectFactorization::solve(const Vec2& alpha) const
{
    const int M = knots_;
    lstsq::CVector b(M);
    for (int m = 0; m < M; ++m) {
        const double t = 2.0 * M_PI * m / M;
        b(m) = -expi(k_ * boundary_.point(t).dot(alpha));
    }
    const auto sol = lstsq::solve_spectral(dec_, b, w_min_, epsilon_);

    RadiatingExpansion e;
    e.k = k_;
    e.poles = poles_;
    e.order = order_;
    e.coefficients.assign(sol.c.data(), sol.c.data() + sol.c.size());
    return {std::move(e), sol};
}

DirectSolveResult solve_direct(const DirectProblem& p)
{
    return DirectFactorization(p).solve(p.alpha);
}

cplx near_field(const RadiatingExpansion& e, const Vec2& x)
{
    const int L = e.order;
    cplx sum = 0.0;
    for (size_t j = 0; j < e.poles.size(); ++j) {
        const Vec2 d = x - e.poles[j];
        const double dist = d.norm();
        if (dist < 1e-12)
            throw std::domain_error("mrc: evaluation point coincides with a pole");
        const double theta = std::atan2(d.y(), d.x());
        const auto h = hankel_pm(L, e.k * dist);
        for (int l = -L; l <= L; ++l)
            sum += e.coefficient(l, static_cast<int>(j)) * h[l + L] * expi(l * theta);
    }
    return sum;
}

cplx far_field(const RadiatingExpansion& e, const Vec2& alpha_prime)
{
    const int L = e.order;
    const double theta = std::atan2(alpha_prime.y(), alpha_prime.x());
    cplx sum = 0.0;
    for (size_t j = 0; j < e.poles.size(); ++j) {
        cplx inner = 0.0;
        for (int l = -L; l <= L; ++l)
            inner += e.coefficient(l, static_cast<int>(j)) * neg_imag_unit_pow(l) * expi(l * theta);
        sum += expi(-e.k * alpha_prime.dot(e.poles[j])) * inner;
    }
    return std::sqrt(2.0 / (M_PI * e.k)) * expi(-M_PI / 4.0) * sum;
}

FarFieldFitResult fit_far_field(const std::vector<Vec2>& directions,
                                const std::vector<cplx>& target, const Vec2& pole, int order,
                                double k, double w_min)
{
    if (directions.size() != target.size() || directions.empty())
        throw std::invalid_argument("mrc: direction/target size mismatch");
    const int M = static_cast<int>(directions.size());
    const int N = 2 * order + 1;

    const cplx prefactor = std::sqrt(2.0 / (M_PI * k)) * expi(-M_PI / 4.0);
    lstsq::CMatrix a(M, N);
    lstsq::CVector b(M);
    for (int m = 0; m < M; ++m) {
        const double theta = std::atan2(directions[m].y(), directions[m].x());
        const cplx shift = prefactor * expi(-k * directions[m].dot(pole));
        for (int l = -order; l <= order; ++l)
            a(m, l + order) = shift * neg_imag_unit_pow(l) * expi(l * theta);
        b(m) = target[m];
    }

    const auto sol = lstsq::solve_spectral({a, b, w_min, 0.0});

    RadiatingExpansion e;
    e.k = k;
    e.poles = {pole};
    e.order = order;
    e.coefficients.assign(sol.c.data(), sol.c.data() + N);
    return {std::move(e), sol};
}

} // namespace helmscat::mrc
