#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helmscat/biem.hpp"
#include "helmscat/mrc.hpp"
#include "helmscat/oracles.hpp"

#include <cmath>
#include <vector>

using namespace helmscat;
using namespace helmscat::biem;

namespace {

double max_rel_deviation(const std::vector<cplx>& a, const std::vector<cplx>& ref)
{
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - ref[i]) / std::abs(ref[i]));
    return worst;
}

} // namespace

TEST_CASE("homogeneous data gives the zero density")
{
    const auto b = geometry::Boundary::circle(Vec2(0, 0), 1.0);
    NystromSolver solver(b, 1.0, 1.0, 16);
    const auto d = solver.solve(std::vector<cplx>(32, cplx(0.0, 0.0)));
    for (const auto& v : d.values) CHECK(std::abs(v) == 0.0);
    CHECK(std::abs(far_field_biem(d, Vec2(1, 0))) == 0.0);
}

TEST_CASE("unit circle far field matches the analytic series to 1e-6")
{
    const auto b = geometry::Boundary::circle(Vec2(0, 0), 1.0);
    const auto s = oracles::CircleScatterer::dirichlet(Vec2(0, 0), 1.0);
    const Vec2 alpha(1.0, 0.0);
    for (double k : {1.0, 5.0}) {
        NystromSolver solver(b, k, k, 64);
        const auto d = solver.solve_plane_wave(alpha);
        for (int i = 0; i < 32; ++i) {
            const Vec2 ap = unit_from_angle(2.0 * M_PI * i / 32.0);
            const cplx got = far_field_biem(d, ap);
            const cplx ref = oracles::circle_amplitude_dirichlet(s, k, ap, alpha);
            CHECK(std::abs(got - ref) <= 1e-6 * std::abs(ref));
        }
    }
}

TEST_CASE("quadrature doubling changes the far field below 1e-8")
{
    const Vec2 alpha(1.0, 0.0);
    for (const auto& b :
         {geometry::Boundary::circle(Vec2(0, 0), 1.0), geometry::Boundary::ellipse(2.0, 1.0)}) {
        for (double k : {1.0, 5.0}) {
            const auto d64 = NystromSolver(b, k, k, 64).solve_plane_wave(alpha);
            const auto d128 = NystromSolver(b, k, k, 128).solve_plane_wave(alpha);
            std::vector<cplx> a64, a128;
            for (int i = 0; i < 24; ++i) {
                const Vec2 ap = unit_from_angle(2.0 * M_PI * i / 24.0);
                a64.push_back(far_field_biem(d64, ap));
                a128.push_back(far_field_biem(d128, ap));
            }
            CHECK(max_rel_deviation(a64, a128) < 1e-8);
        }
    }
}

TEST_CASE("ellipse and kite far fields agree with the MRC solver to 1e-3")
{
    const Vec2 alpha(1.0, 0.0);
    const double k = 1.0;

    mrc::DirectProblem mp;
    mp.k = k;
    mp.alpha = alpha;

    mp.boundary = geometry::Boundary::ellipse(2.0, 1.0);
    mp.pole_count = 4;
    mp.pole_scale = 0.7;
    const auto mrc_ell = mrc::solve_direct(mp);

    mp.boundary = geometry::Boundary::kite(Vec2(-0.65, 0.0));
    mp.pole_count = 16;
    mp.pole_scale = 0.9;
    const auto mrc_kite = mrc::solve_direct(mp);

    const struct {
        geometry::Boundary b;
        const mrc::DirectSolveResult* m;
        double tol;
    } cases[] = {
        {geometry::Boundary::ellipse(2.0, 1.0), &mrc_ell, 1e-3},
        {geometry::Boundary::kite(Vec2(-0.65, 0.0)), &mrc_kite, 1e-3},
    };
    for (const auto& c : cases) {
        const auto d = NystromSolver(c.b, k, k, 64).solve_plane_wave(alpha);
        std::vector<cplx> got, ref;
        for (int i = 0; i < 64; ++i) {
            const Vec2 ap = unit_from_angle(2.0 * M_PI * i / 64.0);
            got.push_back(mrc::far_field(c.m->expansion, ap));
            ref.push_back(far_field_biem(d, ap));
        }
        CHECK(max_rel_deviation(got, ref) <= c.tol);
    }
}

TEST_CASE("cross-section sanity on the circle at k = 1")
{
    const double k = 1.0;
    const auto s = oracles::CircleScatterer::dirichlet(Vec2(0, 0), 1.0);
    const auto coeffs = oracles::series_coefficients(s, k);

    // Series route: sigma = (4/k) sum |R_l|^2 (= (4/k) sum Re R_l by the
    // optical theorem, which the coefficients satisfy identically).
    double sum_sq = std::norm(coeffs[0]), sum_re = coeffs[0].real();
    for (size_t l = 1; l < coeffs.size(); ++l) {
        sum_sq += 2.0 * std::norm(coeffs[l]);
        sum_re += 2.0 * coeffs[l].real();
    }
    CHECK(sum_sq == doctest::Approx(sum_re).epsilon(1e-12));
    const double sigma_series = 4.0 / k * sum_sq;

    const auto d = NystromSolver(geometry::Boundary::circle(Vec2(0, 0), 1.0), k, k, 64)
                       .solve_plane_wave(Vec2(1, 0));
    const int nq = 512;
    double sigma_biem = 0.0;
    for (int i = 0; i < nq; ++i)
        sigma_biem += std::norm(far_field_biem(d, unit_from_angle(2.0 * M_PI * i / nq)));
    sigma_biem *= 2.0 * M_PI / nq;
    CHECK(sigma_biem == doctest::Approx(sigma_series).epsilon(1e-5));
}

TEST_CASE("combined-layer potential matches the far field at |x| = 50")
{
    const double k = 1.0;
    const auto d = NystromSolver(geometry::Boundary::ellipse(2.0, 1.0), k, k, 64)
                       .solve_plane_wave(Vec2(1, 0));
    for (double th : {0.2, 1.5, 3.0, 4.8}) {
        const Vec2 ap = unit_from_angle(th);
        const cplx a = far_field_biem(d, ap);
        const cplx u = exterior_field(d, 50.0 * ap);
        CHECK(std::abs(u - a * expi(k * 50.0) / std::sqrt(50.0)) <= 5.0 * std::abs(a) / 50.0);
    }
}

TEST_CASE("non-smooth boundaries are rejected")
{
    const auto tri =
        geometry::Boundary::triangle(Vec2(-1.0, 0.0), Vec2(1.0, 1.0), Vec2(1.0, -1.0));
    CHECK_THROWS_AS(NystromSolver(tri, 1.0, 1.0, 64), std::invalid_argument);
}
