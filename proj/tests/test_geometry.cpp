#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helmscat/geometry.hpp"

#include <cmath>
#include <stdexcept>

using namespace helmscat;
using namespace helmscat::geometry;

TEST_CASE("boundary points of the standard shapes")
{
    const auto ell = Boundary::ellipse(2.0, 1.0);
    CHECK(ell.point(0.0).x() == doctest::Approx(2.0));
    CHECK(ell.point(0.0).y() == doctest::Approx(0.0));

    const auto kite = Boundary::kite(Vec2(-0.65, 0.0));
    CHECK(kite.point(0.0).x() == doctest::Approx(1.0));
    CHECK(kite.point(0.0).y() == doctest::Approx(0.0));

    const auto circ = Boundary::circle(Vec2(6.0, 2.0), 1.0);
    CHECK(circ.point(M_PI).x() == doctest::Approx(5.0));
    CHECK(circ.point(M_PI).y() == doctest::Approx(2.0));
}

TEST_CASE("triangle parametrization is closed and continuous")
{
    const auto tri = Boundary::triangle(Vec2(-1.0, 0.0), Vec2(1.0, 1.0), Vec2(1.0, -1.0));
    const Vec2 start = tri.point(0.0);
    const Vec2 end = tri.point(2.0 * M_PI - 1e-9);
    CHECK((start - end).norm() < 1e-6);
    CHECK(start.x() == doctest::Approx(-1.0));

    // Continuity across the edge joints.
    for (double tj : {2.0 * M_PI / 3.0, 4.0 * M_PI / 3.0}) {
        const Vec2 a = tri.point(tj - 1e-9);
        const Vec2 b = tri.point(tj + 1e-9);
        CHECK((a - b).norm() < 1e-6);
    }
    CHECK_THROWS_AS(tri.normal(0.0), std::domain_error);
    CHECK_THROWS_AS(tri.normal(2.0 * M_PI / 3.0), std::domain_error);
    CHECK(tri.normal(0.3).norm() == doctest::Approx(1.0));
}

TEST_CASE("normals: unit length, outward, orthogonal to finite-difference tangents")
{
    const auto shapes = {Boundary::circle(Vec2(0, 0), 1.0), Boundary::ellipse(2.0, 1.0),
                         Boundary::kite(Vec2(-0.65, 0.0))};
    CHECK(Boundary::circle(Vec2(0, 0), 1.0).normal(0.0).x() == doctest::Approx(1.0));
    CHECK(Boundary::ellipse(2.0, 1.0).normal(M_PI / 2).y() == doctest::Approx(1.0));

    const double h = 1e-6;
    for (const auto& b : shapes) {
        for (int i = 0; i < 720; ++i) {
            const double t = 2.0 * M_PI * i / 720.0;
            const Vec2 n = b.normal(t);
            CHECK(n.norm() == doctest::Approx(1.0).epsilon(1e-12));
            const Vec2 fd = (b.point(t + h) - b.point(t - h)) / (2.0 * h);
            CHECK(std::abs(n.dot(fd) / fd.norm()) < 1e-8);
        }
    }

    // Convex shapes: normal points away from the centroid.
    for (const auto& b : {Boundary::circle(Vec2(6, 2), 1.0), Boundary::ellipse(2.0, 1.0)}) {
        Vec2 centroid = Vec2::Zero();
        for (int i = 0; i < 64; ++i) centroid += b.point(2.0 * M_PI * i / 64.0) / 64.0;
        for (int i = 0; i < 64; ++i) {
            const double t = 2.0 * M_PI * i / 64.0;
            CHECK(b.normal(t).dot(b.point(t) - centroid) > 0.0);
        }
    }
}

TEST_CASE("winding numbers and simple closed curves")
{
    for (const auto& b : {Boundary::circle(Vec2(0, 0), 1.0), Boundary::ellipse(2.0, 1.0),
                          Boundary::kite(Vec2(-0.65, 0.0))}) {
        Vec2 centroid = Vec2::Zero();
        for (int i = 0; i < 256; ++i) centroid += b.point(2.0 * M_PI * i / 256.0) / 256.0;
        CHECK(winding_number(b, centroid) == 1);
        CHECK(winding_number(b, centroid + Vec2(100.0, 0.0)) == 0);
    }
}

TEST_CASE("interior pole placement follows the scaled-curve rule")
{
    const auto ell = Boundary::ellipse(2.0, 1.0);
    const auto p4 = interior_poles(ell, 4, 0.7);
    REQUIRE(p4.size() == 4);
    CHECK(p4[0].x() == doctest::Approx(1.4));
    CHECK(p4[0].y() == doctest::Approx(0.0));
    CHECK(p4[1].x() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p4[1].y() == doctest::Approx(0.7));

    const auto kite = Boundary::kite(Vec2(-0.65, 0.0));
    const auto p16 = interior_poles(kite, 16, 0.9);
    REQUIRE(p16.size() == 16);
    CHECK(p16[0].x() == doctest::Approx(0.9));
    CHECK(p16[0].y() == doctest::Approx(0.0));
    for (const auto& x : p16) CHECK(winding_number(kite, x) == 1);

    // Small scale: all poles inside, count preserved.
    CHECK(interior_poles(ell, 7, 0.05).size() == 7);
    CHECK_THROWS_AS(interior_poles(ell, 4, 1.5), std::invalid_argument);
}

TEST_CASE("closed-form support functions")
{
    const auto unit = Boundary::circle(Vec2(0, 0), 1.0);
    for (int i = 0; i < 16; ++i) {
        const Vec2 l = unit_from_angle(2.0 * M_PI * i / 16.0);
        CHECK(support_function_exact(unit, l) == doctest::Approx(-1.0));
    }
    const auto c = Boundary::circle(Vec2(6, 2), 1.0);
    CHECK(support_function_exact(c, Vec2(1, 0)) == doctest::Approx(5.0));
    CHECK(support_function_exact(c, Vec2(0, 1)) == doctest::Approx(1.0));

    const auto ell = Boundary::ellipse(2.0, 1.0);
    CHECK(support_function_exact(ell, Vec2(1, 0)) == doctest::Approx(-2.0));
    // Against the direct minimum over the curve.
    const Vec2 l = unit_from_angle(0.8);
    double direct = 1e300;
    for (int i = 0; i < 20000; ++i)
        direct = std::min(direct, ell.point(2.0 * M_PI * i / 20000.0).dot(l));
    CHECK(support_function_exact(ell, l) == doctest::Approx(direct).epsilon(1e-6));

    CHECK_THROWS_AS(support_function_exact(Boundary::kite(Vec2(0, 0)), Vec2(1, 0)),
                    std::invalid_argument);
}

TEST_CASE("grating profiles: periodicity and node/pole rules")
{
    for (int kind = 1; kind <= 4; ++kind) {
        const auto p = GratingProfile::standard(kind);
        for (double x : {0.1, 0.9, 2.3}) {
            CHECK(p.height(x + p.period()) == doctest::Approx(p.height(x)).epsilon(1e-12));
        }
    }

    const auto p1 = GratingProfile::standard(1);
    const auto d1 = profile_nodes_and_poles(p1, 256, 64);
    REQUIRE(d1.nodes.size() == 256);
    REQUIRE(d1.poles.size() == 64);
    CHECK(d1.nodes[0].x() == doctest::Approx(M_PI / 256.0));
    CHECK(d1.nodes[0].y() == doctest::Approx(std::sin(2.0 * M_PI / 256.0)));
    // Pole m sits 0.1 below node 4m.
    for (int m = 1; m <= 64; ++m) {
        CHECK(d1.poles[m - 1].x() == doctest::Approx(d1.nodes[4 * m - 1].x()));
        CHECK(d1.poles[m - 1].y() == doctest::Approx(d1.nodes[4 * m - 1].y() - 0.1));
        CHECK(d1.poles[m - 1].y() < p1.height(d1.poles[m - 1].x()));
    }

    const auto p4 = GratingProfile::standard(4);
    const auto d4 = profile_nodes_and_poles(p4, 256, 64);
    for (int i = 0; i < 128; ++i) CHECK(d4.nodes[i].y() == doctest::Approx(d4.nodes[i].x()));
    for (int i = 128; i < 256; ++i) CHECK(d4.nodes[i].x() == doctest::Approx(M_PI));
    for (const auto& xi : d4.poles) CHECK(xi.y() < p4.height(xi.x()));

    CHECK_THROWS_AS(profile_nodes_and_poles(p1, 256, 60), std::invalid_argument);
}
