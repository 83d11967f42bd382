#pragma once

#include "helmscat/common.hpp"

#include <vector>

namespace helmscat::geometry {

// Closed parametric boundary curve on [0, 2pi).  Smooth kinds expose
// tangents and outward normals; the triangle is piecewise linear with
// vertex parameters excluded from normal evaluation.
class Boundary {
public:
    enum class Kind { Circle, Ellipse, Kite, Triangle, Sampled };

    Boundary() = default; // unit circle at the origin

    static Boundary circle(const Vec2& center, double radius);
    static Boundary ellipse(double a, double b);
    // r(t) = center + (a1 cos t + a2 cos 2t, b1 sin t)
    static Boundary kite(const Vec2& center, double a1 = 1.0, double a2 = 0.65, double b1 = 1.5);
    static Boundary triangle(const Vec2& v1, const Vec2& v2, const Vec2& v3);
    static Boundary sampled(std::vector<double> params, std::vector<Vec2> points);

    Kind kind() const { return kind_; }
    bool smooth() const { return kind_ == Kind::Circle || kind_ == Kind::Ellipse || kind_ == Kind::Kite; }

    Vec2 point(double t) const;
    Vec2 tangent(double t) const;  // r'(t); throws at triangle vertices / sampled kind
    Vec2 second_derivative(double t) const; // r''(t), smooth kinds only
    Vec2 normal(double t) const;   // outward unit normal

    // Parameter accessors (center is shared by the circle and kite kinds).
    const Vec2& center() const { return center_; }
    const Vec2& circle_center() const { return center_; }
    double circle_radius() const { return radius_; }
    double ellipse_a() const { return a_; }
    double ellipse_b() const { return b_; }

private:
    Kind kind_ = Kind::Circle;
    Vec2 center_ = Vec2::Zero();
    double radius_ = 1.0;
    double a_ = 1.0, b_ = 1.0, a2_ = 0.0;
    Vec2 verts_[3] = {Vec2::Zero(), Vec2::Zero(), Vec2::Zero()};
    std::vector<double> sample_t_;
    std::vector<Vec2> sample_p_;
};

// Winding number of the curve around p, evaluated on a fine parameter grid.
int winding_number(const Boundary& b, const Vec2& p, int samples = 4096);

// Scaled-curve pole rule x_j = scale * r(2 pi (j-1)/count); every pole is
// verified to lie strictly inside the boundary.
std::vector<Vec2> interior_poles(const Boundary& b, int count, double scale);

// Closed-form support function d(l) = min_{x in Gamma} x . l for the
// analytic convex kinds (circle, origin-centered ellipse).
double support_function_exact(const Boundary& b, const Vec2& l);

// L-periodic grating profile y = f(x).  Kinds 1..4 are the standard
// test profiles: sin(2x), sin(0.2x), symmetric triangle, sawtooth with
// a vertical wall at x = L.
class GratingProfile {
public:
    static GratingProfile standard(int which, double period = M_PI);

    int kind() const { return kind_; }
    double period() const { return period_; }
    double height(double x) const; // f(x), periodic extension

private:
    int kind_ = 1;
    double period_ = M_PI;
};

struct GratingDiscretization {
    std::vector<Vec2> nodes; // on the profile
    std::vector<Vec2> poles; // strictly below it
};

// Nodes and poles per the per-profile rules: nodes at t_i = iL/N
// (profile 4 splits evenly between the slant and the vertical wall),
// poles at every fourth node shifted by (0,-0.1), or (-0.03,-0.05) for
// profile 4.  Requires n_nodes = 4 * n_poles.
GratingDiscretization profile_nodes_and_poles(const GratingProfile& p, int n_nodes, int n_poles);

} // namespace helmscat::geometry
