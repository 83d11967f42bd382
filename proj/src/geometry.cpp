#include "helmscat/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace helmscat::geometry {

namespace {

double wrap_2pi(double t)
{
    t = std::fmod(t, 2.0 * M_PI);
    return t < 0.0 ? t + 2.0 * M_PI : t;
}

} // namespace

Boundary Boundary::circle(const Vec2& center, double radius)
{
    if (radius <= 0.0) throw std::invalid_argument("geometry: circle radius must be positive");
    Boundary b;
    b.kind_ = Kind::Circle;
    b.center_ = center;
    b.radius_ = radius;
    return b;
}

Boundary Boundary::ellipse(double a, double bb)
{
    if (a <= 0.0 || bb <= 0.0) throw std::invalid_argument("geometry: ellipse semi-axes must be positive");
    Boundary b;
    b.kind_ = Kind::Ellipse;
    b.a_ = a;
    b.b_ = bb;
    return b;
}

Boundary Boundary::kite(const Vec2& center, double a1, double a2, double b1)
{
    Boundary b;
    b.kind_ = Kind::Kite;
    b.center_ = center;
    b.a_ = a1;
    b.a2_ = a2;
    b.b_ = b1;
    return b;
}

Boundary Boundary::triangle(const Vec2& v1, const Vec2& v2, const Vec2& v3)
{
    Boundary b;
    b.kind_ = Kind::Triangle;
    // Normalize to counterclockwise so winding numbers and outward
    // normals follow the same convention as the smooth kinds.
    const double area2 = (v2 - v1).x() * (v3 - v1).y() - (v2 - v1).y() * (v3 - v1).x();
    if (std::abs(area2) < 1e-14) throw std::invalid_argument("geometry: degenerate triangle");
    b.verts_[0] = v1;
    b.verts_[1] = area2 > 0.0 ? v2 : v3;
    b.verts_[2] = area2 > 0.0 ? v3 : v2;
    return b;
}

Boundary Boundary::sampled(std::vector<double> params, std::vector<Vec2> points)
{
    if (params.size() != points.size() || params.size() < 3)
        throw std::invalid_argument("geometry: sampled boundary needs matching t/point lists");
    Boundary b;
    b.kind_ = Kind::Sampled;
    b.sample_t_ = std::move(params);
    b.sample_p_ = std::move(points);
    return b;
}

Vec2 Boundary::point(double t) const
{
    t = wrap_2pi(t);
    switch (kind_) {
        case Kind::Circle:
            return center_ + radius_ * Vec2(std::cos(t), std::sin(t));
        case Kind::Ellipse:
            return Vec2(a_ * std::cos(t), b_ * std::sin(t));
        case Kind::Kite:
            return center_ + Vec2(a_ * std::cos(t) + a2_ * std::cos(2.0 * t), b_ * std::sin(t));
        case Kind::Triangle: {
            const double seg = 2.0 * M_PI / 3.0;
            int e = static_cast<int>(t / seg);
            if (e > 2) e = 2;
            const double s = (t - e * seg) / seg;
            return (1.0 - s) * verts_[e] + s * verts_[(e + 1) % 3];
        }
        case Kind::Sampled: {
            // Linear interpolation on the stored (t_i, p_i) table.
            const auto& ts = sample_t_;
            size_t hi = 0;
            while (hi < ts.size() && ts[hi] <= t) ++hi;
            const size_t i0 = (hi == 0) ? ts.size() - 1 : hi - 1;
            const size_t i1 = hi % ts.size();
            double t0 = ts[i0], t1 = ts[i1];
            if (i1 <= i0) t1 += 2.0 * M_PI; // wrap segment
            double tt = t;
            if (tt < t0) tt += 2.0 * M_PI;
            const double s = (t1 > t0) ? (tt - t0) / (t1 - t0) : 0.0;
            return (1.0 - s) * sample_p_[i0] + s * sample_p_[i1];
        }
    }
    throw std::logic_error("geometry: unknown boundary kind");
}

Vec2 Boundary::tangent(double t) const
{
    t = wrap_2pi(t);
    switch (kind_) {
        case Kind::Circle:
            return radius_ * Vec2(-std::sin(t), std::cos(t));
        case Kind::Ellipse:
            return Vec2(-a_ * std::sin(t), b_ * std::cos(t));
        case Kind::Kite:
            return Vec2(-a_ * std::sin(t) - 2.0 * a2_ * std::sin(2.0 * t), b_ * std::cos(t));
        case Kind::Triangle: {
            const double seg = 2.0 * M_PI / 3.0;
            const double pos = t / seg;
            const double frac = pos - std::floor(pos + 0.5);
            if (std::abs(frac) < 1e-9 / seg)
                throw std::domain_error("geometry: tangent undefined at a triangle vertex");
            int e = static_cast<int>(pos);
            if (e > 2) e = 2;
            return (verts_[(e + 1) % 3] - verts_[e]) / seg;
        }
        case Kind::Sampled:
            throw std::domain_error("geometry: sampled boundaries have no tangents");
    }
    throw std::logic_error("geometry: unknown boundary kind");
}

Vec2 Boundary::second_derivative(double t) const
{
    t = wrap_2pi(t);
    switch (kind_) {
        case Kind::Circle:
            return -radius_ * Vec2(std::cos(t), std::sin(t));
        case Kind::Ellipse:
            return Vec2(-a_ * std::cos(t), -b_ * std::sin(t));
        case Kind::Kite:
            return Vec2(-a_ * std::cos(t) - 4.0 * a2_ * std::cos(2.0 * t), -b_ * std::sin(t));
        default:
            throw std::domain_error("geometry: second derivative requires a smooth boundary");
    }
}

Vec2 Boundary::normal(double t) const
{
    const Vec2 d = tangent(t);
    const double len = d.norm();
    if (len <= 0.0) throw std::domain_error("geometry: vanishing tangent");
    // Outward for counterclockwise parametrization.
    return Vec2(d.y(), -d.x()) / len;
}

int winding_number(const Boundary& b, const Vec2& p, int samples)
{
    double total = 0.0;
    Vec2 prev = b.point(0.0) - p;
    for (int i = 1; i <= samples; ++i) {
        const Vec2 cur = b.point(2.0 * M_PI * i / samples) - p;
        const double cross = prev.x() * cur.y() - prev.y() * cur.x();
        const double dot = prev.dot(cur);
        total += std::atan2(cross, dot);
        prev = cur;
    }
    return static_cast<int>(std::lround(total / (2.0 * M_PI)));
}

std::vector<Vec2> interior_poles(const Boundary& b, int count, double scale)
{
    if (count < 1) throw std::invalid_argument("geometry: pole count must be positive");
    if (scale <= 0.0 || scale >= 1.0)
        throw std::invalid_argument("geometry: pole scale must lie in (0,1)");
    std::vector<Vec2> poles;
    poles.reserve(count);
    for (int j = 1; j <= count; ++j) {
        const Vec2 x = scale * b.point(2.0 * M_PI * (j - 1) / count);
        if (winding_number(b, x) != 1)
            throw std::invalid_argument("geometry: pole " + std::to_string(j) +
                                        " is not strictly inside the boundary");
        poles.push_back(x);
    }
    return poles;
}

double support_function_exact(const Boundary& b, const Vec2& l)
{
    switch (b.kind()) {
        case Boundary::Kind::Circle:
            return b.circle_center().dot(l) - b.circle_radius();
        case Boundary::Kind::Ellipse: {
            const double a = b.ellipse_a(), bb = b.ellipse_b();
            return -std::sqrt(a * a * l.x() * l.x() + bb * bb * l.y() * l.y());
        }
        default:
            throw std::invalid_argument("geometry: closed-form support function only for circle/ellipse");
    }
}

GratingProfile GratingProfile::standard(int which, double period)
{
    if (which < 1 || which > 4) throw std::invalid_argument("geometry: profile kind must be 1..4");
    if (period <= 0.0) throw std::invalid_argument("geometry: period must be positive");
    GratingProfile p;
    p.kind_ = which;
    p.period_ = period;
    return p;
}

double GratingProfile::height(double x) const
{
    const double L = period_;
    x = std::fmod(x, L);
    if (x < 0.0) x += L;
    switch (kind_) {
        case 1: return std::sin(2.0 * x);
        case 2: return std::sin(0.2 * x);
        case 3: return (x <= L / 2.0) ? x : L - x;
        default: return x; // sawtooth
    }
}

GratingDiscretization profile_nodes_and_poles(const GratingProfile& p, int n_nodes, int n_poles)
{
    if (n_nodes != 4 * n_poles)
        throw std::invalid_argument("geometry: node count must equal 4x pole count");
    if (p.kind() == 4 && n_nodes % 2 != 0)
        throw std::invalid_argument("geometry: profile 4 needs an even node count");

    const double L = p.period();
    GratingDiscretization d;
    d.nodes.reserve(n_nodes);

    if (p.kind() == 4) {
        // Half the nodes on the slant y = x (up to and including the
        // top corner), half on the wall x = L.
        for (int i = 1; i <= n_nodes / 2; ++i) {
            const double t = 2.0 * i * L / n_nodes;
            d.nodes.emplace_back(t, t);
        }
        for (int i = n_nodes / 2 + 1; i <= n_nodes; ++i) {
            const double y = 2.0 * (i - n_nodes / 2) * L / n_nodes;
            d.nodes.emplace_back(L, y);
        }
    } else {
        for (int i = 1; i <= n_nodes; ++i) {
            const double t = i * L / n_nodes;
            d.nodes.emplace_back(t, p.height(t));
        }
    }

    const Vec2 shift = (p.kind() == 4) ? Vec2(-0.03, -0.05) : Vec2(0.0, -0.1);
    d.poles.reserve(n_poles);
    for (int m = 1; m <= n_poles; ++m) {
        const Vec2 xi = d.nodes[static_cast<size_t>(4 * m - 1)] + shift;
        if (xi.y() >= p.height(xi.x()))
            throw std::invalid_argument("geometry: pole " + std::to_string(m) +
                                        " is not below the profile");
        d.poles.push_back(xi);
    }
    return d;
}

} // namespace helmscat::geometry
