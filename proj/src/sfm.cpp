#include "helmscat/sfm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace helmscat::sfm {

cplx approx_amplitude(double d, double curvature, const Vec2& alpha, const Vec2& alpha_prime,
                      double k)
{
    if (curvature <= 0.0) throw std::invalid_argument("sfm: curvature must be positive");
    const double dist = (alpha - alpha_prime).norm();
    return -0.5 * std::sqrt(dist / curvature) * expi(k * dist * d);
}

std::vector<std::pair<Vec2, Vec2>> pair_grid(const Vec2& l, int n_pairs)
{
    if (n_pairs < 2) throw std::invalid_argument("sfm: need at least two pairs");
    const double tau = std::atan2(l.y(), l.x());
    std::vector<std::pair<Vec2, Vec2>> out;
    out.reserve(n_pairs);
    // Midpoint grid on the open aperture (tau - pi/4, tau + pi/4).
    for (int i = 0; i < n_pairs; ++i) {
        const double beta = tau - M_PI / 4.0 + (i + 0.5) * (M_PI / 2.0) / n_pairs;
        const Vec2 alpha = unit_from_angle(beta);
        const Vec2 alpha_prime = alpha - 2.0 * alpha.dot(l) * l;
        out.emplace_back(alpha, alpha_prime);
    }
    return out;
}

double recover_support_dirichlet(const AmplitudePairSet& s, const SupportRecoveryOptions& opt)
{
    struct Term {
        cplx unit;
        double kd; // k |alpha - alpha'|
    };
    std::vector<Term> terms;
    for (const auto& p : s.pairs) {
        const double mag = std::abs(p.amplitude);
        if (mag == 0.0) continue; // no phase information in this pair
        terms.push_back({p.amplitude / mag, s.k * (p.alpha - p.alpha_prime).norm()});
    }
    if (terms.empty()) throw std::invalid_argument("sfm: all amplitudes vanish");

    auto psi = [&terms](double t) {
        double acc = 0.0;
        for (const auto& tm : terms) acc += std::norm(tm.unit + expi(tm.kd * t));
        return acc;
    };

    const double step = M_PI / (200.0 * s.k);
    double best_t = -opt.r_max, best_v = psi(best_t);
    for (double t = -opt.r_max + step; t <= opt.r_max + step / 2; t += step) {
        const double v = psi(t);
        if (v < best_v) {
            best_v = v;
            best_t = t;
        }
    }

    // Golden-section refinement around the winning grid cell.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = best_t - step, b = best_t + step;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = psi(x1), f2 = psi(x2);
    while (b - a > opt.golden_tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = psi(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = psi(x2);
        }
    }
    return (a + b) / 2.0;
}

RobinRecovery recover_support_robin(const AmplitudePairSet& s)
{
    if (s.pairs.size() < 5)
        throw std::invalid_argument("sfm: phase regression needs at least five pairs");

    struct Sample {
        double t;
        double phase;
    };
    std::vector<Sample> samples;
    samples.reserve(s.pairs.size());
    for (const auto& p : s.pairs) {
        if (std::abs(p.amplitude) == 0.0)
            throw std::invalid_argument("sfm: vanishing amplitude in a Robin pair");
        samples.push_back({(p.alpha - p.alpha_prime).norm(), std::arg(p.amplitude)});
    }
    std::sort(samples.begin(), samples.end(),
              [](const Sample& a, const Sample& b) { return a.t < b.t; });

    // Nearest-multiple-of-2pi continuation along the t-grid.
    for (size_t i = 1; i < samples.size(); ++i) {
        const double jump = samples[i].phase - samples[i - 1].phase;
        samples[i].phase -= 2.0 * M_PI * std::round(jump / (2.0 * M_PI));
        if (std::abs(samples[i].phase - samples[i - 1].phase) > M_PI / 2.0)
            throw std::runtime_error("sfm: phase unwrap ambiguous, pair grid too coarse");
    }

    // Least-squares line psi(t) = C1 t + C2.
    const double n = static_cast<double>(samples.size());
    double st = 0.0, sp = 0.0, stt = 0.0, stp = 0.0;
    for (const auto& smp : samples) {
        st += smp.t;
        sp += smp.phase;
        stt += smp.t * smp.t;
        stp += smp.t * smp.phase;
    }
    const double denom = n * stt - st * st;
    if (std::abs(denom) < 1e-14)
        throw std::invalid_argument("sfm: degenerate |alpha - alpha'| grid");
    const double c1 = (n * stp - st * sp) / denom;
    const double c2 = (sp - c1 * st) / n;

    return RobinRecovery{c1 / s.k, -s.k * std::tan(c2 / 2.0)};
}

std::vector<Vec2> reconstruct_boundary(const SupportSamples& s)
{
    const size_t n = s.t.size();
    if (n < 8 || s.d.size() != n)
        throw std::invalid_argument("sfm: need at least eight uniform support samples");
    const double dt = 2.0 * M_PI / static_cast<double>(n);

    std::vector<Vec2> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        const double dp = (s.d[(i + 1) % n] - s.d[(i + n - 1) % n]) / (2.0 * dt);
        const double ct = std::cos(s.t[i]), st = std::sin(s.t[i]);
        out.emplace_back(s.d[i] * ct - dp * st, s.d[i] * st + dp * ct);
    }
    return out;
}

HalfPlaneGrid localize_halfplanes(const SupportSamples& s, const Vec2& lower_left, double step,
                                  int nx, int ny)
{
    if (nx < 1 || ny < 1 || step <= 0.0)
        throw std::invalid_argument("sfm: invalid localization grid");
    HalfPlaneGrid g;
    g.x0 = lower_left.x();
    g.y0 = lower_left.y();
    g.step = step;
    g.nx = nx;
    g.ny = ny;
    g.inside.assign(static_cast<size_t>(nx) * ny, 1);

    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const Vec2 x = g.point(ix, iy);
            bool keep = true;
            for (size_t i = 0; i < s.t.size() && keep; ++i) {
                const Vec2 l = unit_from_angle(s.t[i]);
                keep = x.dot(l) >= s.d[i];
            }
            g.inside[static_cast<size_t>(iy) * nx + ix] = keep ? 1 : 0;
            g.any_marked |= keep;
        }
    }
    return g;
}

} // namespace helmscat::sfm
