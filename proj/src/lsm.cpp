#include "helmscat/lsm.hpp"

#include <cmath>
#include <stdexcept>

namespace helmscat::lsm {

FarFieldMatrix make_far_field_matrix(int n, double k, const lstsq::CMatrix& f)
{
    if (n < 2 || f.rows() != n || f.cols() != n)
        throw std::invalid_argument("lsm: far-field matrix must be N x N");
    if (k <= 0.0) throw std::invalid_argument("lsm: wavenumber must be positive");
    FarFieldMatrix m;
    m.n = n;
    m.k = k;
    m.angles.resize(n);
    for (int i = 0; i < n; ++i) m.angles[i] = 2.0 * M_PI * i / n;
    m.f = f;
    return m;
}

lstsq::CVector build_rhs(const Vec2& z, const std::vector<double>& angles, double k)
{
    const cplx scale = expi(M_PI / 4.0) / std::sqrt(8.0 * M_PI * k);
    lstsq::CVector rhs(static_cast<Eigen::Index>(angles.size()));
    for (size_t i = 0; i < angles.size(); ++i)
        rhs(static_cast<Eigen::Index>(i)) = scale * expi(-k * unit_from_angle(angles[i]).dot(z));
    return rhs;
}

namespace {

double zeta_norm(const lstsq::CMatrix& basis, const Eigen::VectorXd& w,
                 const lstsq::CVector& rhs, double s_min_cutoff, bool squared_weights)
{
    const lstsq::CVector proj = basis.adjoint() * rhs;
    double acc = 0.0;
    int kept = 0;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (w(i) < s_min_cutoff) continue;
        ++kept;
        acc += std::norm(proj(i)) / (squared_weights ? w(i) * w(i) : w(i));
    }
    if (kept == 0) throw std::runtime_error("lsm: spectral cutoff removed every singular value");
    return std::sqrt(acc);
}

} // namespace

double zeta_norm_ck(const lstsq::Svd& dec, const lstsq::CVector& rhs, double s_min_cutoff)
{
    return zeta_norm(dec.u, dec.w, rhs, s_min_cutoff, true);
}

double zeta_norm_kirsch(const lstsq::Svd& dec, const lstsq::CVector& rhs, double s_min_cutoff)
{
    return zeta_norm(dec.v, dec.w, rhs, s_min_cutoff, false);
}

Vec2 LsmScan::argmin_ck() const
{
    int best = 0;
    for (size_t i = 1; i < log_ck.size(); ++i)
        if (log_ck[i] < log_ck[best]) best = static_cast<int>(i);
    return point(best % nx, best / nx);
}

Vec2 LsmScan::argmin_kirsch() const
{
    int best = 0;
    for (size_t i = 1; i < log_kirsch.size(); ++i)
        if (log_kirsch[i] < log_kirsch[best]) best = static_cast<int>(i);
    return point(best % nx, best / nx);
}

LsmScan scan(const FarFieldMatrix& m, const Vec2& lower_left, double step, int nx, int ny,
             double rel_cutoff)
{
    if (nx < 1 || ny < 1 || step <= 0.0) throw std::invalid_argument("lsm: invalid scan grid");
    const auto dec = lstsq::svd(m.f);
    const double cutoff = rel_cutoff * dec.w(0);

    LsmScan out;
    out.x0 = lower_left.x();
    out.y0 = lower_left.y();
    out.step = step;
    out.nx = nx;
    out.ny = ny;
    out.log_ck.resize(static_cast<size_t>(nx) * ny);
    out.log_kirsch.resize(static_cast<size_t>(nx) * ny);

    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const lstsq::CVector rhs = build_rhs(out.point(ix, iy), m.angles, m.k);
            const size_t idx = static_cast<size_t>(iy) * nx + ix;
            out.log_ck[idx] = std::log10(zeta_norm_ck(dec, rhs, cutoff));
            out.log_kirsch[idx] = std::log10(zeta_norm_kirsch(dec, rhs, cutoff));
        }
    }
    return out;
}

} // namespace helmscat::lsm
