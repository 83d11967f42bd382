#include "helmscat/lstsq.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace helmscat::lstsq {

Svd svd(const CMatrix& a)
{
    if (a.rows() < 1 || a.cols() < 1)
        throw std::invalid_argument("lstsq: empty matrix");
    if (!a.allFinite())
        throw std::runtime_error("lstsq: non-finite matrix entry");

    Eigen::JacobiSVD<CMatrix> dec(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (dec.info() != Eigen::Success)
        throw std::runtime_error("lstsq: SVD failed to converge");

    Svd out;
    out.u = dec.matrixU();
    out.w = dec.singularValues();
    out.v = dec.matrixV();

    // Phase convention: largest-magnitude entry (first such index) of
    // each right singular vector made real positive.
    const auto n = out.v.cols();
    for (Eigen::Index j = 0; j < n; ++j) {
        Eigen::Index imax = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < out.v.rows(); ++i) {
            const double m = std::abs(out.v(i, j));
            if (m > best) {
                best = m;
                imax = i;
            }
        }
        if (best > 0.0) {
            const std::complex<double> phase = std::conj(out.v(imax, j)) / best;
            out.v.col(j) *= phase;
            out.u.col(j) *= phase;
        }
    }
    if (!out.u.allFinite() || !out.v.allFinite() || !out.w.allFinite())
        throw std::runtime_error("lstsq: SVD produced non-finite factors");
    return out;
}

LsqSolution solve_spectral(const Svd& dec, const CVector& b, double w_min, double epsilon)
{
    const auto m = dec.u.rows();
    const auto n = dec.w.size();
    if (b.size() != m)
        throw std::invalid_argument("lstsq: rhs size mismatch");

    // Retained-candidate set: descending order makes it a prefix.
    int sigma = 0;
    while (sigma < n && dec.w(sigma) >= w_min) ++sigma;

    const CVector beta = dec.u.adjoint() * b; // beta_n = <u_n, b>
    const double bnorm2 = b.squaredNorm();
    const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));

    LsqSolution sol;
    sol.c = CVector::Zero(n);

    double captured = 0.0;
    double r = std::sqrt(std::max(0.0, bnorm2)) * inv_sqrt_m;
    int p = 0;
    sol.converged = (r <= epsilon);
    while (!sol.converged && p < sigma) {
        captured += std::norm(beta(p));
        ++p;
        r = std::sqrt(std::max(0.0, bnorm2 - captured)) * inv_sqrt_m;
        if (r <= epsilon) sol.converged = true;
    }

    for (int i = 0; i < p; ++i)
        sol.c += (beta(i) / dec.w(i)) * dec.v.col(i);

    // A c = sum_{n in P} beta_n u_n, so the residual vector is available
    // from the factors alone.  Evaluating it directly avoids the
    // cancellation that makes sqrt(||b||^2 - captured) bottom out near
    // 1e-8 ||b|| when the fit is essentially exact.
    CVector res = b;
    for (int i = 0; i < p; ++i) res -= beta(i) * dec.u.col(i);
    sol.r_min = res.norm() * inv_sqrt_m;
    sol.rank_used = p;
    return sol;
}

LsqSolution solve_spectral(const SpectralLsqProblem& p)
{
    return solve_spectral(svd(p.a), p.b, p.w_min, p.epsilon);
}

} // namespace helmscat::lstsq
