#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helmscat/lstsq.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

using namespace helmscat::lstsq;
using cplx = std::complex<double>;

namespace {

CMatrix random_matrix(int m, int n, unsigned seed)
{
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    CMatrix a(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = cplx(dist(gen), dist(gen));
    return a;
}

CVector random_vector(int m, unsigned seed)
{
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    CVector b(m);
    for (int i = 0; i < m; ++i) b(i) = cplx(dist(gen), dist(gen));
    return b;
}

// Cyclic Jacobi eigensolver for Hermitian matrices; the independent
// route for checking singular values via eig(A^H A).
std::vector<double> hermitian_eigenvalues(CMatrix h)
{
    const int n = static_cast<int>(h.rows());
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(h(p, q));
        if (off < 1e-26) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx hpq = h(p, q);
                if (std::abs(hpq) < 1e-300) continue;
                // Unitary 2x2 rotation annihilating h(p,q).
                const double app = h(p, p).real(), aqq = h(q, q).real();
                const cplx phase = hpq / std::abs(hpq);
                const double apq = std::abs(hpq);
                const double theta = 0.5 * std::atan2(2.0 * apq, aqq - app);
                const double c = std::cos(theta), s = std::sin(theta);
                // Columns: [p q] -> [c p - s conj(phase) q, s phase p + c q]
                CMatrix g = CMatrix::Identity(n, n);
                g(p, p) = c;
                g(p, q) = s * phase;
                g(q, p) = -s * std::conj(phase);
                g(q, q) = c;
                h = g.adjoint() * h * g;
            }
        }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = h(i, i).real();
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    return ev;
}

} // namespace

TEST_CASE("identity and diagonal singular values")
{
    CMatrix eye = CMatrix::Identity(3, 3);
    auto dec = svd(eye);
    for (int i = 0; i < 3; ++i) CHECK(dec.w(i) == doctest::Approx(1.0).epsilon(1e-14));

    CMatrix d = CMatrix::Zero(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 2.0;
    auto dd = svd(d);
    CHECK(dd.w(0) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(dd.w(1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(dd.w(2) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("reconstruction, orthonormality, and eigenvalue oracle on random 8x5")
{
    const CMatrix a = random_matrix(8, 5, 11);
    const auto dec = svd(a);

    CMatrix rec = dec.u * dec.w.asDiagonal() * dec.v.adjoint();
    CHECK((rec - a).norm() <= 1e-10 * a.norm());
    CHECK((dec.u.adjoint() * dec.u - CMatrix::Identity(5, 5)).norm() < 1e-10);
    CHECK((dec.v.adjoint() * dec.v - CMatrix::Identity(5, 5)).norm() < 1e-10);

    // Independent route: singular values are sqrt of eig(A^H A).
    const auto ev = hermitian_eigenvalues(a.adjoint() * a);
    for (int i = 0; i < 5; ++i)
        CHECK(dec.w(i) == doctest::Approx(std::sqrt(std::max(0.0, ev[i]))).epsilon(1e-9));

    // Descending order.
    for (int i = 0; i + 1 < 5; ++i) CHECK(dec.w(i) >= dec.w(i + 1));

    // Phase convention: largest-magnitude entry of each right vector real positive.
    for (int j = 0; j < 5; ++j) {
        Eigen::Index imax = 0;
        dec.v.col(j).cwiseAbs().maxCoeff(&imax);
        CHECK(dec.v(imax, j).imag() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(dec.v(imax, j).real() > 0.0);
    }
}

TEST_CASE("identity solve returns b exactly")
{
    const CVector b = random_vector(6, 3);
    SpectralLsqProblem p{CMatrix::Identity(6, 6), b, 0.0, 0.0};
    const auto sol = solve_spectral(p);
    CHECK((sol.c - b).norm() < 1e-12);
    CHECK(sol.r_min < 1e-12);
}

TEST_CASE("exact rank deficiency is excluded by the cutoff")
{
    CMatrix a = random_matrix(10, 4, 21);
    a.col(3) = a.col(1); // duplicated column
    const CVector b = random_vector(10, 22);
    SpectralLsqProblem p{a, b, 1e-12, 0.0};
    const auto sol = solve_spectral(p);
    CHECK(sol.rank_used <= 3);
    CHECK(sol.c.allFinite());
    CHECK((a * sol.c - b).norm() / std::sqrt(10.0) == doctest::Approx(sol.r_min).epsilon(1e-10));
}

TEST_CASE("full-rank solution matches the normal-equations oracle")
{
    const CMatrix a = random_matrix(20, 7, 5);
    const CVector b = random_vector(20, 6);
    SpectralLsqProblem p{a, b, 0.0, 0.0};
    const auto sol = solve_spectral(p);

    // Independent oracle: c = (A^H A)^{-1} A^H b by LU.
    const CMatrix gram = a.adjoint() * a;
    const CVector oracle = gram.partialPivLu().solve(a.adjoint() * b);
    CHECK((sol.c - oracle).norm() < 1e-8);
}

TEST_CASE("residual monotonicity and cutoff behaviour")
{
    const CMatrix a = random_matrix(16, 9, 31);
    const CVector b = random_vector(16, 32);
    const auto dec = svd(a);

    double prev = 1e300;
    for (int p = 1; p <= 9; ++p) {
        // Emulate rank-p retention by an epsilon no residual reaches,
        // then read the p-step residual from a w_min between w_{p-1} and w_p.
        const double wmin = (p < 9) ? 0.5 * (dec.w(p - 1) + dec.w(p)) : 0.0;
        const auto sol = solve_spectral(dec, b, wmin, 0.0);
        CHECK(sol.rank_used == p);
        CHECK(sol.r_min <= prev + 1e-14);
        prev = sol.r_min;
    }

    // Raising w_min above the smallest retained value cannot lower the residual.
    const auto full = solve_spectral(dec, b, 0.0, 0.0);
    const auto cut = solve_spectral(dec, b, dec.w(4), 0.0);
    CHECK(cut.rank_used <= 5);
    CHECK(cut.r_min >= full.r_min - 1e-14);
}

TEST_CASE("optimality at full retained rank")
{
    const CMatrix a = random_matrix(14, 6, 41);
    const CVector b = random_vector(14, 42);
    const auto sol = solve_spectral({a, b, 0.0, 0.0});
    const double direct = (a * sol.c - b).norm() / std::sqrt(14.0);
    CHECK(direct == doctest::Approx(sol.r_min).epsilon(1e-10));

    // Reported residual agrees with the projection form.
    const auto dec = svd(a);
    const CVector beta = dec.u.adjoint() * b;
    double captured = 0.0;
    for (int i = 0; i < sol.rank_used; ++i) captured += std::norm(beta(i));
    const double proj = std::sqrt(std::max(0.0, b.squaredNorm() - captured) / 14.0);
    CHECK(std::abs(proj - sol.r_min) < 1e-12);
}

TEST_CASE("epsilon stopping retains the minimal rank")
{
    const CMatrix a = random_matrix(12, 8, 51);
    const CVector b = random_vector(12, 52);
    const auto dec = svd(a);
    const auto full = solve_spectral(dec, b, 0.0, 0.0);
    const double eps = full.r_min * 3.0;
    const auto stopped = solve_spectral(dec, b, 0.0, eps);
    CHECK(stopped.converged);
    CHECK(stopped.rank_used <= full.rank_used);
    CHECK(stopped.r_min <= eps);

    const auto hopeless = solve_spectral(dec, b, 0.0, full.r_min * 0.01);
    CHECK_FALSE(hopeless.converged);
    CHECK(hopeless.rank_used == full.rank_used);
}

TEST_CASE("determinism: identical inputs give identical results")
{
    const CMatrix a = random_matrix(15, 7, 61);
    const CVector b = random_vector(15, 62);
    const auto s1 = solve_spectral({a, b, 1e-10, 0.0});
    const auto s2 = solve_spectral({a, b, 1e-10, 0.0});
    CHECK(s1.r_min == s2.r_min);
    for (int i = 0; i < 7; ++i) {
        CHECK(s1.c(i).real() == s2.c(i).real());
        CHECK(s1.c(i).imag() == s2.c(i).imag());
    }
}
