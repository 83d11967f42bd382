#pragma once

#include <Eigen/Dense>

namespace helmscat::lstsq {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Thin SVD A = U W V^H, singular values descending.  The phase of each
// singular pair is fixed so that the largest-magnitude entry of the
// right singular vector is real positive, which makes repeated runs
// bit-identical on one platform.
struct Svd {
    CMatrix u;          // M x N
    Eigen::VectorXd w;  // N, descending, nonnegative
    CMatrix v;          // N x N
};

Svd svd(const CMatrix& a);

struct SpectralLsqProblem {
    CMatrix a;
    CVector b;
    double w_min = 0.0;   // spectral cutoff; singular values below it are never used
    double epsilon = 0.0; // target normalized residual
};

struct LsqSolution {
    CVector c;
    double r_min = 0.0;   // (1/sqrt(M)) ||A c - b||
    int rank_used = 0;
    bool converged = false;
};

// Iterative spectral solve: grow the retained set one singular value at
// a time (largest first, restricted to {w_n >= w_min}), stopping as
// soon as the normalized residual drops to epsilon.  The minimizer is
// c = sum_{n in P} <u_n, b> / w_n * v_n with the inner product
// conjugating its first argument.
LsqSolution solve_spectral(const SpectralLsqProblem& p);

// Same, reusing a precomputed decomposition (one SVD, many right-hand sides).
LsqSolution solve_spectral(const Svd& dec, const CVector& b, double w_min, double epsilon);

} // namespace helmscat::lstsq
