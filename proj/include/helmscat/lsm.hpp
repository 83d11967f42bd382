#pragma once

#include "helmscat/common.hpp"
#include "helmscat/lstsq.hpp"

#include <vector>

namespace helmscat::lsm {

// Linear sampling indicators from the far-field matrix
// F[i][j] = A(alpha_i, beta_j) on N uniform directions.
struct FarFieldMatrix {
    int n = 0;
    double k = 1.0;
    std::vector<double> angles; // direction angles, 2 pi i / n
    lstsq::CMatrix f;
};

FarFieldMatrix make_far_field_matrix(int n, double k, const lstsq::CMatrix& f);

// f_n = (e^{i pi/4}/sqrt(8 pi k)) e^{-i k alpha_n . z}
lstsq::CVector build_rhs(const Vec2& z, const std::vector<double>& angles, double k);

// Colton-Kirsch: ||zeta||^2 = sum |(U^H f)_n|^2 / s_n^2 over retained s_n.
double zeta_norm_ck(const lstsq::Svd& dec, const lstsq::CVector& rhs, double s_min_cutoff);

// Kirsch ((F*F)^{1/4} variant): ||zeta||^2 = sum |(V^H f)_n|^2 / s_n.
double zeta_norm_kirsch(const lstsq::Svd& dec, const lstsq::CVector& rhs, double s_min_cutoff);

struct LsmScan {
    double x0 = 0.0, y0 = 0.0;
    double step = 0.0;
    int nx = 0, ny = 0;
    std::vector<double> log_ck;     // row-major log10 ||zeta||
    std::vector<double> log_kirsch;

    Vec2 point(int ix, int iy) const { return Vec2(x0 + ix * step, y0 + iy * step); }
    Vec2 argmin_ck() const;
    Vec2 argmin_kirsch() const;
};

// One SVD of F, then both indicators on every grid point.  The cutoff
// is relative to the largest singular value (underflow protection on
// noise-free synthetic data; the identification heuristic is the
// argmin, which is what locates the obstacle in practice).
LsmScan scan(const FarFieldMatrix& m, const Vec2& lower_left, double step, int nx, int ny,
             double rel_cutoff = 1e-12);

} // namespace helmscat::lsm
