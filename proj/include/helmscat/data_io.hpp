#pragma once

#include "helmscat/common.hpp"

#include <string>
#include <vector>

namespace helmscat::cli {

// Far-field sample file: header comments carry k and the grid sizes,
// then beta-major rows (beta,theta,re,im) over uniform angle grids.
struct FarFieldFile {
    double k = 1.0;
    int n_in = 0;  // incident directions beta_i = 2 pi i / n_in
    int n_out = 0; // observation directions theta_j = 2 pi j / n_out
    std::vector<cplx> a; // a[i * n_out + j] = A(theta_j, beta_i)

    double beta(int i) const { return 2.0 * M_PI * i / n_in; }
    double theta(int j) const { return 2.0 * M_PI * j / n_out; }
    cplx at(int i_in, int i_out) const { return a[static_cast<size_t>(i_in) * n_out + i_out]; }
    cplx& at(int i_in, int i_out) { return a[static_cast<size_t>(i_in) * n_out + i_out]; }
};

void write_far_field(const std::string& path, const FarFieldFile& ff);
FarFieldFile read_far_field(const std::string& path);

// Round-trip-exact decimal formatting shared by every data file.
std::string format_double(double v);

} // namespace helmscat::cli
