#pragma once

#include "helmscat/config.hpp"
#include "helmscat/data_io.hpp"
#include "helmscat/geometry.hpp"
#include "helmscat/oracles.hpp"

#include <string>
#include <vector>

namespace helmscat::cli {

// Builds a Boundary from shape keys (shape = circle | ellipse | kite |
// triangle plus the kind's parameters), looking a key up in `sec` first
// and falling back to `defaults`.
geometry::Boundary build_boundary(const ConfigSection& sec, const ConfigSection& defaults);

enum class Engine { Analytic, Biem, Mrc };

Engine engine_from_string(const std::string& name);

struct SynthesisOptions {
    Engine engine = Engine::Analytic;
    oracles::CircleScatterer::BC bc = oracles::CircleScatterer::BC::Dirichlet;
    double robin_h = 0.0;
    int n_in = 120;
    int n_out = 120;
    // MRC engine knobs
    int poles = 4;
    double pole_scale = 0.7;
    int order = 5;
    int knots = 720;
    double w_min = 1e-8;
    // BIEM engine knob
    int biem_n = 64;
};

// Full scattering-amplitude grid A(theta_j, beta_i) for one shape.
// The analytic engine handles circles (both boundary conditions); the
// BIEM engine smooth Dirichlet shapes; the MRC engine factors its basis
// once and re-solves per incident direction, translating off-center
// shapes via A_shifted = e^{i k (alpha - alpha') . c} A_centered.
FarFieldFile synthesize_far_field(const geometry::Boundary& shape, double k,
                                  const SynthesisOptions& opt);

struct RunResult {
    std::vector<std::string> outputs; // files written, relative to out_dir
    std::string manifest;             // manifest file name
};

// Executes one experiment config; writes data files and a JSON manifest
// under out_dir.
RunResult run(const Config& cfg, const std::string& out_dir);

} // namespace helmscat::cli
