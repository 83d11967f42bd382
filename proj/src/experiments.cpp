#include "helmscat/experiments.hpp"

#include "helmscat/biem.hpp"
#include "helmscat/grating.hpp"
#include "helmscat/lsm.hpp"
#include "helmscat/mrc.hpp"
#include "helmscat/sfm.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace helmscat::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Case-then-globals key lookup.
struct Scope {
    const ConfigSection& sec;
    const ConfigSection& glob;

    std::string require(const std::string& key) const
    {
        if (auto v = sec.get(key)) return *v;
        return glob.require(key);
    }
    std::string get(const std::string& key, const std::string& fallback) const
    {
        if (auto v = sec.get(key)) return *v;
        if (auto v = glob.get(key)) return *v;
        return fallback;
    }
    double num(const std::string& key, double fallback) const
    {
        if (sec.get(key)) return sec.get_double(key, fallback);
        return glob.get_double(key, fallback);
    }
    double require_num(const std::string& key) const
    {
        require(key);
        return num(key, 0.0);
    }
    int integer(const std::string& key, int fallback) const
    {
        if (sec.get(key)) return sec.get_int(key, fallback);
        return glob.get_int(key, fallback);
    }
    bool boolean(const std::string& key, bool fallback) const
    {
        if (sec.get(key)) return sec.get_bool(key, fallback);
        return glob.get_bool(key, fallback);
    }
    bool has(const std::string& key) const { return sec.get(key) || glob.get(key); }
};

std::ofstream open_output(const fs::path& path)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("experiments: cannot write '" + path.string() + "'");
    return out;
}

void write_manifest(const fs::path& path, const json& j)
{
    auto out = open_output(path);
    out << j.dump(2) << "\n";
}

geometry::Boundary boundary_from(const Scope& s)
{
    const std::string kind = s.require("shape");
    if (kind == "ellipse")
        return geometry::Boundary::ellipse(s.require_num("a"), s.require_num("b"));
    if (kind == "circle")
        return geometry::Boundary::circle(Vec2(s.num("cx", 0.0), s.num("cy", 0.0)),
                                          s.require_num("radius"));
    if (kind == "kite")
        return geometry::Boundary::kite(Vec2(s.num("cx", 0.0), s.num("cy", 0.0)));
    if (kind == "triangle")
        return geometry::Boundary::triangle(Vec2(s.num("x1", -1.0), s.num("y1", 0.0)),
                                            Vec2(s.num("x2", 1.0), s.num("y2", 1.0)),
                                            Vec2(s.num("x3", 1.0), s.num("y3", -1.0)));
    throw std::invalid_argument("experiments: unknown shape '" + kind + "'");
}

// Shape whose scaled-curve pole rule is known to stay interior, plus
// the translation back to the requested placement.
std::pair<geometry::Boundary, Vec2> centered_copy(const geometry::Boundary& b)
{
    switch (b.kind()) {
        case geometry::Boundary::Kind::Circle:
            return {geometry::Boundary::circle(Vec2(0, 0), b.circle_radius()),
                    b.circle_center()};
        case geometry::Boundary::Kind::Kite: {
            const Vec2 home(-0.65, 0.0);
            return {geometry::Boundary::kite(home), b.center() - home};
        }
        default:
            return {b, Vec2(0, 0)};
    }
}

json vec_json(const Vec2& v) { return json::array({v.x(), v.y()}); }

} // namespace

geometry::Boundary build_boundary(const ConfigSection& sec, const ConfigSection& defaults)
{
    return boundary_from(Scope{sec, defaults});
}

Engine engine_from_string(const std::string& name)
{
    if (name == "analytic") return Engine::Analytic;
    if (name == "biem") return Engine::Biem;
    if (name == "mrc") return Engine::Mrc;
    throw std::invalid_argument("experiments: unknown engine '" + name + "'");
}

FarFieldFile synthesize_far_field(const geometry::Boundary& shape, double k,
                                  const SynthesisOptions& opt)
{
    if (opt.n_in < 1 || opt.n_out < 1)
        throw std::invalid_argument("experiments: direction grids must be nonempty");

    FarFieldFile ff;
    ff.k = k;
    ff.n_in = opt.n_in;
    ff.n_out = opt.n_out;
    ff.a.assign(static_cast<size_t>(opt.n_in) * opt.n_out, cplx(0.0, 0.0));

    switch (opt.engine) {
        case Engine::Analytic: {
            if (shape.kind() != geometry::Boundary::Kind::Circle)
                throw std::invalid_argument("experiments: analytic engine handles circles only");
            const auto s = (opt.bc == oracles::CircleScatterer::BC::Dirichlet)
                               ? oracles::CircleScatterer::dirichlet(shape.circle_center(),
                                                                     shape.circle_radius())
                               : oracles::CircleScatterer::robin(shape.circle_center(),
                                                                 shape.circle_radius(),
                                                                 opt.robin_h);
            for (int i = 0; i < opt.n_in; ++i) {
                const Vec2 alpha = unit_from_angle(ff.beta(i));
                for (int j = 0; j < opt.n_out; ++j)
                    ff.at(i, j) =
                        oracles::circle_amplitude(s, k, unit_from_angle(ff.theta(j)), alpha);
            }
            return ff;
        }
        case Engine::Biem: {
            if (opt.bc != oracles::CircleScatterer::BC::Dirichlet)
                throw std::invalid_argument("experiments: BIEM engine is Dirichlet-only");
            biem::NystromSolver solver(shape, k, k, opt.biem_n);
            for (int i = 0; i < opt.n_in; ++i) {
                const auto density = solver.solve_plane_wave(unit_from_angle(ff.beta(i)));
                for (int j = 0; j < opt.n_out; ++j)
                    ff.at(i, j) = biem::far_field_biem(density, unit_from_angle(ff.theta(j)));
            }
            return ff;
        }
        case Engine::Mrc: {
            if (opt.bc != oracles::CircleScatterer::BC::Dirichlet)
                throw std::invalid_argument("experiments: MRC engine is Dirichlet-only");
            const auto [centered, shift] = centered_copy(shape);
            mrc::DirectProblem p;
            p.boundary = centered;
            p.k = k;
            p.order = opt.order;
            p.pole_count = opt.poles;
            p.pole_scale = opt.pole_scale;
            p.knot_count = opt.knots;
            p.w_min = opt.w_min;
            const mrc::DirectFactorization fact(p);
            for (int i = 0; i < opt.n_in; ++i) {
                const Vec2 alpha = unit_from_angle(ff.beta(i));
                const auto solved = fact.solve(alpha);
                for (int j = 0; j < opt.n_out; ++j) {
                    const Vec2 ap = unit_from_angle(ff.theta(j));
                    ff.at(i, j) = mrc::far_field(solved.expansion, ap) *
                                  expi(k * (alpha - ap).dot(shift));
                }
            }
            return ff;
        }
    }
    throw std::logic_error("experiments: unreachable engine");
}

namespace {

// ---------------------------------------------------------------- direct-mrc

RunResult run_direct_mrc(const Config& cfg, const fs::path& out_dir)
{
    const auto& g = cfg.globals;
    const std::string output = g.require("output");
    RunResult result;
    json cases = json::array();

    auto table = open_output(out_dir / (output + ".csv"));
    table << "case,J,k,alpha_x,alpha_y,r_min,rank_used,converged,reference\n";

    for (const auto* sec : cfg.sections_named("case")) {
        const Scope s{*sec, g};
        const auto t0 = Clock::now();

        mrc::DirectProblem p;
        p.boundary = boundary_from(s);
        p.k = s.require_num("k");
        p.alpha = unit_from_angle(s.require_num("alpha"));
        p.order = s.integer("order", 5);
        p.pole_count = s.integer("poles", 4);
        p.pole_scale = s.num("pole_scale", 0.7);
        p.knot_count = s.integer("knots", 720);
        p.w_min = s.num("w_min", 1e-8);
        p.epsilon = s.num("epsilon", 0.0);

        const auto solved = mrc::solve_direct(p);
        const double reference = s.num("reference", 0.0);

        table << sec->name.substr(5) << ',' << p.pole_count << ',' << format_double(p.k) << ','
              << format_double(p.alpha.x()) << ',' << format_double(p.alpha.y()) << ','
              << format_double(solved.solution.r_min) << ',' << solved.solution.rank_used << ','
              << (solved.solution.converged ? 1 : 0) << ',' << format_double(reference) << '\n';

        json c = {{"name", sec->name},
                  {"r_min", solved.solution.r_min},
                  {"rank_used", solved.solution.rank_used},
                  {"converged", solved.solution.converged},
                  {"reference", reference},
                  {"seconds", seconds_since(t0)}};

        if (s.get("compare", "") == "biem") {
            biem::NystromSolver ns(p.boundary, p.k, p.k, 64);
            const auto density = ns.solve_plane_wave(p.alpha);
            double worst = 0.0;
            for (int i = 0; i < 64; ++i) {
                const Vec2 ap = unit_from_angle(2.0 * M_PI * i / 64.0);
                const cplx ref = biem::far_field_biem(density, ap);
                worst = std::max(worst,
                                 std::abs(mrc::far_field(solved.expansion, ap) - ref) /
                                     std::abs(ref));
            }
            c["max_rel_dev_vs_biem"] = worst;
        }

        if (auto out_name = sec->get("expansion_out")) {
            json e = {{"k", solved.expansion.k},
                      {"order", solved.expansion.order},
                      {"poles", json::array()},
                      {"coefficients", json::array()}};
            for (const auto& xj : solved.expansion.poles) e["poles"].push_back(vec_json(xj));
            for (const auto& cl : solved.expansion.coefficients) {
                e["coefficients"].push_back(cl.real());
                e["coefficients"].push_back(cl.imag());
            }
            write_manifest(out_dir / *out_name, e);
            result.outputs.push_back(*out_name);
        }
        cases.push_back(std::move(c));
    }
    result.outputs.insert(result.outputs.begin(), output + ".csv");

    json manifest = {{"schema", 1},
                     {"experiment", "direct-mrc"},
                     {"source", cfg.source_name},
                     {"outputs", result.outputs},
                     {"cases", std::move(cases)}};
    result.manifest = output + "_manifest.json";
    write_manifest(out_dir / result.manifest, manifest);
    return result;
}

// --------------------------------------------------------------- grating-mrc

RunResult run_grating_mrc(const Config& cfg, const fs::path& out_dir)
{
    const auto& g = cfg.globals;
    const std::string output = g.require("output");
    RunResult result;
    json cases = json::array();

    auto table = open_output(out_dir / (output + ".csv"));
    table << "case,profile,theta,r_min,rank_used,converged,reference\n";

    for (const auto* sec : cfg.sections_named("case")) {
        const Scope s{*sec, g};
        const auto t0 = Clock::now();

        const int profile_kind = s.integer("profile", 1);
        const double theta = s.require_num("theta");
        const double k = s.require_num("k");
        int nodes = s.integer("nodes", 256);
        int poles = s.integer("poles", 64);
        const double w_min = s.num("w_min", 1e-8);
        const double epsilon = s.num("epsilon", 0.0);

        const auto problem = grating::make_problem(geometry::GratingProfile::standard(profile_kind),
                                                   k, theta, s.num("b_depth", 1.2),
                                                   s.integer("jmax", 120));
        auto solved = grating::solve_grating(problem, nodes, poles, w_min, epsilon);
        bool refined = false;
        if (s.boolean("refine", false) && !solved.solution.converged && epsilon > 0.0) {
            nodes *= 2;
            poles *= 2;
            solved = grating::solve_grating(problem, nodes, poles, w_min, epsilon);
            refined = true;
        }
        const double reference = s.num("reference", 0.0);

        table << sec->name.substr(5) << ',' << profile_kind << ',' << format_double(theta) << ','
              << format_double(solved.solution.r_min) << ',' << solved.solution.rank_used << ','
              << (solved.solution.converged ? 1 : 0) << ',' << format_double(reference) << '\n';

        json modes = json::array();
        for (int j = -8; j <= 8; ++j) {
            const auto md = grating::mode(problem, j);
            modes.push_back({{"j", md.j},
                             {"lambda", md.lambda},
                             {"mu_re", md.mu.real()},
                             {"mu_im", md.mu.imag()},
                             {"propagating", md.propagating}});
        }
        cases.push_back({{"name", sec->name},
                         {"r_min", solved.solution.r_min},
                         {"rank_used", solved.solution.rank_used},
                         {"converged", solved.solution.converged},
                         {"refined", refined},
                         {"nodes", nodes},
                         {"poles", poles},
                         {"reference", reference},
                         {"modes", std::move(modes)},
                         {"seconds", seconds_since(t0)}});
    }
    result.outputs.push_back(output + ".csv");

    json manifest = {{"schema", 1},
                     {"experiment", "grating-mrc"},
                     {"source", cfg.source_name},
                     {"outputs", result.outputs},
                     {"cases", std::move(cases)}};
    result.manifest = output + "_manifest.json";
    write_manifest(out_dir / result.manifest, manifest);
    return result;
}

// --------------------------------------------------------------- direct-biem

RunResult run_direct_biem(const Config& cfg, const fs::path& out_dir)
{
    const auto& g = cfg.globals;
    const std::string output = g.require("output");
    RunResult result;
    json cases = json::array();

    for (const auto* sec : cfg.sections_named("case")) {
        const Scope s{*sec, g};
        const double k = s.require_num("k");
        const auto shape = boundary_from(s);

        SynthesisOptions opt;
        opt.engine = Engine::Biem;
        opt.n_in = s.integer("n_in", 1);
        opt.n_out = s.integer("n_out", 64);
        opt.biem_n = s.integer("n", 64);
        const auto ff = synthesize_far_field(shape, k, opt);

        const std::string name = output + "_" + sec->name.substr(5) + "_farfield.csv";
        write_far_field((out_dir / name).string(), ff);
        result.outputs.push_back(name);

        json c = {{"name", sec->name}, {"k", k}, {"file", name}};
        if (s.get("compare", "") == "analytic") {
            if (shape.kind() != geometry::Boundary::Kind::Circle)
                throw std::invalid_argument("experiments: analytic comparison needs a circle");
            const auto oracle = oracles::CircleScatterer::dirichlet(shape.circle_center(),
                                                                    shape.circle_radius());
            double worst = 0.0;
            for (int i = 0; i < ff.n_in; ++i)
                for (int j = 0; j < ff.n_out; ++j) {
                    const cplx ref = oracles::circle_amplitude_dirichlet(
                        oracle, k, unit_from_angle(ff.theta(j)), unit_from_angle(ff.beta(i)));
                    worst = std::max(worst, std::abs(ff.at(i, j) - ref) / std::abs(ref));
                }
            c["max_rel_dev_vs_analytic"] = worst;
        }
        cases.push_back(std::move(c));
    }

    json manifest = {{"schema", 1},
                     {"experiment", "direct-biem"},
                     {"source", cfg.source_name},
                     {"outputs", result.outputs},
                     {"cases", std::move(cases)}};
    result.manifest = output + "_manifest.json";
    write_manifest(out_dir / result.manifest, manifest);
    return result;
}

// --------------------------------------------------------------- inverse-sfm

void append_ratio_table(const Config& cfg, const ConfigSection& sec, const fs::path& out_dir,
                        const std::string& output, RunResult& result, json& cases)
{
    const Scope s{sec, cfg.globals};
    const double k = s.require_num("k");
    const auto circle = geometry::Boundary::circle(Vec2(s.num("cx", 6.0), s.num("cy", 2.0)),
                                                   s.num("radius", 1.0));
    const auto oracle =
        oracles::CircleScatterer::dirichlet(circle.circle_center(), circle.circle_radius());
    const Vec2 l(1.0, 0.0);
    const double d = geometry::support_function_exact(circle, l);
    const double curvature = 1.0 / circle.circle_radius();

    const std::string name = output + "_" + sec.name.substr(5) + ".csv";
    auto table = open_output(out_dir / name);
    table << "alpha_prime,alpha,re_ratio,im_ratio\n";
    json rows = json::array();
    for (int m = 0; m <= 12; ++m) {
        const double beta_prime = (24 - m) * M_PI / 24.0;
        const double beta = m * M_PI / 24.0;
        const Vec2 ap = unit_from_angle(beta_prime), al = unit_from_angle(beta);
        const cplx approx = sfm::approx_amplitude(d, curvature, al, ap, k);
        const cplx ratio = (m == 12) ? cplx(0.0, 0.0)
                                     : approx / oracles::circle_amplitude(oracle, k, ap, al);
        table << format_double(beta_prime) << ',' << format_double(beta) << ','
              << format_double(ratio.real()) << ',' << format_double(ratio.imag()) << '\n';
        rows.push_back({ratio.real(), ratio.imag()});
    }
    result.outputs.push_back(name);
    cases.push_back({{"name", sec.name}, {"k", k}, {"file", name}, {"ratios", std::move(rows)}});
}

void append_robin(const Config& cfg, const ConfigSection& sec, const fs::path& out_dir,
                  std::ofstream& table, json& cases)
{
    const Scope s{sec, cfg.globals};
    const double k = s.require_num("k");
    const double h = s.require_num("h");
    const int pairs = s.integer("pairs", 64);
    const auto circle = geometry::Boundary::circle(Vec2(s.num("cx", 0.0), s.num("cy", 0.0)),
                                                   s.num("radius", 1.0));
    const auto oracle =
        oracles::CircleScatterer::robin(circle.circle_center(), circle.circle_radius(), h);
    const Vec2 l(1.0, 0.0);

    sfm::AmplitudePairSet set;
    set.l = l;
    set.k = k;
    for (const auto& [alpha, ap] : sfm::pair_grid(l, pairs))
        set.pairs.push_back({alpha, ap, oracles::circle_amplitude(oracle, k, ap, alpha)});
    const auto rec = sfm::recover_support_robin(set);
    const double actual = geometry::support_function_exact(circle, l);
    const double reference = s.num("reference", 0.0);

    table << sec.name.substr(5) << ',' << format_double(h) << ',' << format_double(rec.d) << ','
          << format_double(rec.h_estimate) << ',' << format_double(actual) << ','
          << format_double(reference) << '\n';
    cases.push_back({{"name", sec.name},
                     {"h", h},
                     {"d_identified", rec.d},
                     {"h_estimate", rec.h_estimate},
                     {"d_actual", actual},
                     {"reference", reference}});
}

void append_support(const Config& cfg, const ConfigSection& sec, const fs::path& out_dir,
                    const std::string& output, RunResult& result, json& cases)
{
    const Scope s{sec, cfg.globals};
    const double k = s.require_num("k");
    const auto shape = boundary_from(s);
    const std::string case_tag = output + "_" + sec.name.substr(5);

    // Amplitude data always flows through a far-field file.
    std::string ff_path;
    const std::string source = s.get("source", "analytic");
    if (source == "file") {
        ff_path = s.require("far_field");
    } else {
        SynthesisOptions opt;
        opt.engine = engine_from_string(source);
        opt.n_in = opt.n_out = s.integer("n_far", 120);
        opt.poles = s.integer("poles", 4);
        opt.pole_scale = s.num("pole_scale", 0.7);
        opt.order = s.integer("order", 5);
        opt.knots = s.integer("knots", 720);
        opt.w_min = s.num("w_min", 1e-8);
        opt.biem_n = s.integer("n", 64);
        const auto ff = synthesize_far_field(shape, k, opt);
        const std::string name = case_tag + "_farfield.csv";
        write_far_field((out_dir / name).string(), ff);
        result.outputs.push_back(name);
        ff_path = (out_dir / name).string();
    }
    const FarFieldFile ff = read_far_field(ff_path);
    if (ff.n_in != ff.n_out || ff.n_in % 2 != 0)
        throw std::invalid_argument("experiments: support mode needs matching even grids");
    const int n = ff.n_in;
    const int nl = s.integer("directions", 16);
    if (n % nl != 0)
        throw std::invalid_argument("experiments: direction count must divide the grid");

    sfm::SupportSamples samples;
    samples.k = ff.k;
    for (int il = 0; il < nl; ++il) {
        const int tau_idx = il * (n / nl);
        const Vec2 l = unit_from_angle(2.0 * M_PI * tau_idx / n);
        sfm::AmplitudePairSet set;
        set.l = l;
        set.k = ff.k;
        for (int m = 0; m < n; ++m) {
            const double rel = 2.0 * M_PI * (m - tau_idx) / n;
            if (std::cos(rel) <= 1.0 / std::sqrt(2.0)) continue;
            const int ap_idx = ((2 * tau_idx + n / 2 - m) % n + n) % n;
            set.pairs.push_back({unit_from_angle(2.0 * M_PI * m / n),
                                 unit_from_angle(2.0 * M_PI * ap_idx / n), ff.at(m, ap_idx)});
        }
        samples.t.push_back(2.0 * M_PI * il / nl);
        samples.d.push_back(sfm::recover_support_dirichlet(set));
    }

    const std::string support_name = case_tag + "_support.csv";
    {
        auto table = open_output(out_dir / support_name);
        table << "t,d\n";
        for (size_t i = 0; i < samples.t.size(); ++i)
            table << format_double(samples.t[i]) << ',' << format_double(samples.d[i]) << '\n';
    }
    result.outputs.push_back(support_name);

    json c = {{"name", sec.name}, {"k", k}, {"support_file", support_name}};

    if (shape.kind() == geometry::Boundary::Kind::Circle) {
        double worst = 0.0;
        for (size_t i = 0; i < samples.t.size(); ++i) {
            const double exact =
                geometry::support_function_exact(shape, unit_from_angle(samples.t[i]));
            worst = std::max(worst, std::abs(samples.d[i] - exact));
        }
        c["max_support_error"] = worst;
    }

    if (s.boolean("reconstruct", false)) {
        const auto points = sfm::reconstruct_boundary(samples);
        const std::string poly_name = case_tag + "_boundary.csv";
        auto poly = open_output(out_dir / poly_name);
        poly << "x,y\n";
        for (const auto& p : points)
            poly << format_double(p.x()) << ',' << format_double(p.y()) << '\n';
        result.outputs.push_back(poly_name);
        c["boundary_file"] = poly_name;
    }

    if (s.has("grid_cx")) {
        const double gcx = s.num("grid_cx", 0.0), gcy = s.num("grid_cy", 0.0);
        const double half = s.num("grid_half", 2.0);
        const int gn = s.integer("grid_n", 81);
        const double step = 2.0 * half / (gn - 1);
        const auto grid = sfm::localize_halfplanes(samples, Vec2(gcx - half, gcy - half), step,
                                                   gn, gn);
        const std::string grid_name = case_tag + "_localization.csv";
        auto gout = open_output(out_dir / grid_name);
        gout << "x,y,marked\n";
        for (int iy = 0; iy < grid.ny; ++iy)
            for (int ix = 0; ix < grid.nx; ++ix) {
                const Vec2 p = grid.point(ix, iy);
                gout << format_double(p.x()) << ',' << format_double(p.y()) << ','
                     << (grid.marked(ix, iy) ? 1 : 0) << '\n';
            }
        result.outputs.push_back(grid_name);
        c["localization_file"] = grid_name;
        c["any_marked"] = grid.any_marked;
        if (shape.kind() == geometry::Boundary::Kind::Circle) {
            // Nearest grid point to the true center must be kept.
            const Vec2 ctr = shape.circle_center();
            const int ix = static_cast<int>(std::lround((ctr.x() - grid.x0) / step));
            const int iy = static_cast<int>(std::lround((ctr.y() - grid.y0) / step));
            c["center_marked"] =
                ix >= 0 && iy >= 0 && ix < grid.nx && iy < grid.ny && grid.marked(ix, iy);
        }
    }
    cases.push_back(std::move(c));
}

RunResult run_inverse_sfm(const Config& cfg, const fs::path& out_dir)
{
    const auto& g = cfg.globals;
    const std::string output = g.require("output");
    const std::string mode = g.require("mode");
    RunResult result;
    json cases = json::array();

    if (mode == "ratio-table") {
        for (const auto* sec : cfg.sections_named("case"))
            append_ratio_table(cfg, *sec, out_dir, output, result, cases);
    } else if (mode == "robin") {
        auto table = open_output(out_dir / (output + ".csv"));
        table << "case,h,d_identified,h_estimate,d_actual,reference\n";
        for (const auto* sec : cfg.sections_named("case"))
            append_robin(cfg, *sec, out_dir, table, cases);
        result.outputs.push_back(output + ".csv");
    } else if (mode == "support") {
        for (const auto* sec : cfg.sections_named("case"))
            append_support(cfg, *sec, out_dir, output, result, cases);
    } else {
        throw std::invalid_argument("experiments: unknown inverse-sfm mode '" + mode + "'");
    }

    json manifest = {{"schema", 1},
                     {"experiment", "inverse-sfm"},
                     {"mode", mode},
                     {"source", cfg.source_name},
                     {"outputs", result.outputs},
                     {"cases", std::move(cases)}};
    result.manifest = output + "_manifest.json";
    write_manifest(out_dir / result.manifest, manifest);
    return result;
}

// --------------------------------------------------------------- inverse-lsm

RunResult run_inverse_lsm(const Config& cfg, const fs::path& out_dir)
{
    const auto& g = cfg.globals;
    const std::string output = g.require("output");
    RunResult result;
    json cases = json::array();

    for (const auto* sec : cfg.sections_named("case")) {
        const Scope s{*sec, g};
        const double k = s.require_num("k");
        const int n = s.integer("n", 128);

        lsm::FarFieldMatrix m;
        const std::string source = s.get("source", "analytic");
        if (source == "file") {
            const FarFieldFile ff = read_far_field(s.require("far_field"));
            if (ff.n_in != ff.n_out)
                throw std::invalid_argument("experiments: LSM needs a square far-field grid");
            lstsq::CMatrix f(ff.n_out, ff.n_in);
            for (int i = 0; i < ff.n_in; ++i)
                for (int j = 0; j < ff.n_out; ++j) f(j, i) = ff.at(i, j);
            m = lsm::make_far_field_matrix(ff.n_in, ff.k, f);
        } else {
            const auto circle = geometry::Boundary::circle(
                Vec2(s.num("cx", 10.0), s.num("cy", 15.0)), s.num("radius", 1.0));
            const auto oracle = oracles::CircleScatterer::dirichlet(circle.circle_center(),
                                                                    circle.circle_radius());
            lstsq::CMatrix f(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    f(i, j) = oracles::circle_amplitude(oracle, k,
                                                        unit_from_angle(2.0 * M_PI * i / n),
                                                        unit_from_angle(2.0 * M_PI * j / n));
            m = lsm::make_far_field_matrix(n, k, f);
        }

        const double gcx = s.num("grid_cx", 10.0), gcy = s.num("grid_cy", 15.0);
        const double half = s.num("grid_half", 6.0);
        const int gn = s.integer("grid_n", 61);
        const double step = 2.0 * half / (gn - 1);
        const auto sc = lsm::scan(m, Vec2(gcx - half, gcy - half), step, gn, gn);

        const std::string name = output + "_" + sec->name.substr(5) + "_scan.csv";
        auto table = open_output(out_dir / name);
        table << "x,y,log_ck,log_k\n";
        for (int iy = 0; iy < sc.ny; ++iy)
            for (int ix = 0; ix < sc.nx; ++ix) {
                const Vec2 p = sc.point(ix, iy);
                const size_t idx = static_cast<size_t>(iy) * sc.nx + ix;
                table << format_double(p.x()) << ',' << format_double(p.y()) << ','
                      << format_double(sc.log_ck[idx]) << ','
                      << format_double(sc.log_kirsch[idx]) << '\n';
            }
        result.outputs.push_back(name);

        cases.push_back({{"name", sec->name},
                         {"k", k},
                         {"file", name},
                         {"argmin_ck", vec_json(sc.argmin_ck())},
                         {"argmin_kirsch", vec_json(sc.argmin_kirsch())}});
    }

    json manifest = {{"schema", 1},
                     {"experiment", "inverse-lsm"},
                     {"source", cfg.source_name},
                     {"outputs", result.outputs},
                     {"cases", std::move(cases)}};
    result.manifest = output + "_manifest.json";
    write_manifest(out_dir / result.manifest, manifest);
    return result;
}

// -------------------------------------------------------------- illposed-demo

RunResult run_illposed(const Config& cfg, const fs::path& out_dir)
{
    const auto& g = cfg.globals;
    const Scope s{g, g};
    const std::string output = g.require("output");
    const double k = s.require_num("k");
    const int order = s.integer("order", 5);
    const Vec2 pole(s.num("pole_x", 0.8), s.num("pole_y", 0.0));
    const int m = s.integer("directions", 120);
    const double w_min = s.num("w_min", 1e-8);
    const int rows = s.integer("rows", 20);
    const Vec2 alpha = unit_from_angle(s.num("alpha", 0.0));
    const auto circle = oracles::CircleScatterer::dirichlet(Vec2(s.num("cx", 0.0), s.num("cy", 0.0)),
                                                            s.num("radius", 1.0));

    std::vector<Vec2> dirs;
    std::vector<cplx> target;
    for (int i = 0; i < m; ++i) {
        dirs.push_back(unit_from_angle(2.0 * M_PI * i / m));
        target.push_back(oracles::circle_amplitude(circle, k, dirs.back(), alpha));
    }
    const auto fit = mrc::fit_far_field(dirs, target, pole, order, k, w_min);

    const std::string name = output + ".csv";
    auto table = open_output(out_dir / name);
    table << "theta,re_vc,im_vc,re_v,im_v\n";
    double max_diff = 0.0;
    for (int i = 0; i < rows; ++i) {
        const double theta = 2.0 * M_PI * i / rows;
        const Vec2 x = circle.center + circle.radius * unit_from_angle(theta);
        const cplx vc = mrc::near_field(fit.expansion, x);
        const cplx v = oracles::exact_boundary_scattered_field(circle, k, alpha, theta);
        max_diff = std::max(max_diff, std::abs(vc - v));
        table << format_double(theta) << ',' << format_double(vc.real()) << ','
              << format_double(vc.imag()) << ',' << format_double(v.real()) << ','
              << format_double(v.imag()) << '\n';
    }

    RunResult result;
    result.outputs.push_back(name);
    json manifest = {{"schema", 1},
                     {"experiment", "illposed-demo"},
                     {"source", cfg.source_name},
                     {"outputs", result.outputs},
                     {"r_min", fit.solution.r_min},
                     {"max_boundary_discrepancy", max_diff}};
    result.manifest = output + "_manifest.json";
    write_manifest(out_dir / result.manifest, manifest);
    return result;
}

// ---------------------------------------------------------------- synth

RunResult run_synth(const Config& cfg, const fs::path& out_dir)
{
    const auto& g = cfg.globals;
    const Scope s{g, g};
    const std::string output = g.require("output");
    const double k = s.require_num("k");
    const auto shape = boundary_from(s);

    SynthesisOptions opt;
    opt.engine = engine_from_string(s.get("engine", "analytic"));
    const std::string bc = s.get("bc", "dirichlet");
    if (bc == "robin") {
        opt.bc = oracles::CircleScatterer::BC::Robin;
        opt.robin_h = s.require_num("h");
    } else if (bc != "dirichlet") {
        throw std::invalid_argument("experiments: unknown boundary condition '" + bc + "'");
    }
    opt.n_in = s.integer("n_in", 120);
    opt.n_out = s.integer("n_out", 120);
    opt.poles = s.integer("poles", 4);
    opt.pole_scale = s.num("pole_scale", 0.7);
    opt.order = s.integer("order", 5);
    opt.knots = s.integer("knots", 720);
    opt.w_min = s.num("w_min", 1e-8);
    opt.biem_n = s.integer("n", 64);

    const auto ff = synthesize_far_field(shape, k, opt);
    const std::string name = output + "_farfield.csv";
    write_far_field((out_dir / name).string(), ff);

    json manifest = {{"schema", 1},
                     {"experiment", "synth-far-field"},
                     {"source", cfg.source_name},
                     {"outputs", {name}},
                     {"k", k},
                     {"engine", s.get("engine", "analytic")}};

    if (s.boolean("crosscheck", false)) {
        if (shape.kind() != geometry::Boundary::Kind::Circle ||
            opt.bc != oracles::CircleScatterer::BC::Dirichlet)
            throw std::invalid_argument(
                "experiments: crosscheck needs a Dirichlet circle (analytic reference)");
        const auto oracle = oracles::CircleScatterer::dirichlet(shape.circle_center(),
                                                                shape.circle_radius());
        double worst = 0.0;
        for (int i = 0; i < ff.n_in; ++i)
            for (int j = 0; j < ff.n_out; ++j) {
                const cplx ref = oracles::circle_amplitude_dirichlet(
                    oracle, k, unit_from_angle(ff.theta(j)), unit_from_angle(ff.beta(i)));
                worst = std::max(worst, std::abs(ff.at(i, j) - ref) / std::abs(ref));
            }
        manifest["crosscheck_max_rel_dev"] = worst;
        if (opt.engine == Engine::Biem && worst > 1e-6)
            throw std::runtime_error("experiments: BIEM/analytic cross-validation failed");
    }

    RunResult result;
    result.outputs.push_back(name);
    result.manifest = output + "_manifest.json";
    write_manifest(out_dir / result.manifest, manifest);
    return result;
}

} // namespace

RunResult run(const Config& cfg, const std::string& out_dir)
{
    const std::string kind = cfg.globals.require("experiment");
    const fs::path out(out_dir.empty() ? "." : out_dir);
    fs::create_directories(out);

    if (kind == "direct-mrc") return run_direct_mrc(cfg, out);
    if (kind == "direct-biem") return run_direct_biem(cfg, out);
    if (kind == "grating-mrc") return run_grating_mrc(cfg, out);
    if (kind == "inverse-sfm") return run_inverse_sfm(cfg, out);
    if (kind == "inverse-lsm") return run_inverse_lsm(cfg, out);
    if (kind == "illposed-demo") return run_illposed(cfg, out);
    if (kind == "synth-far-field") return run_synth(cfg, out);
    throw std::invalid_argument("experiments: unknown experiment kind '" + kind + "'");
}

} // namespace helmscat::cli
