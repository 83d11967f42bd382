// helmscat: obstacle/grating scattering experiment runner.
//
//   helmscat <experiment-kind> --config <path|bundled-name> [--out <dir>]
//   helmscat dump --name <bundled-name> [--out <file>]
//   helmscat --list-bundled

#include "helmscat/bundled.hpp"
#include "helmscat/config.hpp"
#include "helmscat/experiments.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

helmscat::cli::Config resolve_config(const std::string& spec)
{
    if (const auto text = helmscat::cli::bundled_config(spec))
        return helmscat::cli::parse_config(*text, spec);
    return helmscat::cli::load_config_file(spec);
}

int run_kind(const std::string& kind, const std::string& config_spec, const std::string& out_dir)
{
    const auto cfg = resolve_config(config_spec);
    const std::string declared = cfg.globals.require("experiment");
    if (declared != kind) {
        std::cerr << "error: config '" << config_spec << "' declares experiment '" << declared
                  << "', not '" << kind << "'\n";
        return 2;
    }
    const auto result = helmscat::cli::run(cfg, out_dir);
    for (const auto& f : result.outputs) std::cout << "wrote " << f << "\n";
    std::cout << "wrote " << result.manifest << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"2-D Helmholtz obstacle-scattering workbench"};
    app.require_subcommand(0, 1);

    bool list_bundled = false;
    app.add_flag("--list-bundled", list_bundled, "List the shipped experiment configs");

    struct SubSpec {
        std::string config;
        std::string out = ".";
    };

    const std::vector<std::string> kinds = {"direct-mrc",  "direct-biem",  "grating-mrc",
                                            "inverse-sfm", "inverse-lsm",  "illposed-demo",
                                            "synth"};
    std::map<std::string, SubSpec> specs;
    for (const auto& kind : kinds) {
        auto& spec = specs[kind];
        auto* sub = app.add_subcommand(kind, "Run a " + kind + " experiment config");
        sub->add_option("--config", spec.config, "Config file path or bundled name")->required();
        sub->add_option("--out", spec.out, "Output directory (default: current)");
    }

    std::string dump_name, dump_out;
    auto* dump = app.add_subcommand("dump", "Print or save a bundled config");
    dump->add_option("--name", dump_name, "Bundled config name")->required();
    dump->add_option("--out", dump_out, "Write to this file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list_bundled) {
            for (const auto& name : helmscat::cli::bundled_names()) std::cout << name << "\n";
            return 0;
        }
        if (dump->parsed()) {
            const auto text = helmscat::cli::bundled_config(dump_name);
            if (!text) {
                std::cerr << "error: no bundled config named '" << dump_name << "'\n";
                return 2;
            }
            if (dump_out.empty()) {
                std::cout << *text;
            } else {
                std::ofstream out(dump_out);
                out << *text;
                if (!out) {
                    std::cerr << "error: cannot write '" << dump_out << "'\n";
                    return 2;
                }
            }
            return 0;
        }
        for (const auto& kind : kinds) {
            auto* sub = app.get_subcommand(kind);
            if (sub->parsed()) {
                // The synth subcommand maps to the synth-far-field kind.
                const std::string declared = (kind == "synth") ? "synth-far-field" : kind;
                return run_kind(declared, specs[kind].config, specs[kind].out);
            }
        }
        std::cout << app.help();
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
