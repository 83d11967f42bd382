#pragma once

#include <optional>
#include <string>
#include <vector>

namespace helmscat::cli {

// Flat key = value text with [section] headers; # starts a comment.
// Keys before the first section header are global.  Section names may
// repeat ("[case ...]" blocks); order is preserved.
struct ConfigSection {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;

    std::optional<std::string> get(const std::string& key) const;
    std::string require(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    double require_double(const std::string& key) const;
    int get_int(const std::string& key, int fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
};

struct Config {
    std::string source_name; // file path or bundled name, for messages
    ConfigSection globals;   // name = ""
    std::vector<ConfigSection> sections;

    std::vector<const ConfigSection*> sections_named(const std::string& prefix) const;
};

Config parse_config(const std::string& text, const std::string& source_name);
Config load_config_file(const std::string& path);

} // namespace helmscat::cli
