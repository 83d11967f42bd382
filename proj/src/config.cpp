#include "helmscat/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace helmscat::cli {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

std::optional<std::string> ConfigSection::get(const std::string& key) const
{
    for (const auto& [k, v] : entries)
        if (k == key) return v;
    return std::nullopt;
}

std::string ConfigSection::require(const std::string& key) const
{
    if (auto v = get(key)) return *v;
    throw std::invalid_argument("config: [" + (name.empty() ? "(global)" : name) +
                                "] missing required key '" + key + "'");
}

double ConfigSection::get_double(const std::string& key, double fallback) const
{
    const auto v = get(key);
    if (!v) return fallback;
    try {
        size_t pos = 0;
        const double parsed = std::stod(*v, &pos);
        if (trim(v->substr(pos)).empty()) return parsed;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("config: [" + name + "] key '" + key +
                                "' is not a number: '" + *v + "'");
}

double ConfigSection::require_double(const std::string& key) const
{
    require(key);
    return get_double(key, 0.0);
}

int ConfigSection::get_int(const std::string& key, int fallback) const
{
    const double d = get_double(key, static_cast<double>(fallback));
    const int i = static_cast<int>(d);
    if (static_cast<double>(i) != d)
        throw std::invalid_argument("config: [" + name + "] key '" + key +
                                    "' must be an integer");
    return i;
}

bool ConfigSection::get_bool(const std::string& key, bool fallback) const
{
    const auto v = get(key);
    if (!v) return fallback;
    if (*v == "true" || *v == "1" || *v == "yes") return true;
    if (*v == "false" || *v == "0" || *v == "no") return false;
    throw std::invalid_argument("config: [" + name + "] key '" + key +
                                "' must be a boolean: '" + *v + "'");
}

std::vector<const ConfigSection*> Config::sections_named(const std::string& prefix) const
{
    std::vector<const ConfigSection*> out;
    for (const auto& s : sections)
        if (s.name.rfind(prefix, 0) == 0) out.push_back(&s);
    return out;
}

Config parse_config(const std::string& text, const std::string& source_name)
{
    Config cfg;
    cfg.source_name = source_name;
    ConfigSection* current = &cfg.globals;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument(source_name + ":" + std::to_string(lineno) +
                                            ": unterminated section header");
            cfg.sections.push_back(ConfigSection{trim(line.substr(1, line.size() - 2)), {}});
            current = &cfg.sections.back();
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(source_name + ":" + std::to_string(lineno) +
                                        ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument(source_name + ":" + std::to_string(lineno) +
                                        ": empty key");
        current->entries.emplace_back(key, value);
    }
    return cfg;
}

Config load_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

} // namespace helmscat::cli
