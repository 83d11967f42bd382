#include "helmscat/data_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace helmscat::cli {

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_far_field(const std::string& path, const FarFieldFile& ff)
{
    if (ff.n_in < 1 || ff.n_out < 1 ||
        ff.a.size() != static_cast<size_t>(ff.n_in) * ff.n_out)
        throw std::invalid_argument("data_io: inconsistent far-field file");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("data_io: cannot write '" + path + "'");
    out << "# helmscat far-field v1\n";
    out << "# k = " << format_double(ff.k) << "\n";
    out << "# n_in = " << ff.n_in << "\n";
    out << "# n_out = " << ff.n_out << "\n";
    out << "beta,theta,re,im\n";
    for (int i = 0; i < ff.n_in; ++i) {
        for (int j = 0; j < ff.n_out; ++j) {
            const cplx v = ff.at(i, j);
            out << format_double(ff.beta(i)) << ',' << format_double(ff.theta(j)) << ','
                << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
        }
    }
    if (!out) throw std::runtime_error("data_io: write failed for '" + path + "'");
}

FarFieldFile read_far_field(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("data_io: cannot open '" + path + "'");

    FarFieldFile ff;
    std::string line;
    size_t row = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::istringstream hs(line.substr(1));
            std::string key, eq;
            hs >> key >> eq;
            if (eq == "=") {
                std::string value;
                hs >> value;
                if (key == "k") ff.k = std::stod(value);
                if (key == "n_in") ff.n_in = std::stoi(value);
                if (key == "n_out") ff.n_out = std::stoi(value);
            }
            continue;
        }
        if (!header_seen) { // the beta,theta,re,im column row
            header_seen = true;
            if (ff.n_in < 1 || ff.n_out < 1)
                throw std::runtime_error("data_io: '" + path + "' lacks grid metadata");
            ff.a.assign(static_cast<size_t>(ff.n_in) * ff.n_out, cplx(0.0, 0.0));
            continue;
        }
        double beta, theta, re, im;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &beta, &theta, &re, &im) != 4)
            throw std::runtime_error("data_io: malformed row in '" + path + "': " + line);
        if (row >= ff.a.size())
            throw std::runtime_error("data_io: too many rows in '" + path + "'");
        ff.a[row++] = cplx(re, im);
    }
    if (row != ff.a.size())
        throw std::runtime_error("data_io: row count mismatch in '" + path + "'");
    return ff;
}

} // namespace helmscat::cli
