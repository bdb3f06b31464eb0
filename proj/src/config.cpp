#include "ternary/config.hpp"

#include <fstream>

#include "ternary/errors.hpp"

namespace ternary {

Config Config::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config file: " + path);
    Config cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError("config line " + std::to_string(lineno) + " is not key=value");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "inverse.eps") cfg.inverse_eps = std::stod(value);
            else if (key == "hermite.max") cfg.hermite_max = std::stoi(value);
            else if (key == "series.orders") cfg.series_orders = std::stoi(value);
            else if (key == "grid.u_max") cfg.grid_u_max = std::stod(value);
            else if (key == "grid.points") cfg.grid_points = std::stoi(value);
            else if (key == "cov.split") cfg.cov_split = std::stod(value);
            else if (key == "cov.delta") cfg.cov_delta = std::stod(value);
            else if (key == "max.time") cfg.max_time = std::stod(value);
            else if (key == "threads") cfg.threads = std::stoi(value);
            else throw DomainError("unknown config key: " + key);
        } catch (const std::invalid_argument&) {
            throw DomainError("bad value for config key " + key + " on line " +
                              std::to_string(lineno));
        }
    }
    return cfg;
}

}  // namespace ternary
