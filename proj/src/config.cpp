#include "crw/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace crw {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& source, int line,
                       const std::string& field, const std::string& msg) {
    std::ostringstream os;
    os << source << ":" << line << ": field '" << field << "': " << msg;
    throw ConfigError(os.str());
}

double parse_double(const std::string& source, int line,
                    const std::string& field, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        fail(source, line, field, "expected a number, got '" + value + "'");
    }
}

int parse_int(const std::string& source, int line, const std::string& field,
              const std::string& value) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        fail(source, line, field, "expected an integer, got '" + value + "'");
    }
}

}  // namespace

const char* to_string(Model m) {
    switch (m) {
        case Model::discrete: return "discrete";
        case Model::longwave: return "long";
        case Model::shortwave: return "short";
    }
    return "?";
}

const char* to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

RunConfig parse_config(std::istream& in, const std::string& source_name) {
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            fail(source_name, lineno, line, "expected key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(source_name, lineno, "<empty>", "missing key");

        if (key == "model") {
            if (value == "discrete") cfg.model = Model::discrete;
            else if (value == "long") cfg.model = Model::longwave;
            else if (value == "short") cfg.model = Model::shortwave;
            else fail(source_name, lineno, key, "expected discrete|long|short");
        } else if (key == "omega") {
            cfg.omega = parse_double(source_name, lineno, key, value);
        } else if (key == "xi") {
            cfg.xi = parse_double(source_name, lineno, key, value);
        } else if (key == "omega1") {
            cfg.omega1 = parse_double(source_name, lineno, key, value);
        } else if (key == "omega2") {
            cfg.omega2 = parse_double(source_name, lineno, key, value);
        } else if (key == "j1") {
            cfg.j1 = parse_double(source_name, lineno, key, value);
        } else if (key == "j2") {
            cfg.j2 = parse_double(source_name, lineno, key, value);
        } else if (key == "d") {
            cfg.d = parse_int(source_name, lineno, key, value);
        } else if (key == "n") {
            cfg.n = parse_int(source_name, lineno, key, value);
        } else if (key == "parity") {
            if (value == "odd") cfg.parity = Parity::odd;
            else if (value == "even") cfg.parity = Parity::even;
            else fail(source_name, lineno, key, "expected odd|even");
        } else if (key == "sweep.var") {
            if (value != "k" && value != "Omega") {
                fail(source_name, lineno, key, "expected k|Omega");
            }
            cfg.sweep.var = value;
        } else if (key == "sweep.min") {
            cfg.sweep.min = parse_double(source_name, lineno, key, value);
        } else if (key == "sweep.max") {
            cfg.sweep.max = parse_double(source_name, lineno, key, value);
        } else if (key == "sweep.n") {
            cfg.sweep.n = parse_int(source_name, lineno, key, value);
        } else if (key == "units") {
            if (value != "xi-units" && value != "J-units") {
                fail(source_name, lineno, key, "expected xi-units|J-units");
            }
            cfg.units = value;
        } else if (key == "format") {
            if (value == "csv") cfg.format = OutputFormat::csv;
            else if (value == "json") cfg.format = OutputFormat::json;
            else fail(source_name, lineno, key, "expected csv|json");
        } else if (key == "window") {
            cfg.window = parse_int(source_name, lineno, key, value);
        } else if (key == "points") {
            cfg.points = parse_int(source_name, lineno, key, value);
        } else if (key == "mode") {
            if (!value.empty() && value != "contour") {
                fail(source_name, lineno, key, "expected contour");
            }
            cfg.mode = value;
        } else {
            fail(source_name, lineno, key, "unknown key");
        }
    }
    // Structural invariants.
    if (cfg.xi <= 0.0) {
        throw ConfigError(source_name + ": xi must be positive");
    }
    if (cfg.d < 1) {
        throw ConfigError(source_name + ": d must be >= 1");
    }
    if (cfg.j1 < 0.0 || cfg.j2 < 0.0) {
        throw ConfigError(source_name + ": couplings must be non-negative");
    }
    if (cfg.sweep.n != 0 && cfg.sweep.n < 2) {
        throw ConfigError(source_name + ": sweep.n must be >= 2");
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in, path);
}

RunConfig load_preset(const std::string& name) {
    const auto& table = preset_table();
    const auto it = table.find(name);
    if (it == table.end()) {
        std::string known;
        for (const auto& [k, v] : table) {
            if (!known.empty()) known += ", ";
            known += k;
        }
        throw ConfigError("unknown preset '" + name + "' (known: " + known + ")");
    }
    std::istringstream in(it->second);
    return parse_config(in, "preset:" + name);
}

}  // namespace crw
