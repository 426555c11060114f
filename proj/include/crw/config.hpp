#pragma once

// Run configuration: flat key=value text files ('#' starts a comment).
//
// Core keys:   model (discrete|long|short), omega, xi, omega1, omega2, j1, j2,
//              d, sweep.var (k|Omega), sweep.min, sweep.max, sweep.n,
//              units (xi-units|J-units), format (csv|json)
// Extensions:  n, parity (odd|even), window, points, mode ("" | contour)
//
// Named figure-reproduction presets are compiled in from presets/*.cfg.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "crw/core.hpp"
#include "crw/resonance.hpp"

namespace crw {

enum class Model { discrete, longwave, shortwave };
enum class OutputFormat { csv, json };

struct SweepSpec {
    std::string var = "k";
    double min = 0.0;
    double max = 0.0;
    int n = 0;
};

struct RunConfig {
    Model model = Model::discrete;
    double omega = 0.0;
    double xi = 1.0;
    double omega1 = 0.0;
    double omega2 = 0.0;
    double j1 = 0.0;
    double j2 = 0.0;
    int d = 1;
    SweepSpec sweep;
    std::string units = "xi-units";
    // Absent -> per-command default (tables: csv, resonances: json).
    std::optional<OutputFormat> format;
    // extensions
    int n = 1;
    Parity parity = Parity::odd;
    int window = 0;  // 0 -> 4d
    int points = 0;  // 0 -> 2048
    std::string mode;

    WaveguideParams waveguide() const { return WaveguideParams{omega, xi}; }
    AtomPair atoms() const { return AtomPair{omega1, omega2, j1, j2, d}; }
    bool atoms_identical() const { return omega1 == omega2 && j1 == j2; }
    int profile_window() const { return window > 0 ? window : 4 * d; }
    int grid_points() const { return points > 0 ? points : 2048; }
};

// Parse a config stream; source_name appears in diagnostics.  Throws
// ConfigError with line/field information on malformed input.
RunConfig parse_config(std::istream& in, const std::string& source_name);

// Parse a config file from disk.
RunConfig load_config(const std::string& path);

// Named presets compiled in from presets/*.cfg (name -> file content).
const std::map<std::string, std::string>& preset_table();

// Parse a named preset; throws ConfigError for unknown names.
RunConfig load_preset(const std::string& name);

const char* to_string(Model m);
const char* to_string(Parity p);

}  // namespace crw
