#pragma once

// Library entry points behind the CLI subcommands, stream-based so tests can
// drive them directly.

#include <iosfwd>
#include <optional>

#include "crw/config.hpp"
#include "crw/core.hpp"
#include "crw/verify.hpp"

namespace crw {

struct OutputOptions {
    bool timestamp = true;
    unsigned threads = 1;
    std::optional<OutputFormat> format;  // overrides the config when set
};

// T(k), R(k) sweep for the discrete model (the fig3* presets).
int cmd_spectrum(const RunConfig& cfg, std::ostream& out,
                 const OutputOptions& opts);

// Per-(n, parity) resonance report: q_n, Q_n, perturbative and Newton wave
// numbers, residuals, Im k.  A mode that fails to converge is flagged in its
// entry and the run continues.
int cmd_resonances(const RunConfig& cfg, std::ostream& out,
                   const OutputOptions& opts);

// Wavefunction export: discrete resonance profile, the Omega-sweep contour
// (mode=contour), or the continuum long/short profiles.  k_override evaluates
// the profile at an explicit complex wave number instead of a solved root.
int cmd_profile(const RunConfig& cfg, std::ostream& out,
                const OutputOptions& opts,
                std::optional<Complex> k_override = std::nullopt);

// Invariant suite runner; returns nonzero when any check fails.
int cmd_verify(verify::Level level, std::ostream& out);

}  // namespace crw
