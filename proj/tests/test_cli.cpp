#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "crw/commands.hpp"
#include "crw/config.hpp"
#include "crw/scattering.hpp"

using namespace crw;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, ',')) out.push_back(field);
    return out;
}

// Data rows of a CSV document (skips '#' headers and the column row).
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    bool seen_columns = false;
    for (const std::string& line : lines_of(text)) {
        if (line.rfind('#', 0) == 0) continue;
        if (!seen_columns) {
            seen_columns = true;
            continue;
        }
        rows.push_back(split_csv(line));
    }
    return rows;
}

OutputOptions quiet() {
    OutputOptions o;
    o.timestamp = false;
    return o;
}

}  // namespace

TEST_CASE("config parser: full file, comments, diagnostics") {
    std::istringstream in(
        "# comment line\n"
        "model = discrete\n"
        "omega = 5\n"
        "xi = 1\n"
        "omega1 = 8\n"
        "omega2 = 8  # trailing comment\n"
        "j1 = 0.5\n"
        "j2 = 0.7\n"
        "d = 10\n"
        "sweep.var = k\n"
        "sweep.min = -3.14\n"
        "sweep.max = 3.14\n"
        "sweep.n = 1257\n"
        "units = xi-units\n"
        "format = json\n");
    const RunConfig cfg = parse_config(in, "test");
    CHECK(cfg.model == Model::discrete);
    CHECK(cfg.omega == 5.0);
    CHECK(cfg.j2 == 0.7);
    CHECK(cfg.sweep.n == 1257);
    CHECK(cfg.units == "xi-units");
    REQUIRE(cfg.format.has_value());
    CHECK(*cfg.format == OutputFormat::json);

    std::istringstream bad_key("omegaa = 5\n");
    CHECK_THROWS_WITH_AS(parse_config(bad_key, "cfg"),
                         doctest::Contains("cfg:1"), ConfigError);
    std::istringstream bad_num("model = discrete\nomega = five\n");
    CHECK_THROWS_WITH_AS(parse_config(bad_num, "cfg"),
                         doctest::Contains("omega"), ConfigError);
    std::istringstream bad_model("model = quantum\n");
    CHECK_THROWS_AS(parse_config(bad_model, "cfg"), ConfigError);
    std::istringstream bad_xi("xi = -1\n");
    CHECK_THROWS_AS(parse_config(bad_xi, "cfg"), ConfigError);
    std::istringstream bad_sweep("sweep.n = 1\n");
    CHECK_THROWS_AS(parse_config(bad_sweep, "cfg"), ConfigError);
}

TEST_CASE("preset table: all figure presets parse") {
    const auto& table = preset_table();
    for (const char* name :
         {"fig3a", "fig3b", "fig3c", "fig3d", "fig4a", "fig4b", "fig4c",
          "fig6a", "fig6b", "fig7a", "fig7b", "fig7c", "fig9"}) {
        CAPTURE(name);
        CHECK(table.count(name) == 1);
        CHECK_NOTHROW((void)load_preset(name));
    }
    CHECK(table.size() == 13);
    CHECK_THROWS_AS((void)load_preset("fig1"), ConfigError);

    const RunConfig fig3a = load_preset("fig3a");
    CHECK(fig3a.omega == 5.0);
    CHECK(fig3a.j1 == 0.5);
    CHECK(fig3a.j2 == 0.7);
    CHECK(fig3a.d == 10);
    const RunConfig fig9 = load_preset("fig9");
    CHECK(fig9.model == Model::shortwave);
    CHECK(fig9.n == 1);
}

TEST_CASE("spectrum command: structure, row identity, determinism") {
    const RunConfig cfg = load_preset("fig3a");
    std::ostringstream a, b;
    cmd_spectrum(cfg, a, quiet());
    cmd_spectrum(cfg, b, quiet());
    CHECK(a.str() == b.str());  // byte-identical without the timestamp

    const auto all_lines = lines_of(a.str());
    REQUIRE(!all_lines.empty());
    CHECK(all_lines.front().rfind("# command: spectrum", 0) == 0);
    // Header then the column row then sweep.n data rows.
    const auto rows = csv_rows(a.str());
    REQUIRE(rows.size() == static_cast<std::size_t>(cfg.sweep.n));
    for (const auto& row : rows) {
        REQUIRE(row.size() == 4);
        const double T = std::stod(row[1]);
        const double R = std::stod(row[2]);
        CHECK(std::abs(R - (1.0 - T)) < 1e-10);
    }

    // With the timestamp on, only the generated line may differ.
    OutputOptions stamped;
    std::ostringstream c;
    cmd_spectrum(cfg, c, stamped);
    auto stamped_lines = lines_of(c.str());
    std::erase_if(stamped_lines, [](const std::string& l) {
        return l.rfind("# generated:", 0) == 0;
    });
    CHECK(stamped_lines == all_lines);
}

TEST_CASE("spectrum command: coupling-free chain transmits everywhere") {
    RunConfig cfg = load_preset("fig3a");
    cfg.j1 = 0.0;
    cfg.j2 = 0.0;
    std::ostringstream out;
    cmd_spectrum(cfg, out, quiet());
    for (const auto& row : csv_rows(out.str())) {
        if (row[3] == "band_edge") continue;
        CHECK(std::stod(row[1]) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("spectrum command rejects non-discrete models") {
    RunConfig cfg = load_preset("fig7a");
    std::ostringstream out;
    CHECK_THROWS_AS(cmd_spectrum(cfg, out, quiet()), ConfigError);
}

TEST_CASE("resonances command: JSON entries and the leakage ordering") {
    const auto im_k_of_n3 = [](const char* preset) {
        std::ostringstream out;
        cmd_resonances(load_preset(preset), out, quiet());
        // Scan the odd-parity n=3 entry for its "im_k" field.
        const std::string text = out.str();
        const auto n3 = text.find("\"n\": 3");
        REQUIRE(n3 != std::string::npos);
        const auto key = text.find("\"im_k\":", n3);
        REQUIRE(key != std::string::npos);
        return std::abs(std::stod(text.substr(key + 7)));
    };
    const double leak_a = im_k_of_n3("fig4a");
    const double leak_b = im_k_of_n3("fig4b");
    const double leak_c = im_k_of_n3("fig4c");
    CHECK(leak_a < leak_c);
    CHECK(leak_c < leak_b);

    // Every entry reports a perturbative-to-Newton gap within the cubic
    // remainder budget C * lambda^3.
    std::ostringstream out;
    cmd_resonances(load_preset("fig4b"), out, quiet());
    const std::string text = out.str();
    const double lambda = 2.0 * 0.2 / 1.0;
    std::size_t pos = 0;
    int entries = 0;
    while ((pos = text.find("\"k_gap\":", pos)) != std::string::npos) {
        const double gap = std::stod(text.substr(pos + 8));
        CHECK(gap < 2.0 * lambda * lambda * lambda);
        pos += 8;
        ++entries;
    }
    CHECK(entries == 19);  // 9 odd + 10 even modes for d = 10
}

TEST_CASE("resonances command: perfect-cavity run has a real mode") {
    RunConfig cfg = load_preset("fig4a");
    // Odd-parity n = 3 mirror point: Omega = omega - 2 xi cos q_3.
    const double q3 = 3.0 * std::numbers::pi / 10.0;
    cfg.omega1 = cfg.omega - 2.0 * cfg.xi * std::cos(q3);
    cfg.omega2 = cfg.omega1;
    std::ostringstream out;
    cmd_resonances(cfg, out, quiet());
    const std::string text = out.str();
    const auto n3 = text.find("\"n\": 3");
    REQUIRE(n3 != std::string::npos);
    const auto key = text.find("\"im_k\":", n3);
    const double im = std::stod(text.substr(key + 7));
    CHECK(std::abs(im) < 1e-10);
}

TEST_CASE("resonances command: csv format carries the same modes") {
    RunConfig cfg = load_preset("fig4a");
    cfg.format = OutputFormat::csv;
    std::ostringstream out;
    cmd_resonances(cfg, out, quiet());
    const auto rows = csv_rows(out.str());
    CHECK(rows.size() == 19);
    for (const auto& row : rows) CHECK(row.back() == "ok");
}

TEST_CASE("profile command: odd resonance has a node at the origin") {
    const RunConfig cfg = load_preset("fig4a");
    std::ostringstream out;
    cmd_profile(cfg, out, quiet());
    bool saw_origin = false;
    for (const auto& row : csv_rows(out.str())) {
        REQUIRE(row.size() == 4);
        if (row[0] == "0") {
            saw_origin = true;
            CHECK(std::stod(row[3]) < 1e-12);
        }
    }
    CHECK(saw_origin);
}

TEST_CASE("profile command: explicit wave-number override is honoured") {
    const RunConfig cfg = load_preset("fig4a");
    std::ostringstream out;
    cmd_profile(cfg, out, quiet(), Complex(3.0 * std::numbers::pi / 20.0, 0.0));
    const std::string text = out.str();
    CHECK(text.find("# re_k: 4.712") != std::string::npos);
}

TEST_CASE("profile command: fig9 exports the three-panel columns") {
    const RunConfig cfg = load_preset("fig9");
    std::ostringstream out;
    cmd_profile(cfg, out, quiet());
    const auto all_lines = lines_of(out.str());
    bool found = false;
    for (const std::string& l : all_lines) {
        if (l == "x,abs2_left,abs2_right,abs2_total") found = true;
    }
    CHECK(found);
    CHECK(csv_rows(out.str()).size() == 2048);
}

TEST_CASE("profile command: contour sweep emits the (j, Omega) grid") {
    RunConfig cfg = load_preset("fig6a");
    cfg.sweep.n = 9;  // trim for test speed
    std::ostringstream out;
    cmd_profile(cfg, out, quiet());
    const auto rows = csv_rows(out.str());
    CHECK(rows.size() == static_cast<std::size_t>(9 * (2 * cfg.window + 1)));
    for (const auto& row : rows) REQUIRE(row.size() == 3);
}

TEST_CASE("verify command reports every suite and exits zero") {
    std::ostringstream out;
    const int rc = cmd_verify(verify::Level::fast, out);
    CHECK(rc == 0);
    CHECK(out.str().find("[PASS]") != std::string::npos);
    CHECK(out.str().find("[FAIL]") == std::string::npos);
    CHECK(out.str().find("unitarity") != std::string::npos);
}

TEST_CASE("verify tolerances have teeth: a perturbed amplitude trips unitarity") {
    // Mutation probe: scaling t by (1 + 3e-6) pushes |r|^2 + |t|^2 - 1 past
    // the 1e-10 budget at generic parameters, so a corrupted closed form
    // cannot slip through the suite.
    const RunConfig cfg = load_preset("fig3b");
    const auto sol_at = [&](double k) {
        return solve_scattering(k, cfg.waveguide(), cfg.atoms());
    };
    const auto sol = sol_at(1.2);
    const double honest = std::abs(std::norm(sol.r) + std::norm(sol.t) - 1.0);
    const Complex mutated_t = sol.t * (1.0 + 3e-6);
    const double mutated =
        std::abs(std::norm(sol.r) + std::norm(mutated_t) - 1.0);
    CHECK(honest <= 1e-10);
    CHECK(mutated > 1e-10);
}

TEST_CASE("sweeps are thread-count independent") {
    const RunConfig cfg = load_preset("fig3c");
    OutputOptions serial = quiet();
    OutputOptions threaded = quiet();
    threaded.threads = 4;
    std::ostringstream a, b;
    cmd_spectrum(cfg, a, serial);
    cmd_spectrum(cfg, b, threaded);
    CHECK(a.str() == b.str());
}

TEST_CASE("resonances output is deterministic and JSON-shaped by default") {
    const RunConfig cfg = load_preset("fig4c");
    std::ostringstream a, b;
    cmd_resonances(cfg, a, quiet());
    cmd_resonances(cfg, b, quiet());
    CHECK(a.str() == b.str());
    CHECK(a.str().front() == '{');
    CHECK(a.str().find("\"modes\"") != std::string::npos);
}

TEST_CASE("resonances command covers the continuum models") {
    for (const char* preset : {"fig7a", "fig9"}) {
        CAPTURE(preset);
        std::ostringstream out;
        cmd_resonances(load_preset(preset), out, quiet());
        const std::string text = out.str();
        CHECK(text.find("\"parity\": \"odd\"") != std::string::npos);
        CHECK(text.find("\"status\": \"ok\"") != std::string::npos);
        // Odd-parity modes n = 1 .. d-1 only.
        CHECK(text.find("\"parity\": \"even\"") == std::string::npos);
    }
}

TEST_CASE("json table format for the spectrum command") {
    RunConfig cfg = load_preset("fig3a");
    cfg.sweep.n = 16;
    OutputOptions opts = quiet();
    opts.format = OutputFormat::json;
    std::ostringstream out;
    cmd_spectrum(cfg, out, opts);
    CHECK(out.str().front() == '{');
    CHECK(out.str().find("\"columns\"") != std::string::npos);
    CHECK(out.str().find("\"rows\"") != std::string::npos);
}
