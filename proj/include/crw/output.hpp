#pragma once

// Table and JSON writers.  Floating-point values are printed as %.16e
// (17 significant digits, scientific) so that emitted files round-trip
// exactly; integer columns are printed as integers.  CSV carries '#'-prefixed
// header lines, then the column row, then data, all with LF line endings.

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace crw {

// One header entry ("key: value") recorded in the output preamble.
using HeaderEntry = std::pair<std::string, std::string>;

using Cell = std::variant<double, long long, std::string>;

struct Table {
    std::vector<HeaderEntry> header;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// %.16e rendering used everywhere a double is written.
std::string format_double(double v);

void write_csv(const Table& table, std::ostream& out);
void write_json_table(const Table& table, std::ostream& out);

// Minimal streaming JSON writer (objects, arrays, strings, numbers).
class JsonWriter {
public:
    explicit JsonWriter(std::ostream& out) : out_(out) {}

    void begin_object();
    void end_object();
    void begin_array(const std::string& key);
    void begin_object_in_array();
    void end_array();
    void field(const std::string& key, const std::string& value);
    void field(const std::string& key, double value);
    void field(const std::string& key, long long value);
    void field(const std::string& key, bool value);
    void finish();  // trailing newline

private:
    void comma();
    void indent();
    std::ostream& out_;
    int depth_ = 0;
    bool first_ = true;
};

}  // namespace crw
