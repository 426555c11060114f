#include "crw/output.hpp"

#include <cstdio>
#include <ostream>

namespace crw {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

namespace {

std::string render(const Cell& cell) {
    if (std::holds_alternative<double>(cell)) {
        return format_double(std::get<double>(cell));
    }
    if (std::holds_alternative<long long>(cell)) {
        return std::to_string(std::get<long long>(cell));
    }
    return std::get<std::string>(cell);
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
    for (const auto& [key, value] : table.header) {
        out << "# " << key << ": " << value << "\n";
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << ",";
        out << table.columns[i];
    }
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            out << render(row[i]);
        }
        out << "\n";
    }
}

void write_json_table(const Table& table, std::ostream& out) {
    JsonWriter w(out);
    w.begin_object();
    for (const auto& [key, value] : table.header) w.field(key, value);
    w.begin_array("columns");
    for (const auto& c : table.columns) {
        out << (&c == &table.columns.front() ? "" : ", ") << '"'
            << json_escape(c) << '"';
    }
    w.end_array();
    w.begin_array("rows");
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        if (r) out << ",";
        out << "\n    [";
        const auto& row = table.rows[r];
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ", ";
            if (std::holds_alternative<std::string>(row[i])) {
                out << '"' << json_escape(std::get<std::string>(row[i])) << '"';
            } else {
                out << render(row[i]);
            }
        }
        out << "]";
    }
    w.end_array();
    w.end_object();
    w.finish();
}

void JsonWriter::comma() {
    if (!first_) out_ << ",";
    first_ = false;
}

void JsonWriter::indent() {
    out_ << "\n";
    for (int i = 0; i < depth_; ++i) out_ << "  ";
}

void JsonWriter::begin_object() {
    comma();
    if (depth_ > 0) indent();
    out_ << "{";
    ++depth_;
    first_ = true;
}

void JsonWriter::begin_object_in_array() {
    comma();
    indent();
    out_ << "{";
    ++depth_;
    first_ = true;
}

void JsonWriter::end_object() {
    --depth_;
    indent();
    out_ << "}";
    first_ = false;
}

void JsonWriter::begin_array(const std::string& key) {
    comma();
    indent();
    out_ << '"' << json_escape(key) << "\": [";
    ++depth_;
    first_ = true;
}

void JsonWriter::end_array() {
    --depth_;
    out_ << "]";
    first_ = false;
}

void JsonWriter::field(const std::string& key, const std::string& value) {
    comma();
    indent();
    out_ << '"' << json_escape(key) << "\": \"" << json_escape(value) << '"';
}

void JsonWriter::field(const std::string& key, double value) {
    comma();
    indent();
    out_ << '"' << json_escape(key) << "\": " << format_double(value);
}

void JsonWriter::field(const std::string& key, long long value) {
    comma();
    indent();
    out_ << '"' << json_escape(key) << "\": " << value;
}

void JsonWriter::field(const std::string& key, bool value) {
    comma();
    indent();
    out_ << '"' << json_escape(key) << "\": " << (value ? "true" : "false");
}

void JsonWriter::finish() { out_ << "\n"; }

}  // namespace crw
