#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace kgscat::cli {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

std::string json_escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out + '"';
}

std::string csv_cell(const Field& f) {
    struct {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(double x) const { return format_number(x); }
        std::string operator()(std::int64_t x) const { return std::to_string(x); }
        std::string operator()(bool x) const { return x ? "true" : "false"; }
        std::string operator()(const std::string& s) const { return csv_escape(s); }
    } visit;
    return std::visit(visit, f);
}

std::string json_value(const Field& f) {
    struct {
        std::string operator()(std::monostate) const { return "null"; }
        std::string operator()(double x) const {
            return std::isfinite(x) ? format_number(x) : "null";
        }
        std::string operator()(std::int64_t x) const { return std::to_string(x); }
        std::string operator()(bool x) const { return x ? "true" : "false"; }
        std::string operator()(const std::string& s) const { return json_escape(s); }
    } visit;
    return std::visit(visit, f);
}

} // namespace

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

RowWriter::RowWriter(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void RowWriter::add(std::vector<Field> row) {
    if (row.size() != columns_.size())
        throw std::logic_error("row width does not match the header");
    rows_.push_back(std::move(row));
}

void RowWriter::write(std::ostream& os, Format format) const {
    if (format == Format::Csv) {
        for (std::size_t i = 0; i < columns_.size(); ++i)
            os << (i ? "," : "") << columns_[i];
        os << '\n';
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << csv_cell(row[i]);
            os << '\n';
        }
        return;
    }
    os << '[';
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        os << (r ? ",\n  {" : "\n  {");
        for (std::size_t i = 0; i < columns_.size(); ++i)
            os << (i ? ", " : "") << json_escape(columns_[i]) << ": " << json_value(rows_[r][i]);
        os << '}';
    }
    os << (rows_.empty() ? "]\n" : "\n]\n");
}

} // namespace kgscat::cli
