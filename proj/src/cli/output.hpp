#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace kgscat::cli {

enum class Format { Csv, Json };

// Empty cell / JSON null, number, integer, flag, text.
using Field = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

// %.9g, the fixed formatting of every floating value the CLI prints.
std::string format_number(double x);

/// Buffers rows and writes them in one go: CSV with a header row, or a JSON
/// array of flat objects with the same field names.
class RowWriter {
public:
    explicit RowWriter(std::vector<std::string> columns);

    void add(std::vector<Field> row);
    std::size_t size() const noexcept { return rows_.size(); }
    void write(std::ostream& os, Format format) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Field>> rows_;
};

} // namespace kgscat::cli
