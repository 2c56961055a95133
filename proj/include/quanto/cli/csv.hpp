#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quanto::cli {

/// Shortest text that reads back to the same double.
std::string format_double(double v);

/// RFC-4180 style writer: comma separated, CRLF-free, fields quoted when needed.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void comment(const std::string& text);
    void row(const std::vector<std::string>& fields);

private:
    std::ostream& out_;
};

/// Minimal reader for files written by CsvWriter; skips '#' comment lines.
std::vector<std::vector<std::string>> read_csv(const std::string& path);

}  // namespace quanto::cli
