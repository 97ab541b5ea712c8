#ifndef MRWLAB_CSV_HPP
#define MRWLAB_CSV_HPP

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace mrwlab {

/// Splits one CSV line on commas. No quoting: none of the file formats
/// emitted or consumed here contain embedded commas.
std::vector<std::string> split_csv_line(const std::string& line);

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_full(double v);

/// Parses a double, throwing ParseError with the given line number on failure.
double parse_double(const std::string& field, std::size_t line);

/// Line-oriented CSV reader with a mandatory header check.
class CsvReader {
public:
    CsvReader(const std::filesystem::path& path,
              const std::string& expected_header);

    /// Reads the next data row; returns false at end of file.
    /// Throws ParseError if the field count deviates from the header.
    bool next(std::vector<std::string>& fields);

    std::size_t line_number() const { return line_; }

private:
    std::ifstream in_;
    std::string path_;
    std::size_t line_ = 0;
    std::size_t n_fields_ = 0;
};

/// CSV writer emitting '\n' line endings regardless of platform.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::string& header);
    void row(const std::vector<std::string>& fields);
    void close();

private:
    std::ofstream out_;
    std::string path_;
};

} // namespace mrwlab

#endif
