#include "mrwlab/csv.hpp"
#include "mrwlab/errors.hpp"

#include <cstdio>
#include <cstdlib>

namespace mrwlab {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& field, std::size_t line) {
    const char* s = field.c_str();
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (end == s || *end != '\0')
        throw ParseError("cannot parse number '" + field + "'", line);
    return v;
}

CsvReader::CsvReader(const std::filesystem::path& path,
                     const std::string& expected_header)
    : in_(path), path_(path.string()) {
    if (!in_) throw ValidationError("cannot open file '" + path_ + "'");
    std::string header;
    if (!std::getline(in_, header))
        throw ParseError("empty file '" + path_ + "'", 1);
    if (!header.empty() && header.back() == '\r') header.pop_back();
    line_ = 1;
    if (header != expected_header)
        throw ParseError("unexpected header '" + header + "' in '" + path_ +
                             "', expected '" + expected_header + "'",
                         1);
    n_fields_ = split_csv_line(expected_header).size();
}

bool CsvReader::next(std::vector<std::string>& fields) {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        fields = split_csv_line(line);
        if (fields.size() != n_fields_)
            throw ParseError("expected " + std::to_string(n_fields_) +
                                 " fields, got " + std::to_string(fields.size()) +
                                 " in '" + path_ + "'",
                             line_);
        return true;
    }
    return false;
}

CsvWriter::CsvWriter(const std::filesystem::path& path,
                     const std::string& header)
    : out_(path, std::ios::binary), path_(path.string()) {
    if (!out_) throw ValidationError("cannot create file '" + path_ + "'");
    out_ << header << '\n';
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out_ << ',';
        out_ << fields[i];
    }
    out_ << '\n';
}

void CsvWriter::close() {
    out_.close();
    if (!out_) throw ValidationError("write failure on '" + path_ + "'");
}

} // namespace mrwlab
