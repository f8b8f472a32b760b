#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace jcorams {

// Shortest decimal form with 6 significant digits ("%.6g").
std::string format_sig(double v);

// RFC-4180-style field quoting: fields containing commas, quotes or
// newlines are wrapped in double quotes with embedded quotes doubled.
std::string csv_escape(const std::string& field);

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);

    void row(const std::vector<std::string>& fields);

private:
    std::ofstream out_;
    std::string path_;
};

// Splits one CSV line honoring RFC-4180 quoting.
std::vector<std::string> csv_split(const std::string& line);

// Reads a whole CSV file into rows of fields (header included).
std::vector<std::vector<std::string>> read_csv(const std::string& path);

} // namespace jcorams
