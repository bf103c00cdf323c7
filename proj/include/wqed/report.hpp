#pragma once

#include <complex>
#include <string>
#include <vector>

#include "json.hpp"

namespace wqed::report {

// Shared number rendering for all emitters: 12 significant digits, so a
// rerun of the same config is byte-identical. Infinities print as "inf"
// and "-inf" (sweep rows over the lossless limit stay greppable).
std::string format_number(double x);

// JSON value for a possibly infinite quantity: finite numbers stay
// numbers, infinities become the strings "inf"/"-inf" (JSON itself has
// no literal for them).
nlohmann::json json_number(double x);

// Complex numbers serialize as the pair [re, im].
nlohmann::json json_complex(std::complex<double> z);

// Comma separated table with one fixed header row. Cells are rendered up
// front so emitters stay trivial; nothing ever needs quoting.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string str() const;
};

// Write to a file, or to stdout when path is "-".
void write_text(const std::string& path, const std::string& text);

}  // namespace wqed::report
