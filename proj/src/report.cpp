#include "wqed/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wqed/errors.hpp"

namespace wqed::report {

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0.0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

nlohmann::json json_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0.0 ? "inf" : "-inf";
    return x;
}

nlohmann::json json_complex(std::complex<double> z) {
    return nlohmann::json::array({json_number(z.real()), json_number(z.imag())});
}

std::string CsvTable::str() const {
    std::ostringstream out;
    auto emit_row = [&out](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            out << cells[i];
        }
        out << '\n';
    };
    emit_row(header);
    for (const auto& row : rows) emit_row(row);
    return out.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out) throw BadConfig("cannot open output path \"" + path + "\"");
    out << text;
    if (!out) throw BadConfig("short write to \"" + path + "\"");
}

}  // namespace wqed::report
