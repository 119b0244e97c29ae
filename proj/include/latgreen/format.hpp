#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace latgreen::fmt {

// Round-trip formatting: 17 significant digits, always with a decimal point
// (or exponent) so values read back as floating point.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    std::string s(buf);
    if (s.find_first_of(".eE") == std::string::npos &&
        s.find_first_of("0123456789") != std::string::npos) {
        s += ".0";
    }
    return s;
}

// RFC-4180 style row: comma separated, LF line ending.
inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    out += '\n';
    return out;
}

}  // namespace latgreen::fmt
