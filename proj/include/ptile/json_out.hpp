#pragma once

// Minimal JSON text helpers. Doubles are written with 17 significant digits
// so that parsing them back is exact.

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

namespace ptile::json {

inline std::string number(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string point(std::complex<double> z) { return "[" + number(z.real()) + "," + number(z.imag()) + "]"; }

inline std::string points(const std::vector<std::complex<double>>& zs) {
    std::string out = "[";
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (i) out += ",";
        out += point(zs[i]);
    }
    return out + "]";
}

inline std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    return out + "\"";
}

}  // namespace ptile::json
