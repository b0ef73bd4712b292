#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "ptile/ccs.hpp"
#include "ptile/error.hpp"

namespace ptile {

Curve Curve::canonical() const {
    const std::size_t m = entries_.size();
    if (m < 2) return *this;
    std::size_t best = 0;
    for (std::size_t r = 1; r < m; ++r) {
        for (std::size_t k = 0; k < m; ++k) {
            const int a = entries_[(r + k) % m];
            const int b = entries_[(best + k) % m];
            if (a != b) {
                if (a < b) best = r;
                break;
            }
        }
    }
    std::vector<int> out(m);
    for (std::size_t k = 0; k < m; ++k) out[k] = entries_[(best + k) % m];
    return Curve(std::move(out));
}

bool operator==(const Curve& lhs, const Curve& rhs) {
    if (lhs.size() != rhs.size()) return false;
    return lhs.canonical().entries_ == rhs.canonical().entries_;
}

std::size_t CurveHash::operator()(const Curve& curve) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    const Curve c = curve.canonical();
    for (int v : c.entries()) {
        h ^= std::hash<int>{}(v);
        h *= 1099511628211ULL;
    }
    return h;
}

std::vector<int> CurveSystem::labels() const {
    std::set<int> seen;
    for (const auto& c : curves)
        for (int v : c.entries())
            if (v != 0) seen.insert(v < 0 ? -v : v);
    return {seen.begin(), seen.end()};
}

std::size_t CurveSystem::entry_count() const noexcept {
    std::size_t total = 0;
    for (const auto& c : curves) total += c.size();
    return total;
}

bool operator==(const CurveSystem& lhs, const CurveSystem& rhs) {
    return lhs.curves == rhs.curves;
}

ValidationReport validate(const CurveSystem& system) {
    ValidationReport report;
    auto add = [&](ViolationKind kind, int label, std::size_t curve, std::string msg) {
        report.violations.push_back({kind, label, curve, std::move(msg)});
    };

    if (system.curves.size() < 2)
        add(ViolationKind::too_few_curves, 0, 0,
            "a curve system needs at least 2 curves, got " + std::to_string(system.curves.size()));

    // signed value -> curves it occurs on (with multiplicity)
    std::map<int, std::vector<std::size_t>> occurrences;
    for (std::size_t i = 0; i < system.curves.size(); ++i) {
        const auto& c = system.curves[i];
        if (c.empty()) add(ViolationKind::empty_curve, 0, i, "curve " + std::to_string(i + 1) + " is empty");
        for (int v : c.entries()) {
            if (v == 0) {
                add(ViolationKind::zero_label, 0, i, "curve " + std::to_string(i + 1) + " contains label 0");
                continue;
            }
            occurrences[v].push_back(i);
        }
    }

    for (const auto& [value, where] : occurrences) {
        if (where.size() > 1)
            add(ViolationKind::duplicate_entry, value, where[1],
                std::to_string(value) + " appears " + std::to_string(where.size()) + " times");
        if (value > 0) {
            auto it = occurrences.find(-value);
            if (it == occurrences.end()) {
                add(ViolationKind::missing_entry, -value, where[0],
                    std::to_string(-value) + " never appears");
            } else {
                for (std::size_t ci : where)
                    if (std::find(it->second.begin(), it->second.end(), ci) != it->second.end()) {
                        add(ViolationKind::opposite_signs_same_curve, value, ci,
                            "+" + std::to_string(value) + " and " + std::to_string(-value) +
                                " both appear on curve " + std::to_string(ci + 1));
                        break;
                    }
            }
        } else if (occurrences.find(-value) == occurrences.end()) {
            add(ViolationKind::missing_entry, -value, where[0], std::to_string(-value) + " never appears");
        }
    }
    return report;
}

CurveSystem parse_curves(std::string_view text) {
    CurveSystem system;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<int> entries;
        std::size_t i = 0;
        auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
        while (i < line.size()) {
            if (is_space(line[i])) {
                ++i;
                continue;
            }
            const std::size_t begin = i;
            while (i < line.size() && !is_space(line[i])) ++i;
            std::string_view token = line.substr(begin, i - begin);
            const int column = static_cast<int>(begin) + 1;

            std::string_view digits = token;
            if (!digits.empty() && digits.front() == '+') {
                digits.remove_prefix(1);
                if (!digits.empty() && digits.front() == '-') digits = std::string_view();
            }
            int value = 0;
            const char* first = digits.data();
            const char* last = digits.data() + digits.size();
            auto [ptr, ec] = std::from_chars(first, last, value);
            if (digits.empty() || (digits.front() == '-' && digits.size() == 1) || ec == std::errc::invalid_argument ||
                ptr != last)
                throw ParseError(line_no, column, "expected a signed integer, got '" + std::string(token) + "'");
            if (ec == std::errc::result_out_of_range)
                throw ParseError(line_no, column, "label out of range: '" + std::string(token) + "'");
            if (value == 0) throw ParseError(line_no, column, "labels must be nonzero");
            if (value == std::numeric_limits<int>::min())
                throw ParseError(line_no, column, "label out of range: '" + std::string(token) + "'");
            entries.push_back(value);
        }
        if (!entries.empty()) system.curves.emplace_back(std::move(entries));
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    return system;
}

CurveSystem parse_curve_system(std::string_view text) {
    CurveSystem system = parse_curves(text);
    const ValidationReport report = validate(system);
    if (!report.ok()) {
        std::string msg = "invalid curve system: " + report.violations.front().message;
        if (report.violations.size() > 1)
            msg += " (and " + std::to_string(report.violations.size() - 1) + " more)";
        throw Error(ErrorCode::invalid_system, msg);
    }
    return system;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::bad_input, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CurveSystem read_curve_system_file(const std::string& path) {
    return parse_curve_system(read_text_file(path));
}

std::string serialize(const CurveSystem& system) {
    std::string out;
    for (const auto& curve : system.curves) {
        const Curve c = curve.canonical();
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k) out += ' ';
            out += std::to_string(c[k]);
        }
        out += '\n';
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Curve& curve) {
    os << '(';
    for (std::size_t k = 0; k < curve.size(); ++k) os << (k ? "," : "") << curve[k];
    return os << ')';
}

}  // namespace ptile
