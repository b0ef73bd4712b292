#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "ptile/error.hpp"
#include "ptile/json_out.hpp"
#include "ptile/tiler.hpp"

namespace ptile {

namespace {

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// HSL with fixed saturation and lightness, written as #rrggbb for SVG 1.1.
std::string hsl_hex(double hue, double sat, double light) {
    const double ch = (1.0 - std::abs(2.0 * light - 1.0)) * sat;
    const double hp = hue / 60.0;
    const double x = ch * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    if (hp < 1) r = ch, g = x;
    else if (hp < 2) r = x, g = ch;
    else if (hp < 3) g = ch, b = x;
    else if (hp < 4) g = x, b = ch;
    else if (hp < 5) r = x, b = ch;
    else r = ch, b = x;
    const double m = light - ch / 2.0;
    auto byte = [&](double v) { return static_cast<int>(std::lround((v + m) * 255.0)); };
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", byte(r), byte(g), byte(b));
    return buf;
}

Complex read_point(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw Error(ErrorCode::bad_input, "expected a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string label_color(int label) {
    // Golden-angle hue steps keep neighbouring labels apart.
    const double hue = std::fmod(std::abs(static_cast<double>(label)) * 137.50776405003785, 360.0);
    return hsl_hex(hue, 0.55, 0.72);
}

std::string export_svg(const TilingPatch& patch, const SvgOptions& options) {
    const PatchData data = flatten(patch);
    double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x, lo_y = lo_x, hi_y = -lo_x;
    auto grow = [&](Complex z) {
        lo_x = std::min(lo_x, z.real());
        hi_x = std::max(hi_x, z.real());
        lo_y = std::min(lo_y, z.imag());
        hi_y = std::max(hi_y, z.imag());
    };
    for (const auto& cell : data.cells)
        for (Complex z : cell.corners) grow(z);
    const bool overlay = options.overlay && !data.zones.empty();
    if (overlay)
        for (const auto& line : data.zones)
            for (Complex z : line) grow(z);
    if (data.cells.empty()) lo_x = hi_x = lo_y = hi_y = 0.0;

    const double s = options.scale, pad = options.margin;
    // y is flipped so that counter-clockwise stays counter-clockwise on screen.
    auto pt = [&](Complex z) { return fixed((z.real() - lo_x) * s + pad) + "," + fixed((hi_y - z.imag()) * s + pad); };
    const std::string w = fixed((hi_x - lo_x) * s + 2 * pad), h = fixed((hi_y - lo_y) * s + 2 * pad);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
           "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
    out += "<g stroke=\"#303030\" stroke-width=\"1\" stroke-linejoin=\"round\">\n";
    for (const auto& cell : data.cells) {
        out += "<polygon points=\"";
        for (std::size_t t = 0; t < 4; ++t) out += (t ? " " : "") + pt(cell.corners[t]);
        out += "\" fill=\"" + label_color(cell.label) + "\"/>\n";
    }
    out += "</g>\n";
    if (overlay) {
        out += "<g fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\">\n";
        for (const auto& line : data.zones) {
            out += "<polyline points=\"";
            for (std::size_t t = 0; t < line.size(); ++t) out += (t ? " " : "") + pt(line[t]);
            out += "\"/>\n";
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string export_json(const PatchData& data) {
    std::string out = "{\"lattice\":[" + json::point(data.lattice.a) + "," + json::point(data.lattice.b) + "],\"cells\":[";
    for (std::size_t k = 0; k < data.cells.size(); ++k) {
        const auto& cell = data.cells[k];
        if (k) out += ",";
        out += "\n{\"label\":" + std::to_string(cell.label) + ",\"center\":" + json::point(cell.center) +
               ",\"corners\":" + json::points({cell.corners.begin(), cell.corners.end()}) + "}";
    }
    out += "],\"zones\":[";
    for (std::size_t k = 0; k < data.zones.size(); ++k) out += (k ? ",\n" : "\n") + json::points(data.zones[k]);
    out += "]}\n";
    return out;
}

std::string export_json(const TilingPatch& patch) { return export_json(flatten(patch)); }

PatchData import_json(const std::string& text) try {
    const nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.is_object() || !doc.contains("lattice") || !doc.contains("cells"))
        throw Error(ErrorCode::bad_input, "patch JSON needs \"lattice\" and \"cells\"");
    PatchData data;
    const auto& lat = doc["lattice"];
    if (!lat.is_array() || lat.size() != 2) throw Error(ErrorCode::bad_input, "lattice must hold two vectors");
    data.lattice = {read_point(lat[0]), read_point(lat[1])};
    for (const auto& c : doc["cells"]) {
        PatchCell cell;
        if (!c.contains("label") || !c["label"].is_number_integer())
            throw Error(ErrorCode::bad_input, "cell without an integer label");
        cell.label = c["label"].get<int>();
        cell.center = read_point(c.at("center"));
        const auto& corners = c.at("corners");
        if (!corners.is_array() || corners.size() != 4) throw Error(ErrorCode::bad_input, "a cell has four corners");
        for (std::size_t t = 0; t < 4; ++t) cell.corners[t] = read_point(corners[t]);
        data.cells.push_back(cell);
    }
    if (doc.contains("zones"))
        for (const auto& line : doc["zones"]) {
            std::vector<Complex> pts;
            for (const auto& p : line) pts.push_back(read_point(p));
            data.zones.push_back(std::move(pts));
        }
    return data;
} catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::bad_input, std::string("malformed patch JSON: ") + e.what());
}

}  // namespace ptile
