#include <json.hpp>

#include "ptile/error.hpp"
#include "ptile/geometry.hpp"
#include "ptile/json_out.hpp"

namespace ptile {

EdgeData parse_edge_data(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::bad_input, std::string("malformed edge data: ") + e.what());
    }
    if (!doc.is_array()) throw Error(ErrorCode::bad_input, "edge data must be a JSON array of [re, im] pairs");
    EdgeData e;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& p = doc[i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
            throw Error(ErrorCode::bad_input, "edge vector " + std::to_string(i + 1) + " is not a [re, im] pair");
        e.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    return e;
}

EdgeData read_edge_data_file(const std::string& path) { return parse_edge_data(read_text_file(path)); }

std::string format_edge_data(const EdgeData& e) { return json::points(e) + "\n"; }

}  // namespace ptile
