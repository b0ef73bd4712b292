#include <algorithm>
#include <set>

#include "ptile/ccs.hpp"
#include "ptile/error.hpp"
#include "ptile/system_index.hpp"

namespace ptile {

CurveSystem apply_rototiler(const CurveSystem& system, const FaceLoop& face) {
    const SystemIndex index(system);
    if (face.size() != 3)
        throw Error(ErrorCode::not_a_triangle,
                    "face has " + std::to_string(face.size()) + " borders, a rototiler move needs 3");

    std::vector<std::size_t> ids;
    for (const Border& b : face.borders) {
        const long id = index.find_border(b);
        if (id < 0) throw Error(ErrorCode::not_a_triangle, "border " + to_string(b) + " is not a border of the system");
        ids.push_back(static_cast<std::size_t>(id));
    }
    for (std::size_t t = 0; t < 3; ++t)
        if (index.successor(ids[t]) != ids[(t + 1) % 3])
            throw Error(ErrorCode::not_a_triangle, "the three borders do not form a face loop");

    std::set<std::size_t> curves;
    std::set<std::size_t> labels;
    for (std::size_t id : ids) {
        const std::size_t start = SystemIndex::border_slot(id);
        curves.insert(index.slot_curve(start));
        labels.insert(index.slot_label(start));
        labels.insert(index.slot_label(index.next_slot(start)));
    }
    if (curves.size() != 3 || labels.size() != 3)
        throw Error(ErrorCode::degenerate_hexagon, "triangle does not meet three distinct curves at three distinct labels");

    CurveSystem out = system;
    for (std::size_t id : ids) {
        const std::size_t start = SystemIndex::border_slot(id);
        const std::size_t end = index.next_slot(start);
        const std::size_t curve = index.slot_curve(start);
        const std::size_t base = index.curve_begin(curve);
        std::vector<int> entries = out.curves[curve].entries();
        std::swap(entries[start - base], entries[end - base]);
        out.curves[curve] = Curve(std::move(entries));
    }
    return out;
}

}  // namespace ptile
