#include <algorithm>

#include "ptile/error.hpp"
#include "ptile/system_index.hpp"

namespace ptile {

SystemIndex::SystemIndex(const CurveSystem& system) {
    const ValidationReport report = validate(system);
    if (!report.ok()) throw Error(ErrorCode::invalid_system, "invalid curve system: " + report.violations.front().message);

    labels_ = system.labels();
    label_lookup_.reserve(labels_.size());
    for (std::size_t k = 0; k < labels_.size(); ++k) label_lookup_.emplace(labels_[k], k);

    const std::size_t total = system.entry_count();
    curve_offset_.reserve(system.curves.size() + 1);
    slot_value_.reserve(total);
    slot_curve_.reserve(total);
    slot_label_.reserve(total);
    plus_slot_.assign(labels_.size(), 0);
    minus_slot_.assign(labels_.size(), 0);

    curve_offset_.push_back(0);
    for (std::size_t i = 0; i < system.curves.size(); ++i) {
        for (int v : system.curves[i].entries()) {
            const std::size_t slot = slot_value_.size();
            const std::size_t label = label_lookup_.at(v < 0 ? -v : v);
            slot_value_.push_back(v);
            slot_curve_.push_back(i);
            slot_label_.push_back(label);
            (v > 0 ? plus_slot_ : minus_slot_)[label] = slot;
        }
        curve_offset_.push_back(slot_value_.size());
    }

    pred_.assign(border_count(), 0);
    for (std::size_t b = 0; b < border_count(); ++b) pred_[successor(b)] = b;
}

int SystemIndex::label_index(int original) const {
    auto it = label_lookup_.find(original);
    return it == label_lookup_.end() ? -1 : static_cast<int>(it->second);
}

std::size_t SystemIndex::next_slot(std::size_t slot) const {
    const std::size_t c = slot_curve_[slot];
    return slot + 1 == curve_offset_[c + 1] ? curve_offset_[c] : slot + 1;
}

std::size_t SystemIndex::prev_slot(std::size_t slot) const {
    const std::size_t c = slot_curve_[slot];
    return slot == curve_offset_[c] ? curve_offset_[c + 1] - 1 : slot - 1;
}

std::size_t SystemIndex::other_curve(std::size_t slot) const {
    const std::size_t label = slot_label_[slot];
    return slot_value_[slot] > 0 ? minus_curve(label) : plus_curve(label);
}

// The four successor cases, for a positive label k:
//   [k-, k]        -> [-k, (-k)+]
//   [(-k)-, -k]    -> -[k-, k]
//   -[k, k+]       -> -[(-k)-, -k]
//   -[-k, (-k)+]   -> [k, k+]
std::size_t SystemIndex::successor(std::size_t border) const {
    const std::size_t start = border_slot(border);
    if (!border_negated(border)) {
        const std::size_t end = next_slot(start);
        const std::size_t label = slot_label_[end];
        if (slot_value_[end] > 0) return border_id(minus_slot_[label], false);
        return border_id(prev_slot(plus_slot_[label]), true);
    }
    const std::size_t label = slot_label_[start];
    if (slot_value_[start] > 0) return border_id(prev_slot(minus_slot_[label]), true);
    return border_id(plus_slot_[label], false);
}

std::size_t SystemIndex::turn_label(std::size_t border) const {
    const std::size_t start = border_slot(border);
    return border_negated(border) ? slot_label_[start] : slot_label_[next_slot(start)];
}

CornerSigns SystemIndex::turn_corner(std::size_t border) const {
    const std::size_t start = border_slot(border);
    if (!border_negated(border)) {
        const bool positive_end = slot_value_[next_slot(start)] > 0;
        return positive_end ? CornerSigns{-1, -1} : CornerSigns{+1, -1};
    }
    const bool positive_start = slot_value_[start] > 0;
    return positive_start ? CornerSigns{+1, +1} : CornerSigns{-1, +1};
}

Border SystemIndex::to_border(std::size_t id) const {
    const std::size_t start = border_slot(id);
    return Border{border_negated(id), slot_value_[start], slot_value_[next_slot(start)]};
}

long SystemIndex::find_border(const Border& border) const {
    if (border.start == 0) return -1;
    const int label = label_index(border.start < 0 ? -border.start : border.start);
    if (label < 0) return -1;
    const std::size_t start = border.start > 0 ? plus_slot_[label] : minus_slot_[label];
    if (slot_value_[next_slot(start)] != border.end) return -1;
    return static_cast<long>(border_id(start, border.negated));
}

std::vector<std::vector<std::size_t>> SystemIndex::face_orbits() const {
    std::vector<char> seen(border_count(), 0);
    std::vector<std::vector<std::size_t>> orbits;
    for (std::size_t b = 0; b < border_count(); ++b) {
        if (seen[b]) continue;
        std::vector<std::size_t> orbit;
        std::size_t cur = b;
        do {
            seen[cur] = 1;
            orbit.push_back(cur);
            cur = successor(cur);
        } while (cur != b);
        auto min_it = std::min_element(orbit.begin(), orbit.end(), [&](std::size_t x, std::size_t y) {
            return to_border(x) < to_border(y);
        });
        std::rotate(orbit.begin(), min_it, orbit.end());
        orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end(), [&](const auto& x, const auto& y) {
        return to_border(x.front()) < to_border(y.front());
    });
    return orbits;
}

}  // namespace ptile
