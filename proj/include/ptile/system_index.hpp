#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "ptile/ccs.hpp"

namespace ptile {

/// Corner of the parallelogram at a label that a face turns through, given
/// as the signs (s_plus, s_minus) of the offset
///   center + s_plus * e_plus / 2 + s_minus * e_minus / 2,
/// where e_plus / e_minus are the edge vectors of the curves carrying +k / -k.
struct CornerSigns {
    int plus = 0;
    int minus = 0;
};

/// Flat index over a valid curve system. Entries are numbered in curve order
/// ("slots"); labels are re-indexed 0..n-1 in increasing order of their
/// original value. Borders are numbered 2 * start_slot + (negated ? 1 : 0).
class SystemIndex {
public:
    /// Throws Error(invalid_system) if the system fails validation.
    explicit SystemIndex(const CurveSystem& system);

    std::size_t curve_count() const noexcept { return curve_offset_.size() - 1; }
    std::size_t label_count() const noexcept { return labels_.size(); }
    std::size_t slot_count() const noexcept { return slot_value_.size(); }
    std::size_t border_count() const noexcept { return 2 * slot_count(); }

    int original_label(std::size_t label) const { return labels_[label]; }
    /// Returns -1 when absent.
    int label_index(int original) const;

    int slot_value(std::size_t slot) const { return slot_value_[slot]; }
    std::size_t slot_curve(std::size_t slot) const { return slot_curve_[slot]; }
    std::size_t slot_label(std::size_t slot) const { return slot_label_[slot]; }
    int slot_sign(std::size_t slot) const { return slot_value_[slot] > 0 ? 1 : -1; }
    std::size_t next_slot(std::size_t slot) const;
    std::size_t prev_slot(std::size_t slot) const;
    std::size_t curve_begin(std::size_t curve) const { return curve_offset_[curve]; }
    std::size_t curve_end(std::size_t curve) const { return curve_offset_[curve + 1]; }

    std::size_t plus_slot(std::size_t label) const { return plus_slot_[label]; }
    std::size_t minus_slot(std::size_t label) const { return minus_slot_[label]; }
    std::size_t plus_curve(std::size_t label) const { return slot_curve_[plus_slot_[label]]; }
    std::size_t minus_curve(std::size_t label) const { return slot_curve_[minus_slot_[label]]; }
    /// Curve crossing `curve` at the entry in `slot`.
    std::size_t other_curve(std::size_t slot) const;

    static std::size_t border_id(std::size_t start_slot, bool negated) {
        return 2 * start_slot + (negated ? 1 : 0);
    }
    static std::size_t border_slot(std::size_t id) { return id / 2; }
    static bool border_negated(std::size_t id) { return (id & 1U) != 0; }

    std::size_t successor(std::size_t border) const;
    std::size_t predecessor(std::size_t border) const { return pred_[border]; }
    /// Label at which `border` turns into its successor.
    std::size_t turn_label(std::size_t border) const;
    /// Corner of the parallelogram at turn_label(border) that the turn passes.
    CornerSigns turn_corner(std::size_t border) const;

    Border to_border(std::size_t id) const;
    /// Returns -1 when the border does not belong to the system.
    long find_border(const Border& border) const;

    /// Successor orbits as border ids, each rotated to start at the minimal
    /// Border and sorted by that border.
    std::vector<std::vector<std::size_t>> face_orbits() const;

private:
    std::vector<int> labels_;
    std::unordered_map<int, std::size_t> label_lookup_;
    std::vector<std::size_t> curve_offset_;
    std::vector<int> slot_value_;
    std::vector<std::size_t> slot_curve_;
    std::vector<std::size_t> slot_label_;
    std::vector<std::size_t> plus_slot_;
    std::vector<std::size_t> minus_slot_;
    std::vector<std::size_t> pred_;
};

}  // namespace ptile
