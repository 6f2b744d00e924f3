#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "errors.hpp"

namespace tanglekit {

/// Young diagram shape: weakly decreasing row lengths, trailing zeros trimmed.
struct Shape {
    std::vector<int> rows;

    Shape() = default;
    explicit Shape(std::vector<int> r) : rows(std::move(r)) {
        while (!rows.empty() && rows.back() == 0) rows.pop_back();
        for (size_t i = 0; i + 1 < rows.size(); ++i)
            if (rows[i] < rows[i + 1]) fail(errc::inconsistent, "shape rows not weakly decreasing");
        if (!rows.empty() && rows.back() < 0) fail(errc::inconsistent, "negative row length");
    }

    bool empty() const { return rows.empty(); }
    int row_count() const { return static_cast<int>(rows.size()); }
    int row(int r) const { return r < row_count() ? rows[static_cast<size_t>(r)] : 0; }

    auto operator<=>(const Shape&) const = default;
};

inline std::string to_string(const Shape& s) {
    if (s.empty()) return "()";
    std::string out = "(";
    for (size_t i = 0; i < s.rows.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.rows[i]);
    }
    return out + ")";
}

/// Standard tableau with distinct integer entries, strictly increasing along
/// rows and down columns.
struct StandardTableau {
    std::vector<std::vector<int>> cells;

    bool empty() const { return cells.empty(); }

    Shape shape() const {
        std::vector<int> rows;
        rows.reserve(cells.size());
        for (const auto& r : cells) rows.push_back(static_cast<int>(r.size()));
        return Shape(std::move(rows));
    }

    bool contains(int x) const {
        for (const auto& r : cells)
            for (int e : r)
                if (e == x) return true;
        return false;
    }

    /// Rows whose last cell can be removed without breaking the shape.
    std::vector<int> removable_rows() const {
        std::vector<int> out;
        for (size_t r = 0; r < cells.size(); ++r)
            if (r + 1 == cells.size() || cells[r].size() > cells[r + 1].size())
                out.push_back(static_cast<int>(r));
        return out;
    }

    auto operator<=>(const StandardTableau&) const = default;
};

/// RSK row insertion: x replaces the leftmost entry greater than x in row 1,
/// the displaced entry is inserted into row 2, and so on; a value with no
/// larger entry in its row is appended. Adds exactly one cell.
inline StandardTableau rsk_insert(StandardTableau t, int x) {
    if (t.contains(x)) fail(errc::duplicate_entry, "entry " + std::to_string(x));
    int carry = x;
    for (size_t r = 0;; ++r) {
        if (r == t.cells.size()) {
            t.cells.push_back({carry});
            return t;
        }
        auto& row = t.cells[r];
        auto it = std::upper_bound(row.begin(), row.end(), carry);
        if (it == row.end()) {
            row.push_back(carry);
            return t;
        }
        std::swap(*it, carry);
    }
}

/// Inverse bump starting from a removable corner: the corner entry moves up,
/// replacing the rightmost smaller entry in each row above, until a value
/// exits row 1. Returns the reduced tableau and the exit value;
/// rsk_insert(result, exit) restores the input.
inline std::pair<StandardTableau, int> reverse_bump(StandardTableau t, int corner_row) {
    auto removable = t.removable_rows();
    if (std::find(removable.begin(), removable.end(), corner_row) == removable.end())
        fail(errc::not_a_corner, "row " + std::to_string(corner_row));
    int carry = t.cells[static_cast<size_t>(corner_row)].back();
    t.cells[static_cast<size_t>(corner_row)].pop_back();
    if (t.cells[static_cast<size_t>(corner_row)].empty())
        t.cells.erase(t.cells.begin() + corner_row);
    for (int r = corner_row - 1; r >= 0; --r) {
        auto& row = t.cells[static_cast<size_t>(r)];
        auto it = std::lower_bound(row.begin(), row.end(), carry);
        // strictly smaller entry exists in every row above a valid corner
        --it;
        std::swap(*it, carry);
    }
    return {std::move(t), carry};
}

/// Deletes an entry via a reverse bump whose exit is e, trying removable
/// corners top to bottom. Several corners can share an exit value; the
/// decoding path never relies on this search (corners there come from the
/// shape sequence), so the first match is fine.
inline StandardTableau delete_entry(const StandardTableau& t, int e) {
    for (int r : t.removable_rows()) {
        auto [reduced, exit] = reverse_bump(t, r);
        if (exit == e) return reduced;
    }
    fail(errc::inconsistent, "no reverse bump exits " + std::to_string(e));
}

} // namespace tanglekit
