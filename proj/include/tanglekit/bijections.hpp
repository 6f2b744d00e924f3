#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "tableau.hpp"

namespace tanglekit {

/// Sequence of 2n+1 shapes from the empty shape back to the empty shape,
/// consecutive shapes differing by at most one square.
struct VacillatingTableau {
    std::vector<Shape> shapes;

    int steps() const { return static_cast<int>(shapes.size()) - 1; }
    int vertices() const { return steps() / 2; }

    int max_rows() const {
        int m = 0;
        for (const auto& s : shapes) m = std::max(m, s.row_count());
        return m;
    }

    auto operator<=>(const VacillatingTableau&) const = default;
};

enum class HalfStepKind { none, add, remove };

struct HalfStep {
    HalfStepKind kind = HalfStepKind::none;
    int row = 0; // 1-based row index for add/remove

    auto operator<=>(const HalfStep&) const = default;
};

/// Difference of two consecutive shapes; Inconsistent unless they agree or
/// differ by exactly one square at a valid corner.
inline HalfStep shape_delta(const Shape& from, const Shape& to) {
    if (from == to) return {HalfStepKind::none, 0};
    int rf = from.row_count(), rt = to.row_count();
    if (std::abs(rf - rt) > 1) fail(errc::inconsistent, "shapes differ by more than one square");
    int hi = std::max(rf, rt);
    std::optional<HalfStep> delta;
    for (int r = 0; r < hi; ++r) {
        int a = from.row(r), b = to.row(r);
        if (a == b) continue;
        if (delta || std::abs(a - b) != 1)
            fail(errc::inconsistent, "shapes differ by more than one square");
        delta = HalfStep{b > a ? HalfStepKind::add : HalfStepKind::remove, r + 1};
    }
    if (!delta) fail(errc::inconsistent, "shape sequence malformed");
    return *delta;
}

inline std::vector<std::pair<HalfStep, HalfStep>> step_pairs(const VacillatingTableau& vt) {
    std::vector<std::pair<HalfStep, HalfStep>> out;
    for (int i = 0; i + 2 < static_cast<int>(vt.shapes.size()); i += 2)
        out.emplace_back(shape_delta(vt.shapes[static_cast<size_t>(i)],
                                     vt.shapes[static_cast<size_t>(i) + 1]),
                         shape_delta(vt.shapes[static_cast<size_t>(i) + 1],
                                     vt.shapes[static_cast<size_t>(i) + 2]));
    return out;
}

namespace detail {

// Forward action of one half-step on the inflated diagram: open an arc at a
// label, close the arc ending at a label, or do nothing. A degree-2 vertex v
// acts at both of its half-steps (label v at the odd one, v' at the even
// one); a degree-1 vertex opens at its even half-step and closes at its odd
// one, matching the step alphabets S_M, S_P, S_B.
struct Action {
    enum Kind { none, open, close } kind = none;
    int label = 0;
};

inline std::array<Action, 2> vertex_actions(const InflatedMatching& m,
                                            const std::map<int, int>& partner, int v) {
    std::array<Action, 2> acts; // [0] odd half-step, [1] even half-step
    bool primed = std::binary_search(m.ground.begin(), m.ground.end(), prime_label(v));
    auto act_of = [&](int label) -> Action {
        auto it = partner.find(label);
        if (it == partner.end()) return {};
        return {it->second > label ? Action::open : Action::close, label};
    };
    if (primed) {
        acts[0] = act_of(base_label(v));
        acts[1] = act_of(prime_label(v));
    } else {
        Action a = act_of(base_label(v));
        if (a.kind == Action::open) acts[1] = a;
        else if (a.kind == Action::close) acts[0] = a;
    }
    return acts;
}

// removes the cell holding the current maximum entry (inverse of placing it)
inline StandardTableau remove_max_entry(StandardTableau t, int entry) {
    for (size_t r = 0; r < t.cells.size(); ++r) {
        auto& row = t.cells[r];
        if (!row.empty() && row.back() == entry) {
            row.pop_back();
            if (row.empty()) t.cells.erase(t.cells.begin() + static_cast<long>(r));
            return t;
        }
    }
    fail(errc::inconsistent, "entry not at a corner");
}

} // namespace detail

/// Encodes a diagram as its vacillating tableau. The construction scans the
/// inflated half-steps from right to left, row-inserting the open
/// left-endpoint label when an arc closes and removing it again when the scan
/// passes the arc's opening; the recorded shapes, read back left to right,
/// form the tableau. Scanned forward this is exactly: place the current label
/// when a square is added, reverse-bump when one is removed.
inline VacillatingTableau diagram_to_tableau(const TangledDiagram& d) {
    InflatedMatching m = inflate(d);
    std::map<int, int> partner;
    for (auto [a, b] : m.arcs) {
        partner[a] = b;
        partner[b] = a;
    }
    std::vector<Shape> shapes(static_cast<size_t>(2 * d.n) + 1);
    StandardTableau t;
    shapes[static_cast<size_t>(2 * d.n)] = Shape{};
    for (int v = d.n; v >= 1; --v) {
        auto acts = detail::vertex_actions(m, partner, v);
        for (int half = 1; half >= 0; --half) {
            const auto& a = acts[static_cast<size_t>(half)];
            if (a.kind == detail::Action::close)
                t = rsk_insert(std::move(t), partner.at(a.label));
            else if (a.kind == detail::Action::open)
                t = detail::remove_max_entry(std::move(t), a.label);
            shapes[static_cast<size_t>(2 * (v - 1) + half)] = t.shape();
        }
    }
    if (!t.empty()) fail(errc::inconsistent, "unclosed arcs");
    return VacillatingTableau{std::move(shapes)};
}

/// Inverse of diagram_to_tableau: replay the shape sequence left to right,
/// placing each half-step's label on +square and reverse-bumping at the
/// indicated corner on -square; the exit value names the arc being closed.
inline TangledDiagram tableau_to_diagram(const VacillatingTableau& vt) {
    const auto& sh = vt.shapes;
    if (sh.size() < 3 || sh.size() % 2 == 0)
        fail(errc::inconsistent, "shape sequence must have odd length >= 3");
    if (!sh.front().empty() || !sh.back().empty())
        fail(errc::inconsistent, "shape sequence must start and end empty");
    int n = vt.vertices();

    StandardTableau t;
    std::vector<int> ground;
    std::vector<std::pair<int, int>> arcs;
    for (int v = 1; v <= n; ++v) {
        HalfStep odd = shape_delta(sh[static_cast<size_t>(2 * v - 2)],
                                   sh[static_cast<size_t>(2 * v - 1)]);
        HalfStep even = shape_delta(sh[static_cast<size_t>(2 * v - 1)],
                                    sh[static_cast<size_t>(2 * v)]);
        bool both = odd.kind != HalfStepKind::none && even.kind != HalfStepKind::none;
        ground.push_back(base_label(v));
        if (both) ground.push_back(prime_label(v));
        if (!both) {
            if (odd.kind == HalfStepKind::add || even.kind == HalfStepKind::remove)
                fail(errc::inconsistent,
                     "degree-1 steps must remove at the odd or add at the even half-step");
        }
        auto apply = [&](const HalfStep& hs, int label) {
            if (hs.kind == HalfStepKind::none) return;
            if (hs.kind == HalfStepKind::add) {
                int r = hs.row - 1;
                if (r == static_cast<int>(t.cells.size()))
                    t.cells.push_back({label});
                else
                    t.cells[static_cast<size_t>(r)].push_back(label);
            } else {
                auto [reduced, exit] = reverse_bump(t, hs.row - 1);
                t = std::move(reduced);
                arcs.emplace_back(exit, label);
            }
        };
        apply(odd, base_label(v));
        apply(even, both ? prime_label(v) : base_label(v));
    }
    if (!t.empty()) fail(errc::inconsistent, "shape sequence leaves open arcs");
    std::sort(arcs.begin(), arcs.end());
    return deflate(InflatedMatching{std::move(ground), std::move(arcs)});
}

// ---------------------------------------------------------------------------
// The partition <-> braid duality: arcs (i,j) shift to (i,j-1), vertices left
// isolated by the shift become loops, vertex n is dropped, and every non-loop
// degree-2 vertex of the image is crossed.
// ---------------------------------------------------------------------------

inline TangledDiagram theta(const TangledDiagram& p) {
    bool two_regular;
    try {
        two_regular = is_two_regular(p);
    } catch (const error&) {
        two_regular = false;
    }
    if (!two_regular || p.n < 2)
        fail(errc::not_two_regular_partition, "theta requires a 2-regular partition on n >= 2");
    int m = p.n - 1;
    std::vector<Arc> arcs;
    std::vector<bool> touched(static_cast<size_t>(m) + 1, false);
    for (auto [i, j] : p.arcs) {
        arcs.emplace_back(i, j - 1);
        touched[static_cast<size_t>(i)] = true;
        touched[static_cast<size_t>(j - 1)] = true;
    }
    for (int v = 1; v <= m; ++v)
        if (!touched[static_cast<size_t>(v)]) arcs.emplace_back(v, v);

    TangledDiagram b = make_diagram(m, std::move(arcs), {});
    auto ve = vertex_ends(b);
    std::vector<int> crossed;
    for (int v = 1; v <= m; ++v)
        if (ve[v].degree == 2 && !ve[v].loop) crossed.push_back(v);
    return make_diagram(m, b.arcs, std::move(crossed));
}

inline TangledDiagram theta_inv(const TangledDiagram& b) {
    if (!satisfies(b, DiagramClass::braid_no_isolated))
        fail(errc::not_braid, "theta_inv requires a braid without isolated points");
    std::vector<Arc> arcs;
    for (auto [i, j] : b.arcs) {
        if (i == j) continue; // loop becomes an isolated vertex
        arcs.emplace_back(i, j + 1);
    }
    return make_diagram(b.n + 1, std::move(arcs), {});
}

} // namespace tanglekit
