#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "diagram.hpp"
#include "integer.hpp"

namespace tanglekit {

/// What to count: a diagram class, the vertex count, optionally the exact
/// number of degree-2 vertices and a noncrossing bound k (keep diagrams whose
/// crossing number is < k).
struct ClassSpec {
    DiagramClass cls = DiagramClass::general;
    int n = 0;
    std::optional<int> ell;
    std::optional<int> k;
};

/// Largest c such that the matching contains c mutually crossing arcs
/// i_1 < ... < i_c < j_1 < ... < j_c; 0 for an arcless matching. Brute-force
/// subset search, kept free of the tableau/DP machinery on purpose.
inline int crossing_number(const InflatedMatching& m) {
    const auto& arcs = m.arcs; // sorted by left endpoint
    int count = static_cast<int>(arcs.size());
    if (count == 0) return 0;
    if (count > 12) fail(errc::too_large, "crossing_number limited to 12 arcs");

    // arcs form a mutually crossing set iff, taken in left-endpoint order,
    // the right endpoints also increase and the last left endpoint precedes
    // the first right endpoint
    std::function<bool(int, int, int, int, int)> extend =
        [&](int from, int picked, int need, int last_right, int first_right) {
            if (picked == need) return true;
            for (int i = from; i <= count - (need - picked); ++i) {
                auto [l, r] = arcs[i];
                if (picked > 0) {
                    if (l >= first_right || r <= last_right) continue;
                }
                if (extend(i + 1, picked + 1, need, r,
                           picked == 0 ? r : first_right))
                    return true;
            }
            return false;
        };
    for (int k = count; k >= 1; --k)
        if (extend(0, 0, k, 0, 0)) return k;
    return 0;
}

inline int crossing_number(const TangledDiagram& d) { return crossing_number(inflate(d)); }

// ---------------------------------------------------------------------------
// Enumerators. Callback style; each yields every object exactly once.
// ---------------------------------------------------------------------------

/// All set partitions of [n] as diagrams in the standard arc representation
/// (consecutive elements of a block joined), via restricted growth strings.
template <typename F>
void enum_partitions(int n, F&& yield) {
    if (n < 1) fail(errc::out_of_range, "n must be positive");
    if (n > 12) fail(errc::too_large, "enum_partitions limited to n <= 12");
    std::vector<int> rgs(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int maxval) {
        if (i == n) {
            int blocks = maxval + 1;
            std::vector<int> last(static_cast<size_t>(blocks), 0);
            std::vector<Arc> arcs;
            for (int v = 1; v <= n; ++v) {
                int b = rgs[static_cast<size_t>(v - 1)];
                if (last[static_cast<size_t>(b)] != 0)
                    arcs.emplace_back(last[static_cast<size_t>(b)], v);
                last[static_cast<size_t>(b)] = v;
            }
            yield(make_diagram(n, std::move(arcs), {}));
            return;
        }
        for (int b = 0; b <= maxval + 1; ++b) {
            rgs[static_cast<size_t>(i)] = b;
            rec(i + 1, std::max(maxval, b));
        }
    };
    rgs[0] = 0;
    rec(1, 0);
}

/// All perfect matchings on an explicit strictly increasing label set.
template <typename F>
void enum_matchings_on(const std::vector<int>& labels, F&& yield) {
    if (labels.size() % 2 != 0) fail(errc::odd_ground_set, "odd number of labels");
    std::vector<std::pair<int, int>> arcs;
    std::vector<bool> used(labels.size(), false);
    std::function<void(size_t)> rec = [&](size_t lo) {
        while (lo < labels.size() && used[lo]) ++lo;
        if (lo == labels.size()) {
            yield(arcs);
            return;
        }
        used[lo] = true;
        for (size_t j = lo + 1; j < labels.size(); ++j) {
            if (used[j]) continue;
            used[j] = true;
            arcs.emplace_back(labels[lo], labels[j]);
            rec(lo + 1);
            arcs.pop_back();
            used[j] = false;
        }
        used[lo] = false;
    };
    rec(0);
}

/// All (points-1)!! perfect matchings over `points` unprimed vertices.
template <typename F>
void enum_perfect_matchings(int points, F&& yield) {
    if (points < 2 || points % 2 != 0)
        fail(errc::odd_ground_set, "points must be even and positive");
    if (points > 14) fail(errc::too_large, "enum_perfect_matchings limited to 14 points");
    std::vector<int> labels;
    std::vector<int> ground;
    for (int v = 1; v <= points; ++v) {
        labels.push_back(base_label(v));
        ground.push_back(base_label(v));
    }
    enum_matchings_on(labels, [&](const std::vector<std::pair<int, int>>& arcs) {
        InflatedMatching m{ground, arcs};
        std::sort(m.arcs.begin(), m.arcs.end());
        yield(m);
    });
}

namespace detail {

/// Shared core: choose the isolated set and the degree-2 set, then deflate
/// every perfect matching on the inflated ground set. This is exactly the
/// decomposition behind the d-count formula, so it hits each diagram once.
template <typename F>
void enum_tangled_impl(int n, std::optional<int> ell, bool no_isolated, F&& yield) {
    int limit = no_isolated ? 8 : 7;
    if (n < 1) fail(errc::out_of_range, "n must be positive");
    if (n > limit)
        fail(errc::too_large,
             "exhaustive tangled enumeration limited to n <= " + std::to_string(limit));
    for (unsigned iso = 0; iso < (1u << n); ++iso) {
        if (no_isolated && iso != 0) continue;
        std::vector<int> rest;
        for (int v = 1; v <= n; ++v)
            if (!(iso >> (v - 1) & 1)) rest.push_back(v);
        int r = static_cast<int>(rest.size());
        for (unsigned deg2 = 0; deg2 < (1u << r); ++deg2) {
            int l = __builtin_popcount(deg2);
            if (ell && l != *ell) continue;
            if ((r - l + 2 * l) % 2 != 0) continue;
            std::vector<int> labels;
            for (int i = 0; i < r; ++i) {
                labels.push_back(base_label(rest[static_cast<size_t>(i)]));
                if (deg2 >> i & 1) labels.push_back(prime_label(rest[static_cast<size_t>(i)]));
            }
            std::sort(labels.begin(), labels.end());
            std::vector<int> ground;
            for (int v = 1; v <= n; ++v) ground.push_back(base_label(v));
            for (int i = 0; i < r; ++i)
                if (deg2 >> i & 1) ground.push_back(prime_label(rest[static_cast<size_t>(i)]));
            std::sort(ground.begin(), ground.end());
            enum_matchings_on(labels, [&](const std::vector<std::pair<int, int>>& arcs) {
                InflatedMatching m{ground, arcs};
                std::sort(m.arcs.begin(), m.arcs.end());
                yield(deflate(m));
            });
        }
    }
}

} // namespace detail

/// Every tangled diagram over [n], optionally restricted to exactly `ell`
/// vertices of degree 2.
template <typename F>
void enum_tangled(int n, std::optional<int> ell, F&& yield) {
    detail::enum_tangled_impl(n, ell, false, std::forward<F>(yield));
}

inline int degree2_count(const TangledDiagram& d) {
    auto ve = vertex_ends(d);
    int c = 0;
    for (int v = 1; v <= d.n; ++v)
        if (ve[v].degree == 2) ++c;
    return c;
}

/// Exact cardinality of the class by exhaustive generation and filtering.
inline Int oracle_count(const ClassSpec& spec) {
    Int count = 0;
    auto keep = [&](const TangledDiagram& d) {
        if (!satisfies(d, spec.cls)) return;
        if (spec.ell && degree2_count(d) != *spec.ell) return;
        if (spec.k && crossing_number(d) >= *spec.k) return;
        ++count;
    };
    switch (spec.cls) {
        case DiagramClass::partition:
        case DiagramClass::two_regular_partition:
            enum_partitions(spec.n, keep);
            break;
        case DiagramClass::matching_with_isolated:
            detail::enum_tangled_impl(spec.n, 0, false, keep);
            break;
        case DiagramClass::braid_no_isolated:
            // braids have no isolated points, which keeps n = 8 feasible
            detail::enum_tangled_impl(spec.n, spec.ell, true, keep);
            break;
        case DiagramClass::general:
            enum_tangled(spec.n, spec.ell, keep);
            break;
    }
    return count;
}

} // namespace tanglekit
