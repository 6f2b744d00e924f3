#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bijections.hpp"
#include "integer.hpp"

namespace tanglekit {

inline Int catalan(long long m) {
    if (m < 0) return 0;
    return binomial(2 * m, m) / (m + 1);
}

/// Number of 3-noncrossing perfect matchings on `points` vertices:
/// C_m C_{m+2} - C_{m+1}^2 for points = 2m, and 0 for odd points.
inline Int f3_closed(long long points) {
    if (points < 0 || points % 2 != 0) return 0;
    long long m = points / 2;
    return catalan(m) * catalan(m + 2) - catalan(m + 1) * catalan(m + 1);
}

// ---------------------------------------------------------------------------
// Shape-indexed dynamic programming over vacillating tableaux.
// ---------------------------------------------------------------------------

/// Admitted pairs of half-steps; rows are 1-based and < k.
struct StepPairSet {
    std::vector<std::pair<HalfStep, HalfStep>> pairs;
};

namespace detail {

inline HalfStep hs_none() { return {HalfStepKind::none, 0}; }
inline HalfStep hs_add(int row) { return {HalfStepKind::add, row}; }
inline HalfStep hs_remove(int row) { return {HalfStepKind::remove, row}; }

} // namespace detail

/// S_M: matchings open at the even half-step and close at the odd one.
inline StepPairSet step_set_matching(int k) {
    StepPairSet s;
    for (int h = 1; h < k; ++h) {
        s.pairs.emplace_back(detail::hs_remove(h), detail::hs_none());
        s.pairs.emplace_back(detail::hs_none(), detail::hs_add(h));
    }
    return s;
}

/// S_P: matchings' steps plus do-nothing and close-then-open.
inline StepPairSet step_set_partition(int k) {
    StepPairSet s = step_set_matching(k);
    s.pairs.emplace_back(detail::hs_none(), detail::hs_none());
    for (int h = 1; h < k; ++h)
        for (int l = 1; l < k; ++l)
            s.pairs.emplace_back(detail::hs_remove(h), detail::hs_add(l));
    return s;
}

/// S_B: matchings' steps plus open-then-close (loops and crossed vertices),
/// and no do-nothing pair (braids have no isolated points).
inline StepPairSet step_set_braid(int k) {
    StepPairSet s = step_set_matching(k);
    for (int h = 1; h < k; ++h)
        for (int l = 1; l < k; ++l)
            s.pairs.emplace_back(detail::hs_add(h), detail::hs_remove(l));
    return s;
}

/// Full tangled alphabet: every pair pattern a vertex motif can produce.
inline StepPairSet step_set_tangled(int k) {
    StepPairSet s = step_set_partition(k);
    for (int h = 1; h < k; ++h)
        for (int l = 1; l < k; ++l) {
            s.pairs.emplace_back(detail::hs_add(h), detail::hs_add(l));
            s.pairs.emplace_back(detail::hs_add(h), detail::hs_remove(l));
            s.pairs.emplace_back(detail::hs_remove(h), detail::hs_remove(l));
        }
    return s;
}

/// Number of shape sequences empty -> empty of length 2n with < k rows whose
/// consecutive half-step pairs all lie in `steps`.
inline Int count_vacillating(const StepPairSet& steps, int k, int n) {
    if (k < 2) fail(errc::out_of_range, "k must be at least 2");
    if (n < 0) fail(errc::out_of_range, "n must be nonnegative");
    using ShapeVec = std::vector<int>; // fixed length k-1, weakly decreasing
    auto apply = [&](const ShapeVec& s, const HalfStep& hs) -> std::optional<ShapeVec> {
        if (hs.kind == HalfStepKind::none) return s;
        if (hs.row < 1 || hs.row > k - 1) return std::nullopt;
        ShapeVec t = s;
        int i = hs.row - 1;
        t[static_cast<size_t>(i)] += hs.kind == HalfStepKind::add ? 1 : -1;
        if (t[static_cast<size_t>(i)] < 0) return std::nullopt;
        if (i > 0 && t[static_cast<size_t>(i - 1)] < t[static_cast<size_t>(i)])
            return std::nullopt;
        if (i + 1 < k - 1 && t[static_cast<size_t>(i)] < t[static_cast<size_t>(i + 1)])
            return std::nullopt;
        return t;
    };
    std::map<ShapeVec, Int> cur;
    cur[ShapeVec(static_cast<size_t>(k - 1), 0)] = 1;
    for (int step = 0; step < n; ++step) {
        std::map<ShapeVec, Int> next;
        for (const auto& [shape, ways] : cur) {
            for (const auto& [first, second] : steps.pairs) {
                auto mid = apply(shape, first);
                if (!mid) continue;
                auto end = apply(*mid, second);
                if (!end) continue;
                next[*end] += ways;
            }
        }
        cur = std::move(next);
    }
    auto it = cur.find(ShapeVec(static_cast<size_t>(k - 1), 0));
    return it == cur.end() ? Int(0) : it->second;
}

/// f_k(points): k-noncrossing perfect matchings; closed form for k = 3,
/// shape DP otherwise.
inline Int fk(int k, long long points) {
    if (points < 0 || points % 2 != 0) return 0;
    if (k == 3) return f3_closed(points);
    return count_vacillating(step_set_matching(k), k, static_cast<int>(points));
}

/// d_{ell,k}(n): k-noncrossing tangled diagrams over [n] with exactly ell
/// vertices of degree 2.
inline Int d_count(int n, int ell, int k) {
    if (n < 1) fail(errc::out_of_range, "n must be positive");
    if (ell < 0 || ell > n) return 0;
    Int total = 0;
    for (int i = 0; i <= n; ++i)
        total += binomial(n, i) * binomial(n - i, ell) * fk(k, n - i + ell);
    return total;
}

/// p_{3,2}(n+1) via the 12-term beta sum. The k/(n+1) prefactor is applied
/// once to the full signed sum of integer triple products; divisibility is
/// asserted rather than rounded.
inline Int p32_closed(long long n) {
    if (n < 0) fail(errc::out_of_range, "n must be nonnegative");
    struct Term {
        int k, m, sign;
    };
    static constexpr Term terms[] = {
        {1, 0, +1},  {1, -1, -1}, {1, -4, -1}, {1, -3, +1},
        {3, 4, -1},  {3, 3, +1},  {3, 0, +1},  {3, 1, -1},
        {2, 5, +1},  {2, 4, -1},  {2, 1, -1},  {2, 2, +1},
    };
    Int sum = 0;
    for (long long s = 0; s <= n + 1; ++s) {
        Int b_s = binomial(n + 1, s);
        if (b_s == 0) continue;
        for (const auto& t : terms) {
            Int prod = t.k * b_s * binomial(n + 1, t.k + s) * binomial(n + 1, s + t.m);
            sum += t.sign * prod;
        }
    }
    Int q = sum / (n + 1);
    if (q * (n + 1) != sum)
        fail(errc::inexact_division, "beta sum not divisible by n+1");
    return q;
}

// ---------------------------------------------------------------------------
// Quadrant lattice walks with the braid pair alphabet.
// ---------------------------------------------------------------------------

struct LatticePoint {
    int x = 0, y = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

namespace detail {

// (dx1,dy1) then (dx2,dy2): the eight admitted half-step pairs
inline const std::vector<std::array<int, 4>>& braid_moves() {
    static const std::vector<std::array<int, 4>> moves = {
        {0, 0, 1, 0},  {0, 0, 0, 1},  {-1, 0, 0, 0}, {0, -1, 0, 0},
        {1, 0, -1, 0}, {0, 1, 0, -1}, {1, 0, 0, -1}, {0, 1, -1, 0},
    };
    return moves;
}

template <typename InRegion>
Int walk_count(LatticePoint start, LatticePoint end, int halfsteps, InRegion in_region) {
    if (halfsteps < 0 || halfsteps % 2 != 0)
        fail(errc::odd_length, "walk length must be even and nonnegative");
    int bound = std::max({start.x, start.y, end.x, end.y}) + halfsteps + 1;
    auto idx = [bound](int x, int y) {
        return static_cast<size_t>(x) * static_cast<size_t>(bound + 1) + static_cast<size_t>(y);
    };
    std::vector<Int> cur(static_cast<size_t>(bound + 1) * static_cast<size_t>(bound + 1), 0);
    if (!in_region(start.x, start.y)) return 0;
    cur[idx(start.x, start.y)] = 1;
    for (int step = 0; step < halfsteps / 2; ++step) {
        std::vector<Int> next(cur.size(), 0);
        for (int x = 0; x <= bound; ++x)
            for (int y = 0; y <= bound; ++y) {
                const Int& ways = cur[idx(x, y)];
                if (ways == 0) continue;
                for (const auto& mv : braid_moves()) {
                    int mx = x + mv[0], my = y + mv[1];
                    if (mx < 0 || my < 0 || !in_region(mx, my)) continue;
                    int ex = mx + mv[2], ey = my + mv[3];
                    if (ex < 0 || ey < 0 || ex > bound || ey > bound || !in_region(ex, ey))
                        continue;
                    next[idx(ex, ey)] += ways;
                }
            }
        cur = std::move(next);
    }
    return cur[idx(end.x, end.y)];
}

} // namespace detail

/// Walks of the given half-step count between two points that stay in the
/// first quadrant (touching the diagonal x = y is allowed).
inline Int quadrant_walks(LatticePoint start, LatticePoint end, int halfsteps) {
    return detail::walk_count(start, end, halfsteps, [](int, int) { return true; });
}

/// Direct DP for walks (1,0) -> (1,0) staying strictly inside x > y >= 0.
inline Int region_walks(int halfsteps) {
    return detail::walk_count({1, 0}, {1, 0}, halfsteps,
                              [](int x, int y) { return x > y; });
}

/// Reflection principle: walks avoiding the wall x = y are counted by the
/// difference of two unconstrained quadrant counts.
inline Int reflection_count(int halfsteps) {
    return quadrant_walks({1, 0}, {1, 0}, halfsteps) -
           quadrant_walks({1, 0}, {0, 1}, halfsteps);
}

// ---------------------------------------------------------------------------
// Named result store used by the CLI table emitters.
// ---------------------------------------------------------------------------

struct CountTable {
    std::map<std::pair<std::string, long long>, Int> entries;

    void put(const std::string& label, long long n, Int value) {
        if (value < 0) fail(errc::inconsistent, "negative count");
        entries[{label, n}] = std::move(value);
    }
    const Int& at(const std::string& label, long long n) const {
        return entries.at({label, n});
    }
    bool has(const std::string& label, long long n) const {
        return entries.count({label, n}) != 0;
    }
};

} // namespace tanglekit
