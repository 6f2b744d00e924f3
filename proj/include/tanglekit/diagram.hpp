#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace tanglekit {

using Arc = std::pair<int, int>; // normalized so first <= second; (i,i) is a loop

/// Diagram on vertices 1..n drawn on a horizontal line, arcs in the upper
/// half-plane, every vertex of degree <= 2. A loop contributes 2 to its
/// vertex. `crossed` is the flag set: a degree-2 vertex carries the flag
/// exactly when its two arcs are drawn locally crossing. A non-loop arc may
/// appear twice (two parallel arcs between the same endpoints, drawn either
/// crossing or nested); in that case both endpoints carry the same flag bit.
struct TangledDiagram {
    int n = 0;
    std::vector<Arc> arcs;    // sorted, doubled arcs stored as two equal entries
    std::vector<int> crossed; // sorted flag set

    auto operator<=>(const TangledDiagram&) const = default;
};

enum class DiagramClass {
    matching_with_isolated,
    partition,
    two_regular_partition,
    braid_no_isolated,
    general,
};

inline const char* class_name(DiagramClass c) {
    switch (c) {
        case DiagramClass::matching_with_isolated: return "MatchingWithIsolated";
        case DiagramClass::partition: return "Partition";
        case DiagramClass::two_regular_partition: return "TwoRegularPartition";
        case DiagramClass::braid_no_isolated: return "BraidNoIsolated";
        case DiagramClass::general: return "General";
    }
    return "?";
}

/// Per-vertex incidence summary used by validation, classification and
/// inflation.
struct VertexEnds {
    int degree = 0;     // loop counts 2, every other arc end counts 1
    bool loop = false;
    std::vector<int> in_from;  // partners u of arcs (u, v), u < v
    std::vector<int> out_to;   // partners w of arcs (v, w), w > v
    bool doubled = false;      // member of a doubled (parallel) arc pair
};

inline std::vector<VertexEnds> vertex_ends(const TangledDiagram& d) {
    std::vector<VertexEnds> ve(static_cast<size_t>(d.n) + 1);
    for (size_t i = 0; i < d.arcs.size(); ++i) {
        auto [a, b] = d.arcs[i];
        if (a == b) {
            ve[a].degree += 2;
            ve[a].loop = true;
        } else {
            ve[a].degree += 1;
            ve[b].degree += 1;
            ve[a].out_to.push_back(b);
            ve[b].in_from.push_back(a);
            if (i + 1 < d.arcs.size() && d.arcs[i + 1] == d.arcs[i]) {
                ve[a].doubled = true;
                ve[b].doubled = true;
            }
        }
    }
    for (auto& v : ve) {
        std::sort(v.in_from.begin(), v.in_from.end());
        std::sort(v.out_to.begin(), v.out_to.end());
    }
    return ve;
}

inline bool is_crossed(const TangledDiagram& d, int v) {
    return std::binary_search(d.crossed.begin(), d.crossed.end(), v);
}

inline bool has_isolated_vertex(const TangledDiagram& d) {
    auto ve = vertex_ends(d);
    for (int v = 1; v <= d.n; ++v)
        if (ve[v].degree == 0) return true;
    return false;
}

/// Validates and builds a diagram. Arcs may be given in any endpoint order;
/// they are normalized to (min, max). A non-loop arc listed twice denotes the
/// doubled-arc motif and is accepted when the flags on its two endpoints
/// agree; any third copy, or a repeated loop, is a DuplicateArc.
inline TangledDiagram make_diagram(int n, std::vector<Arc> arcs, std::vector<int> crossed) {
    if (n < 1) fail(errc::out_of_range, "vertex count must be positive");
    for (auto& a : arcs) {
        if (a.first > a.second) std::swap(a.first, a.second);
        if (a.first < 1 || a.second > n)
            fail(errc::out_of_range, "arc endpoint outside [1, n]");
    }
    std::sort(arcs.begin(), arcs.end());
    for (size_t i = 0; i + 1 < arcs.size(); ++i) {
        if (arcs[i] != arcs[i + 1]) continue;
        if (arcs[i].first == arcs[i].second)
            fail(errc::duplicate_arc, "repeated loop");
        if (i + 2 < arcs.size() && arcs[i + 2] == arcs[i])
            fail(errc::duplicate_arc, "arc listed more than twice");
    }
    std::sort(crossed.begin(), crossed.end());
    crossed.erase(std::unique(crossed.begin(), crossed.end()), crossed.end());
    for (int v : crossed)
        if (v < 1 || v > n) fail(errc::out_of_range, "flag on vertex outside [1, n]");

    TangledDiagram d{n, std::move(arcs), std::move(crossed)};
    auto ve = vertex_ends(d);
    for (int v = 1; v <= n; ++v)
        if (ve[v].degree > 2) fail(errc::degree_exceeded, "vertex " + std::to_string(v));
    for (int v : d.crossed) {
        // flag-eligible: exactly two non-loop arc ends
        if (ve[v].loop || ve[v].degree != 2)
            fail(errc::bad_flag, "flag on vertex " + std::to_string(v));
    }
    // a doubled arc carries one crossing bit for the pair
    for (size_t i = 0; i + 1 < d.arcs.size(); ++i) {
        if (d.arcs[i] != d.arcs[i + 1]) continue;
        if (is_crossed(d, d.arcs[i].first) != is_crossed(d, d.arcs[i].second))
            fail(errc::bad_flag, "doubled arc with inconsistent flags");
    }
    return d;
}

/// Class membership predicate. `classify` below returns the most specific
/// class; the predicates themselves are what the enumeration oracle filters
/// on (so e.g. a perfect matching satisfies matching_with_isolated even
/// though classify never names it that).
inline bool satisfies(const TangledDiagram& d, DiagramClass c) {
    auto ve = vertex_ends(d);
    switch (c) {
        case DiagramClass::general:
            return true;
        case DiagramClass::matching_with_isolated: {
            for (int v = 1; v <= d.n; ++v)
                if (ve[v].degree > 1) return false;
            return true;
        }
        case DiagramClass::partition:
        case DiagramClass::two_regular_partition: {
            for (int v = 1; v <= d.n; ++v) {
                if (ve[v].loop) return false;
                if (ve[v].degree == 2) {
                    if (ve[v].in_from.size() != 1 || ve[v].out_to.size() != 1) return false;
                    if (is_crossed(d, v)) return false;
                }
            }
            if (c == DiagramClass::two_regular_partition)
                for (auto [a, b] : d.arcs)
                    if (b == a + 1) return false;
            return true;
        }
        case DiagramClass::braid_no_isolated: {
            for (int v = 1; v <= d.n; ++v) {
                if (ve[v].degree == 0) return false;
                if (ve[v].degree == 2 && !ve[v].loop) {
                    if (ve[v].in_from.size() != 1 || ve[v].out_to.size() != 1) return false;
                    if (!is_crossed(d, v)) return false;
                }
            }
            return true;
        }
    }
    return false;
}

inline DiagramClass classify(const TangledDiagram& d) {
    if (satisfies(d, DiagramClass::two_regular_partition))
        return DiagramClass::two_regular_partition;
    if (satisfies(d, DiagramClass::matching_with_isolated) && has_isolated_vertex(d))
        return DiagramClass::matching_with_isolated;
    if (satisfies(d, DiagramClass::partition)) return DiagramClass::partition;
    if (satisfies(d, DiagramClass::braid_no_isolated))
        return DiagramClass::braid_no_isolated;
    return DiagramClass::general;
}

inline bool is_two_regular(const TangledDiagram& d) {
    if (!satisfies(d, DiagramClass::partition))
        fail(errc::not_a_partition, "2-regularity is a partition property");
    for (auto [a, b] : d.arcs)
        if (b == a + 1) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Inflation: the linear order 1 < 1' < 2 < 2' < ... is encoded by
// j -> 2j and j' -> 2j+1, so label comparisons are plain integer comparisons.
// ---------------------------------------------------------------------------

inline int base_label(int v) { return 2 * v; }
inline int prime_label(int v) { return 2 * v + 1; }
inline int label_vertex(int label) { return label / 2; }
inline bool label_is_prime(int label) { return (label & 1) != 0; }

inline std::string label_str(int label) {
    return std::to_string(label_vertex(label)) + (label_is_prime(label) ? "'" : "");
}

/// Partial matching on a subset of the primed order. Primed labels are
/// present exactly for the degree-2 vertices of the diagram it came from.
struct InflatedMatching {
    std::vector<int> ground;          // strictly increasing encoded labels
    std::vector<std::pair<int, int>> arcs; // first < second, sorted, labels disjoint

    auto operator<=>(const InflatedMatching&) const = default;
};

/// Validating constructor for inflated matchings built by hand (tests, the
/// tableau decoding path).
inline InflatedMatching make_inflated(std::vector<int> ground,
                                      std::vector<std::pair<int, int>> arcs) {
    std::sort(ground.begin(), ground.end());
    if (std::adjacent_find(ground.begin(), ground.end()) != ground.end())
        fail(errc::duplicate_entry, "repeated ground label");
    std::vector<int> used;
    for (auto& a : arcs) {
        if (a.first > a.second) std::swap(a.first, a.second);
        if (a.first == a.second) fail(errc::out_of_range, "arc joins a label to itself");
        for (int e : {a.first, a.second}) {
            if (!std::binary_search(ground.begin(), ground.end(), e))
                fail(errc::out_of_range, "arc endpoint not in ground set");
            used.push_back(e);
        }
    }
    std::sort(used.begin(), used.end());
    if (std::adjacent_find(used.begin(), used.end()) != used.end())
        fail(errc::duplicate_entry, "label incident to two arcs");
    std::sort(arcs.begin(), arcs.end());
    return InflatedMatching{std::move(ground), std::move(arcs)};
}

/// Resolves every degree-2 vertex j into the label pair (j, j'). The local
/// assignment is fixed so that the flag bit always selects the locally
/// crossing inflated pattern:
///   loop (j,j)                  -> (j, j')
///   in (u,j) + out (j,w):  flag -> (u,j'),(j,w)   plain -> (u,j),(j',w)
///   two in (u,j),(v,j) u<v: flag -> (u,j),(v,j')  plain -> (u,j'),(v,j)
///   two out (j,u),(j,w) u<w: flag -> (j,u),(j',w) plain -> (j,w),(j',u)
///   doubled (i,j),(i,j):   flag -> (i,j),(i',j')  plain -> (i,j'),(i',j)
inline InflatedMatching inflate(const TangledDiagram& d) {
    auto ve = vertex_ends(d);
    InflatedMatching m;
    for (int v = 1; v <= d.n; ++v) {
        m.ground.push_back(base_label(v));
        if (ve[v].degree == 2) m.ground.push_back(prime_label(v));
    }

    // label assignment for the two ends of a degree-2 vertex, keyed by
    // (vertex, partner vertex, incoming?) -- unambiguous except for doubled
    // arcs and loops, which are emitted directly.
    std::map<std::tuple<int, int, bool>, int> end_label;
    auto assign = [&](int v, int partner, bool incoming, int label) {
        end_label[{v, partner, incoming}] = label;
    };
    for (int v = 1; v <= d.n; ++v) {
        const auto& e = ve[v];
        if (e.loop || e.doubled || e.degree != 2) continue;
        bool flag = is_crossed(d, v);
        if (e.in_from.size() == 1 && e.out_to.size() == 1) {
            assign(v, e.in_from[0], true, flag ? prime_label(v) : base_label(v));
            assign(v, e.out_to[0], false, flag ? base_label(v) : prime_label(v));
        } else if (e.in_from.size() == 2) {
            int u = e.in_from[0], w = e.in_from[1];
            assign(v, u, true, flag ? base_label(v) : prime_label(v));
            assign(v, w, true, flag ? prime_label(v) : base_label(v));
        } else { // two out-arcs
            int u = e.out_to[0], w = e.out_to[1];
            assign(v, u, false, flag ? base_label(v) : prime_label(v));
            assign(v, w, false, flag ? prime_label(v) : base_label(v));
        }
    }

    auto label_at = [&](int v, int partner, bool incoming) {
        auto it = end_label.find({v, partner, incoming});
        return it == end_label.end() ? base_label(v) : it->second;
    };

    for (size_t i = 0; i < d.arcs.size(); ++i) {
        auto [a, b] = d.arcs[i];
        if (a == b) {
            m.arcs.emplace_back(base_label(a), prime_label(a));
            continue;
        }
        if (i + 1 < d.arcs.size() && d.arcs[i + 1] == d.arcs[i]) {
            if (is_crossed(d, a)) {
                m.arcs.emplace_back(base_label(a), base_label(b));
                m.arcs.emplace_back(prime_label(a), prime_label(b));
            } else {
                m.arcs.emplace_back(base_label(a), prime_label(b));
                m.arcs.emplace_back(prime_label(a), base_label(b));
            }
            ++i; // second copy consumed
            continue;
        }
        m.arcs.emplace_back(label_at(a, b, false), label_at(b, a, true));
        if (m.arcs.back().first > m.arcs.back().second)
            std::swap(m.arcs.back().first, m.arcs.back().second);
    }
    std::sort(m.arcs.begin(), m.arcs.end());
    return m;
}

/// Inverse of inflate. Reconstructs the flag set from the local arc pattern
/// around every (j, j') pair by inverting the assignment table above.
inline TangledDiagram deflate(const InflatedMatching& m) {
    if (m.ground.empty()) fail(errc::not_deflatable, "empty ground set");
    std::map<int, int> partner;
    for (auto [a, b] : m.arcs) {
        if (!partner.emplace(a, b).second || !partner.emplace(b, a).second)
            fail(errc::not_deflatable, "label incident to two arcs");
    }
    for (int label : m.ground)
        if (label < 2) fail(errc::not_deflatable, "label below 1");
    auto in_ground = [&](int label) {
        return std::binary_search(m.ground.begin(), m.ground.end(), label);
    };
    for (auto [a, b] : m.arcs)
        if (!in_ground(a) || !in_ground(b))
            fail(errc::not_deflatable, "arc endpoint outside ground set");

    int n = label_vertex(m.ground.back());
    for (int v = 1; v <= n; ++v)
        if (!in_ground(base_label(v)))
            fail(errc::not_deflatable, "missing base label " + std::to_string(v));

    std::vector<Arc> arcs;
    for (auto [a, b] : m.arcs) {
        int va = label_vertex(a), vb = label_vertex(b);
        arcs.emplace_back(std::min(va, vb), std::max(va, vb));
    }

    std::vector<int> crossed;
    for (int v = 1; v <= n; ++v) {
        if (!in_ground(prime_label(v))) continue;
        auto pa = partner.find(base_label(v));
        auto pb = partner.find(prime_label(v));
        if (pa == partner.end() || pb == partner.end())
            fail(errc::not_deflatable, "primed vertex with an unmatched label");
        int a = pa->second, b = pb->second;
        if (a == prime_label(v)) continue; // loop
        bool flag;
        if (a < base_label(v) && b < base_label(v)) {
            flag = a < b; // two in-arcs
        } else if (a > prime_label(v) && b > prime_label(v)) {
            flag = a < b; // two out-arcs
        } else if (a < base_label(v) && b > prime_label(v)) {
            flag = false; // in at j, out at j'
        } else {
            flag = true; // in at j', out at j
        }
        if (flag) crossed.push_back(v);
    }

    try {
        return make_diagram(n, std::move(arcs), std::move(crossed));
    } catch (const error& e) {
        fail(errc::not_deflatable, std::string("deflation produced an invalid diagram (") +
                                       e.what() + ")");
    }
}

// ---------------------------------------------------------------------------
// Diagram literal: `n=5; arcs=(1,3)(3,5); crossed=3` (whitespace-insensitive)
// ---------------------------------------------------------------------------

inline TangledDiagram parse_diagram(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);

    int n = -1;
    std::vector<Arc> arcs;
    std::vector<int> crossed;
    size_t pos = 0;
    auto read_int = [&](size_t& p) {
        size_t start = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == start) fail(errc::usage, "expected integer in diagram literal");
        return std::stoi(s.substr(start, p - start));
    };
    while (pos < s.size()) {
        size_t eq = s.find('=', pos);
        if (eq == std::string::npos) fail(errc::usage, "malformed diagram literal");
        std::string key = s.substr(pos, eq - pos);
        pos = eq + 1;
        if (key == "n") {
            n = read_int(pos);
        } else if (key == "arcs") {
            while (pos < s.size() && s[pos] == '(') {
                ++pos;
                int a = read_int(pos);
                if (pos >= s.size() || s[pos] != ',') fail(errc::usage, "expected ','");
                ++pos;
                int b = read_int(pos);
                if (pos >= s.size() || s[pos] != ')') fail(errc::usage, "expected ')'");
                ++pos;
                arcs.emplace_back(a, b);
            }
        } else if (key == "crossed") {
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                crossed.push_back(read_int(pos));
                if (pos < s.size() && s[pos] == ',') ++pos;
            }
        } else {
            fail(errc::usage, "unknown key '" + key + "' in diagram literal");
        }
        if (pos < s.size() && s[pos] == ';') ++pos;
    }
    if (n < 1) fail(errc::usage, "diagram literal missing n");
    return make_diagram(n, std::move(arcs), std::move(crossed));
}

inline std::string format_diagram(const TangledDiagram& d) {
    std::ostringstream os;
    os << "n=" << d.n << "; arcs=";
    for (auto [a, b] : d.arcs) os << "(" << a << "," << b << ")";
    os << "; crossed=";
    for (size_t i = 0; i < d.crossed.size(); ++i) {
        if (i) os << ",";
        os << d.crossed[i];
    }
    return os.str();
}

} // namespace tanglekit
