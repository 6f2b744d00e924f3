#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <set>

#include "tanglekit/bijections.hpp"
#include "tanglekit/counting.hpp"
#include "tanglekit/oracle.hpp"

using namespace tanglekit;

namespace {

TangledDiagram diag(int n, std::vector<Arc> arcs, std::vector<int> crossed = {}) {
    return make_diagram(n, std::move(arcs), std::move(crossed));
}

HalfStep none() { return {HalfStepKind::none, 0}; }
HalfStep add(int row = 1) { return {HalfStepKind::add, row}; }
HalfStep rem(int row = 1) { return {HalfStepKind::remove, row}; }

/// Builds the shape list of a vacillating tableau from half-step kinds.
VacillatingTableau vt_from_steps(const std::vector<HalfStep>& halves) {
    std::vector<Shape> shapes{Shape{}};
    std::vector<int> rows;
    for (const auto& h : halves) {
        if (h.kind == HalfStepKind::add) {
            if (h.row - 1 == static_cast<int>(rows.size())) rows.push_back(0);
            rows[static_cast<size_t>(h.row - 1)] += 1;
        } else if (h.kind == HalfStepKind::remove) {
            rows[static_cast<size_t>(h.row - 1)] -= 1;
        }
        std::vector<int> copy = rows;
        shapes.emplace_back(std::move(copy));
    }
    return VacillatingTableau{std::move(shapes)};
}

bool pair_in(const std::pair<HalfStep, HalfStep>& p,
             const std::vector<std::pair<HalfStep, HalfStep>>& set) {
    return std::find(set.begin(), set.end(), p) != set.end();
}

} // namespace

TEST_CASE("diagram_to_tableau on the basic motifs") {
    // single arc: opened at the even half-step, closed at the odd one
    VacillatingTableau m = diagram_to_tableau(diag(2, {{1, 2}}));
    CHECK(m.shapes == std::vector<Shape>{Shape{}, Shape{}, Shape({1}), Shape{}, Shape{}});
    CHECK(step_pairs(m) == std::vector<std::pair<HalfStep, HalfStep>>{{none(), add()},
                                                                      {rem(), none()}});

    // noncrossing partition vertex: close then open
    VacillatingTableau p = diagram_to_tableau(diag(3, {{1, 2}, {2, 3}}));
    CHECK(step_pairs(p) == std::vector<std::pair<HalfStep, HalfStep>>{
                               {none(), add()}, {rem(), add()}, {rem(), none()}});

    // loop: open then close within the vertex
    VacillatingTableau l = diagram_to_tableau(diag(1, {{1, 1}}));
    CHECK(step_pairs(l) == std::vector<std::pair<HalfStep, HalfStep>>{{add(), rem()}});
}

TEST_CASE("tableau_to_diagram inverts the motifs") {
    CHECK(tableau_to_diagram(vt_from_steps({none(), add(), rem(), none()})) ==
          diag(2, {{1, 2}}));
    CHECK(tableau_to_diagram(vt_from_steps({add(), rem()})) == diag(1, {{1, 1}}));
    CHECK(tableau_to_diagram(vt_from_steps({none(), add(), rem(), add(), rem(), none()})) ==
          diag(3, {{1, 2}, {2, 3}}));
}

TEST_CASE("tableau_to_diagram rejects malformed sequences") {
    // add at the odd half-step with nothing at the even one
    CHECK_THROWS_MATCHES(tableau_to_diagram(vt_from_steps({add(), none()})), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::inconsistent; }));
    // open arc left at the end
    CHECK_THROWS_MATCHES(tableau_to_diagram(VacillatingTableau{
                             {Shape{}, Shape{}, Shape({1})}}),
                         error, Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::inconsistent;
                         }));
    // even length
    CHECK_THROWS_MATCHES(tableau_to_diagram(VacillatingTableau{{Shape{}, Shape{}}}), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::inconsistent; }));
}

TEST_CASE("round trip over all tangled diagrams, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        long long count = 0;
        enum_tangled(n, std::nullopt, [&](const TangledDiagram& d) {
            VacillatingTableau vt = diagram_to_tableau(d);
            REQUIRE(static_cast<int>(vt.shapes.size()) == 2 * n + 1);
            REQUIRE(tableau_to_diagram(vt) == d);
            REQUIRE(vt.max_rows() == crossing_number(d));
            ++count;
        });
        CHECK(count > 0);
    }
}

TEST_CASE("round trip over all valid vacillating tableaux with < 3 rows, length <= 10") {
    // DP-backed enumeration: extend shape sequences one full step pair at a
    // time through the tangled alphabet.
    StepPairSet steps = step_set_tangled(3);
    for (int n = 1; n <= 5; ++n) {
        long long count = 0;
        std::function<void(VacillatingTableau&, int)> extend = [&](VacillatingTableau& vt,
                                                                   int depth) {
            if (depth == n) {
                if (!vt.shapes.back().empty()) return;
                VacillatingTableau roundtrip = diagram_to_tableau(tableau_to_diagram(vt));
                REQUIRE(roundtrip == vt);
                ++count;
                return;
            }
            for (const auto& [first, second] : steps.pairs) {
                const Shape cur = vt.shapes.back();
                std::vector<int> rows = cur.rows;
                auto apply = [&](const HalfStep& h) -> bool {
                    if (h.kind == HalfStepKind::none) return true;
                    size_t i = static_cast<size_t>(h.row - 1);
                    if (h.kind == HalfStepKind::add) {
                        if (i > rows.size()) return false;
                        if (i == rows.size()) rows.push_back(0);
                        rows[i] += 1;
                    } else {
                        if (i >= rows.size()) return false;
                        rows[i] -= 1;
                    }
                    for (size_t r = 0; r + 1 < rows.size(); ++r)
                        if (rows[r] < rows[r + 1]) return false;
                    if (!rows.empty() && rows.back() < 0) return false;
                    while (!rows.empty() && rows.back() == 0) rows.pop_back();
                    return true;
                };
                if (!apply(first)) continue;
                std::vector<int> mid = rows;
                if (!apply(second)) continue;
                vt.shapes.emplace_back(std::move(mid));
                vt.shapes.emplace_back(rows);
                extend(vt, depth + 1);
                vt.shapes.pop_back();
                vt.shapes.pop_back();
            }
        };
        VacillatingTableau vt{{Shape{}}};
        extend(vt, 0);
        // total 3-noncrossing tangled diagrams over [n]
        Int expected = 0;
        for (int ell = 0; ell <= n; ++ell) expected += d_count(n, ell, 3);
        CHECK(Int(count) == expected);
    }
}

TEST_CASE("step alphabets match the subclasses, n <= 5") {
    // row bound n+1 admits every shape a diagram over [n] can reach, so this
    // checks exactly the pair patterns of S_P, S_B and S_M
    for (int n = 1; n <= 5; ++n) {
        auto sp = step_set_partition(n + 1).pairs;
        auto sb = step_set_braid(n + 1).pairs;
        auto sm = step_set_matching(n + 1).pairs;
        enum_partitions(n, [&](const TangledDiagram& d) {
            for (const auto& pr : step_pairs(diagram_to_tableau(d)))
                REQUIRE(pair_in(pr, sp));
        });
        enum_tangled(n, std::nullopt, [&](const TangledDiagram& d) {
            if (satisfies(d, DiagramClass::braid_no_isolated)) {
                // the braid alphabet has no do-nothing pair
                for (const auto& pr : step_pairs(diagram_to_tableau(d)))
                    REQUIRE(pair_in(pr, sb));
            }
        });
        if (n % 2 == 0)
            enum_perfect_matchings(n, [&](const InflatedMatching& m) {
                for (const auto& pr : step_pairs(diagram_to_tableau(deflate(m))))
                    REQUIRE(pair_in(pr, sm));
            });
    }
}

TEST_CASE("theta on the spec examples") {
    CHECK(theta(diag(3, {})) == diag(2, {{1, 1}, {2, 2}}));
    CHECK(theta(diag(3, {{1, 3}})) == diag(2, {{1, 2}}));
    CHECK(theta(diag(4, {{1, 3}, {2, 4}})) == diag(3, {{1, 2}, {2, 3}}, {2}));

    CHECK_THROWS_MATCHES(theta(diag(2, {{1, 2}})), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::not_two_regular_partition;
                         }));
}

TEST_CASE("theta_inv on the spec examples") {
    CHECK(theta_inv(diag(2, {{1, 2}})) == diag(3, {{1, 3}}));
    CHECK(theta_inv(diag(2, {{1, 1}, {2, 2}})) == diag(3, {}));
    CHECK(theta_inv(diag(3, {{1, 2}, {2, 3}}, {2})) == diag(4, {{1, 3}, {2, 4}}));

    CHECK_THROWS_MATCHES(theta_inv(diag(2, {})), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::not_braid; }));
}

TEST_CASE("theta properties over all 2-regular partitions, n <= 7") {
    for (int n = 2; n <= 7; ++n) {
        std::set<TangledDiagram> images;
        long long domain = 0;
        enum_partitions(n, [&](const TangledDiagram& p) {
            if (!is_two_regular(p)) return;
            ++domain;
            TangledDiagram b = theta(p);
            REQUIRE(b.n == n - 1);
            REQUIRE(satisfies(b, DiagramClass::braid_no_isolated));
            REQUIRE(theta_inv(b) == p);
            // arc-shift property
            std::vector<Arc> shifted;
            for (auto [i, j] : p.arcs) shifted.emplace_back(i, j - 1);
            std::vector<Arc> image_nonloops;
            for (auto [i, j] : b.arcs)
                if (i != j) image_nonloops.emplace_back(i, j);
            std::sort(shifted.begin(), shifted.end());
            REQUIRE(shifted == image_nonloops);
            // both sides k-noncrossing for the same k
            int cp = crossing_number(p), cb = crossing_number(b);
            for (int k = 2; k <= 6; ++k) REQUIRE((cp < k) == (cb < k));
            images.insert(b);
        });
        REQUIRE(static_cast<long long>(images.size()) == domain);
    }
}
