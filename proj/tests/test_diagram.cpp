#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "tanglekit/diagram.hpp"
#include "tanglekit/oracle.hpp"

using namespace tanglekit;

namespace {

TangledDiagram diag(int n, std::vector<Arc> arcs, std::vector<int> crossed = {}) {
    return make_diagram(n, std::move(arcs), std::move(crossed));
}

} // namespace

TEST_CASE("make_diagram validates inputs") {
    CHECK_NOTHROW(diag(3, {{1, 3}}));
    CHECK_NOTHROW(diag(3, {{1, 2}, {2, 3}}, {2}));

    CHECK_THROWS_MATCHES(diag(1, {{1, 1}}, {1}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::bad_flag;
                         }));
    CHECK_THROWS_MATCHES(diag(2, {{1, 3}}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::out_of_range;
                         }));
    CHECK_THROWS_MATCHES(diag(3, {{1, 2}, {1, 3}, {1, 1}}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::degree_exceeded;
                         }));
    CHECK_THROWS_MATCHES(diag(2, {{1, 2}, {1, 2}, {1, 2}}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::duplicate_arc;
                         }));
    CHECK_THROWS_MATCHES(diag(1, {{1, 1}, {1, 1}}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::duplicate_arc;
                         }));
    // flag on a degree-1 vertex
    CHECK_THROWS_MATCHES(diag(3, {{1, 3}}, {1}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::bad_flag;
                         }));
}

TEST_CASE("doubled arcs are the crossing/nested parallel pair") {
    // both versions of the parallel pair between 1 and 2
    TangledDiagram nested = diag(2, {{1, 2}, {1, 2}});
    TangledDiagram crossing = diag(2, {{1, 2}, {1, 2}}, {1, 2});
    CHECK(nested != crossing);

    // a doubled arc carries one bit: flagging a single endpoint is rejected
    CHECK_THROWS_MATCHES(diag(2, {{1, 2}, {1, 2}}, {1}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::bad_flag;
                         }));

    CHECK(inflate(nested).arcs ==
          std::vector<std::pair<int, int>>{{base_label(1), prime_label(2)},
                                           {prime_label(1), base_label(2)}});
    CHECK(inflate(crossing).arcs ==
          std::vector<std::pair<int, int>>{{base_label(1), base_label(2)},
                                           {prime_label(1), prime_label(2)}});
    CHECK(deflate(inflate(nested)) == nested);
    CHECK(deflate(inflate(crossing)) == crossing);
}

TEST_CASE("classify picks the most specific class") {
    CHECK(classify(diag(3, {{1, 2}, {2, 3}})) == DiagramClass::partition);
    CHECK(classify(diag(2, {{1, 1}, {2, 2}})) == DiagramClass::braid_no_isolated);
    CHECK(classify(diag(4, {{1, 3}, {2, 4}})) == DiagramClass::two_regular_partition);
    // no isolated points, so not matching_with_isolated
    CHECK(satisfies(diag(4, {{1, 3}, {2, 4}}), DiagramClass::matching_with_isolated));
    CHECK_FALSE(has_isolated_vertex(diag(4, {{1, 3}, {2, 4}})));

    CHECK(classify(diag(3, {{1, 2}})) == DiagramClass::matching_with_isolated);
    CHECK(classify(diag(2, {{1, 2}})) == DiagramClass::partition);
    CHECK(classify(diag(2, {{1, 2}, {1, 2}})) == DiagramClass::general);
    CHECK(classify(diag(3, {{1, 2}, {2, 3}}, {2})) == DiagramClass::braid_no_isolated);
}

TEST_CASE("is_two_regular") {
    CHECK_FALSE(is_two_regular(diag(2, {{1, 2}})));
    CHECK(is_two_regular(diag(3, {{1, 3}})));
    CHECK(is_two_regular(diag(4, {})));
    CHECK_THROWS_MATCHES(is_two_regular(diag(1, {{1, 1}})), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::not_a_partition;
                         }));
}

TEST_CASE("inflate resolves degree-2 vertices") {
    // subclass-(2) motif, locally noncrossing
    InflatedMatching m1 = inflate(diag(3, {{1, 2}, {2, 3}}));
    CHECK(m1.arcs == std::vector<std::pair<int, int>>{{base_label(1), base_label(2)},
                                                      {prime_label(2), base_label(3)}});
    CHECK(m1.ground == std::vector<int>{base_label(1), base_label(2), prime_label(2),
                                        base_label(3)});

    // crossing motif
    InflatedMatching m2 = inflate(diag(3, {{1, 2}, {2, 3}}, {2}));
    CHECK(m2.arcs == std::vector<std::pair<int, int>>{{base_label(1), prime_label(2)},
                                                      {base_label(2), base_label(3)}});

    // loop
    InflatedMatching m3 = inflate(diag(1, {{1, 1}}));
    CHECK(m3.arcs == std::vector<std::pair<int, int>>{{base_label(1), prime_label(1)}});
}

TEST_CASE("deflate inverts the inflation examples") {
    auto m = [](std::vector<int> ground, std::vector<std::pair<int, int>> arcs) {
        return make_inflated(std::move(ground), std::move(arcs));
    };
    CHECK(deflate(m({2, 4, 5, 6}, {{2, 4}, {5, 6}})) == diag(3, {{1, 2}, {2, 3}}));
    CHECK(deflate(m({2, 3}, {{2, 3}})) == diag(1, {{1, 1}}));
    CHECK(deflate(m({2, 4, 5, 6}, {{2, 5}, {4, 6}})) == diag(3, {{1, 2}, {2, 3}}, {2}));

    // prime label whose base is unmatched cannot arise from an inflation
    CHECK_THROWS_MATCHES(deflate(m({2, 3, 4}, {{3, 4}})), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::not_deflatable;
                         }));
}

TEST_CASE("deflate(inflate(d)) is the identity and inflate is injective, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::set<InflatedMatching> images;
        long long count = 0;
        enum_tangled(n, std::nullopt, [&](const TangledDiagram& d) {
            InflatedMatching m = inflate(d);
            REQUIRE(deflate(m) == d);
            REQUIRE(m.arcs.size() == d.arcs.size());
            images.insert(m);
            ++count;
        });
        REQUIRE(static_cast<long long>(images.size()) == count);
    }
}

TEST_CASE("classify is stable under appending an isolated vertex") {
    // The braid class requires no isolated points, so it is exempt; the only
    // other change is a no-isolated perfect matching acquiring its first
    // isolated vertex, which moves Partition to MatchingWithIsolated.
    for (int n = 1; n <= 5; ++n) {
        enum_tangled(n, std::nullopt, [&](const TangledDiagram& d) {
            DiagramClass before = classify(d);
            TangledDiagram extended = make_diagram(d.n + 1, d.arcs, d.crossed);
            DiagramClass after = classify(extended);
            if (before == DiagramClass::braid_no_isolated) return;
            if (before == DiagramClass::partition &&
                after == DiagramClass::matching_with_isolated) {
                REQUIRE_FALSE(has_isolated_vertex(d));
                return;
            }
            REQUIRE(after == before);
        });
    }
}

TEST_CASE("diagram literal round trip") {
    TangledDiagram d = parse_diagram("n=5; arcs=(1,3)(3,5); crossed=3");
    CHECK(d.n == 5);
    CHECK(d.arcs == std::vector<Arc>{{1, 3}, {3, 5}});
    CHECK(d.crossed == std::vector<int>{3});
    CHECK(parse_diagram(format_diagram(d)) == d);
    CHECK(parse_diagram("n = 5 ;arcs= ( 1 , 3 ) (3,5)  ; crossed = 3") == d);

    TangledDiagram empty = parse_diagram("n=3; arcs=; crossed=");
    CHECK(empty == diag(3, {}));
}
