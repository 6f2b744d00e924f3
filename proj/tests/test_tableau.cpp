#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tanglekit/tableau.hpp"

using namespace tanglekit;

namespace {

StandardTableau tab(std::vector<std::vector<int>> cells) {
    return StandardTableau{std::move(cells)};
}

} // namespace

TEST_CASE("shape validation") {
    CHECK(Shape(std::vector<int>{3, 1, 0}).rows == std::vector<int>{3, 1});
    CHECK(Shape(std::vector<int>{}).empty());
    CHECK_THROWS_AS(Shape(std::vector<int>{1, 2}), error);
}

TEST_CASE("rsk_insert follows the row insertion rule") {
    CHECK(rsk_insert({}, 5) == tab({{5}}));
    CHECK(rsk_insert(tab({{2, 3}}), 1) == tab({{1, 3}, {2}}));

    StandardTableau t;
    for (int x : {5, 2, 4, 1, 6, 3}) t = rsk_insert(t, x);
    CHECK(t == tab({{1, 3, 6}, {2, 4}, {5}}));

    CHECK_THROWS_MATCHES(rsk_insert(tab({{2, 3}}), 3), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::duplicate_entry; }));
}

TEST_CASE("reverse_bump inverts insertion") {
    auto [t1, e1] = reverse_bump(tab({{1, 3}, {2}}), 1);
    CHECK(t1 == tab({{2, 3}}));
    CHECK(e1 == 1);

    auto [t2, e2] = reverse_bump(tab({{5}}), 0);
    CHECK(t2.empty());
    CHECK(e2 == 5);

    // row 0 of a 2x2 rectangle is not a removable corner
    CHECK_THROWS_MATCHES(reverse_bump(tab({{1, 3}, {2, 4}}), 0), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::not_a_corner; }));
    CHECK_THROWS_MATCHES(reverse_bump(tab({{1}}), 2), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::not_a_corner; }));
}

TEST_CASE("insert then reverse_bump round-trips at every corner") {
    std::mt19937 gen(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        StandardTableau t;
        std::vector<int> values(30);
        std::iota(values.begin(), values.end(), 1);
        std::shuffle(values.begin(), values.end(), gen);
        int len = 1 + static_cast<int>(gen() % 12);
        for (int i = 0; i < len; ++i) t = rsk_insert(t, values[static_cast<size_t>(i)]);
        for (int corner : t.removable_rows()) {
            auto [reduced, exit] = reverse_bump(t, corner);
            REQUIRE(rsk_insert(reduced, exit) == t);
        }
    }
}

TEST_CASE("delete_entry is a right inverse of insertion") {
    StandardTableau t;
    for (int x : {5, 2, 4, 1, 6, 3}) t = rsk_insert(t, x);
    for (int corner : t.removable_rows()) {
        int e = reverse_bump(t, corner).second;
        StandardTableau reduced = delete_entry(t, e);
        CHECK(rsk_insert(reduced, e) == t);
    }
    CHECK_THROWS_MATCHES(delete_entry(t, 6 + 1), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::inconsistent; }));
}
