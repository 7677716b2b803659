#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "qpchar/rootsys.hpp"

using qpchar::AlgebraFamily;
using qpchar::highest_root;
using qpchar::positive_roots;
using qpchar::RootCoords;
using qpchar::RootSystem;

TEST_CASE("B rank 2 positive roots") {
    auto roots = positive_roots({AlgebraFamily::B, 2});
    std::vector<RootCoords> expect = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
    CHECK(roots == expect);
}

TEST_CASE("C rank 3 positive roots") {
    auto roots = positive_roots({AlgebraFamily::C, 3});
    CHECK(roots.size() == 9);
    std::vector<RootCoords> expect = {{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 2, 1}, {1, 0, 0},
                                      {1, 1, 0}, {1, 1, 1}, {1, 2, 1}, {2, 2, 1}};
    CHECK(roots == expect);
    CHECK(std::find(roots.begin(), roots.end(), RootCoords{2, 2, 1}) != roots.end());
}

TEST_CASE("A positive roots are the interval sums") {
    CHECK(positive_roots({AlgebraFamily::A, 1}) == std::vector<RootCoords>{{1}});
    auto roots = positive_roots({AlgebraFamily::A, 3});
    std::vector<RootCoords> expect = {{0, 0, 1}, {0, 1, 0}, {0, 1, 1},
                                      {1, 0, 0}, {1, 1, 0}, {1, 1, 1}};
    CHECK(roots == expect);
}

TEST_CASE("highest roots") {
    CHECK(highest_root({AlgebraFamily::B, 3}) == RootCoords{1, 2, 2});
    CHECK(highest_root({AlgebraFamily::C, 3}) == RootCoords{2, 2, 1});
    CHECK(highest_root({AlgebraFamily::A, 2}) == RootCoords{1, 1});
}

TEST_CASE("root counts, coordinate range, ordering, maximality") {
    auto check_family = [](AlgebraFamily fam, int rank, size_t expected_count) {
        auto roots = positive_roots({fam, rank});
        CHECK(roots.size() == expected_count);
        CHECK(std::is_sorted(roots.begin(), roots.end()));
        for (const auto& r : roots) {
            CHECK(r.size() == static_cast<size_t>(rank));
            bool all_zero = true;
            for (int c : r) {
                CHECK(c >= 0);
                CHECK(c <= 2);
                all_zero = all_zero && c == 0;
            }
            CHECK_FALSE(all_zero);
        }
        RootCoords top = highest_root({fam, rank});
        CHECK(std::find(roots.begin(), roots.end(), top) != roots.end());
        for (const auto& r : roots) {
            for (size_t i = 0; i < r.size(); ++i) {
                CHECK(r[i] <= top[i]);
            }
        }
    };
    for (int l = 2; l <= 6; ++l) {
        check_family(AlgebraFamily::B, l, static_cast<size_t>(l) * l);
    }
    for (int l = 3; l <= 6; ++l) {
        check_family(AlgebraFamily::C, l, static_cast<size_t>(l) * l);
    }
    for (int l = 1; l <= 6; ++l) {
        check_family(AlgebraFamily::A, l, static_cast<size_t>(l) * (l + 1) / 2);
    }
}

TEST_CASE("rank bounds are enforced") {
    CHECK_THROWS_AS(positive_roots({AlgebraFamily::B, 1}), std::invalid_argument);
    CHECK_THROWS_AS(positive_roots({AlgebraFamily::C, 2}), std::invalid_argument);
    CHECK_THROWS_AS(positive_roots({AlgebraFamily::A, 0}), std::invalid_argument);
    CHECK_THROWS_AS(highest_root({AlgebraFamily::C, 0}), std::invalid_argument);
}

TEST_CASE("family names round-trip") {
    using qpchar::family_name;
    using qpchar::parse_family;
    for (AlgebraFamily f : {AlgebraFamily::A, AlgebraFamily::B, AlgebraFamily::C}) {
        auto back = parse_family(family_name(f));
        REQUIRE(back.has_value());
        CHECK(*back == f);
    }
    CHECK(parse_family("b") == AlgebraFamily::B);
    CHECK_FALSE(parse_family("D").has_value());
    CHECK_FALSE(parse_family("").has_value());
}
