#include "doctest.h"
#include "lr/partition.hpp"

#include <stdexcept>

using namespace lr;

static Partition P(std::vector<Int> v) { return Partition(std::move(v)); }

TEST_CASE("partition construction validates shape") {
  CHECK_NOTHROW(P({}));
  CHECK_NOTHROW(P({0}));
  CHECK_NOTHROW(P({5, 5, 2, 0, 0}));
  CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(P({3, -1}), std::invalid_argument);
  CHECK_THROWS_AS(P({-2}), std::invalid_argument);
}

TEST_CASE("trailing zeros are significant") {
  CHECK(P({3, 1, 0}) != P({3, 1}));
  CHECK(P({3, 1, 0}).length() == 3);
  CHECK(P({3, 1}).part(3) == 0);
  CHECK(P({3, 1, 0}) == P({3, 1, 0}));
}

TEST_CASE("weight") {
  CHECK(weight(P({})) == 0);
  CHECK(weight(P({10, 9, 5, 3, 1})) == 28);
  CHECK(weight(P({12, 11, 7, 6, 1})) == 37);
  CHECK(weight(P({18, 16, 12, 11, 8})) == 65);
}

TEST_CASE("direct sum merges parts in decreasing order") {
  CHECK(direct_sum(P({10, 6, 1}), P({9, 4})) == P({10, 9, 6, 4, 1}));
  CHECK(direct_sum(P({13, 7, 1}), P({12, 6})) == P({13, 12, 7, 6, 1}));
  CHECK(direct_sum(P({17, 12, 9}), P({18, 13})) == P({18, 17, 13, 12, 9}));
  CHECK(direct_sum(P({}), P({2, 1})) == P({2, 1}));
  CHECK(direct_sum(P({2, 0}), P({1})) == P({2, 1, 0}));
  SUBCASE("length adds and weight adds") {
    auto a = P({5, 3, 3}), b = P({4, 3, 0, 0});
    auto s = direct_sum(a, b);
    CHECK(s.length() == a.length() + b.length());
    CHECK(weight(s) == weight(a) + weight(b));
    CHECK(s == P({5, 4, 3, 3, 3, 0, 0}));
  }
}

TEST_CASE("containment pads with zeros") {
  CHECK(contains(P({3, 2}), P({3, 2})));
  CHECK(contains(P({3, 2}), P({2})));
  CHECK(contains(P({3, 2}), P({3, 2, 0, 0})));
  CHECK(!contains(P({3, 2}), P({4})));
  CHECK(!contains(P({3, 2}), P({3, 2, 1})));
  CHECK(contains(P({}), P({})));
  CHECK(!contains(P({}), P({1})));
}

TEST_CASE("zero padding") {
  CHECK(zero_padded(P({2, 1}), 4) == P({2, 1, 0, 0}));
  CHECK(zero_padded(P({}), 0) == P({}));
  CHECK_THROWS_AS(zero_padded(P({2, 1}), 1), std::invalid_argument);
}

TEST_CASE("string round trip") {
  CHECK(to_string(P({10, 9, 5, 3, 1})) == "(10,9,5,3,1)");
  CHECK(to_string(P({})) == "()");
  CHECK(parse_partition("10,9,5,3,1") == P({10, 9, 5, 3, 1}));
  CHECK(parse_partition("(3,1,0)") == P({3, 1, 0}));
  CHECK(parse_partition("") == P({}));
  CHECK(parse_partition("()") == P({}));
  CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);
}

TEST_CASE("skew shape requires containment") {
  CHECK_NOTHROW(SkewShape(P({3, 2}), P({2})));
  CHECK_THROWS_AS(SkewShape(P({2}), P({3})), std::invalid_argument);
  SkewShape s(P({3, 2}), P({1}));
  CHECK(s.outer == P({3, 2}));
  CHECK(s.inner == P({1, 0}));
}
