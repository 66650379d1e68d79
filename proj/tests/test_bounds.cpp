#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ocnet/bounds.hpp"

using namespace ocnet;

TEST_CASE("single-node table matches the frozen values") {
    BoundTable t = bound_table(1);
    CHECK(t.v == 1);
    CHECK(t.f0 == 9);
    CHECK(t.f1 == 27);
    CHECK(t.c == BigInt("1637019"));
}

TEST_CASE("two-node base bound") {
    CHECK(bound_table(2).f0 == 25);
}

TEST_CASE("rows grow with the node count") {
    BoundTable prev = bound_table(1);
    for (int v = 2; v <= 6; ++v) {
        BoundTable cur = bound_table(v);
        CHECK(cur.f0 > prev.f0);
        CHECK(cur.f1 > prev.f1);
        CHECK(cur.c > prev.c);
        prev = cur;
    }
}

TEST_CASE("derived rows dominate the ones they are built from") {
    for (int v = 1; v <= 5; ++v) {
        BoundTable t = bound_table(v);
        CHECK(t.f1 > t.f0);
        CHECK(t.f2 > t.f1);
        CHECK(t.f3 >= t.f2);
        CHECK(t.f4 >= t.f3);
        CHECK(t.f3p >= t.f3);
        CHECK(t.f4p >= t.f4);
        CHECK(t.c > t.f9);
        CHECK(t.v == v);
    }
}

TEST_CASE("values stay exact far past 64 bits") {
    BoundTable t = bound_table(40);
    CHECK(t.c > BigInt("18446744073709551615"));  // 2^64 - 1
    CHECK(t.c % t.f0 == 0);
}
